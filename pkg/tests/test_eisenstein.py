"""Ring arithmetic in Z[w]: axioms, norms, divisibility, parsing."""

import math

import pytest
from hypothesis import given, strategies as st

from fanoball.eisenstein import (
    LAMBDA,
    OMEGA,
    ONE,
    UNITS,
    ZERO,
    EisensteinInt,
    lambda_valuation,
    omega_power,
)

small = st.integers(min_value=-50, max_value=50)
elements = st.builds(EisensteinInt, small, small)


def test_omega_is_cube_root_of_unity():
    assert OMEGA * OMEGA * OMEGA == ONE
    assert OMEGA * OMEGA == EisensteinInt(-1, -1)
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO


def test_omega_power_cycles():
    assert omega_power(0) == ONE
    assert omega_power(1) == OMEGA
    assert omega_power(2) == OMEGA * OMEGA
    assert omega_power(3) == ONE
    assert omega_power(-1) == OMEGA * OMEGA


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x - x == ZERO


@given(elements, elements)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(elements)
def test_norm_matches_complex_magnitude(x):
    assert math.isclose(x.norm(), abs(x.to_complex()) ** 2,
                        rel_tol=1e-9, abs_tol=1e-9)


@given(elements)
def test_conjugation_preserves_norm_and_is_involutive(x):
    assert x.conj().conj() == x
    assert x.conj().norm() == x.norm()
    assert (x * x.conj()) == EisensteinInt(x.norm(), 0)


def test_units_are_exactly_the_norm_one_elements():
    assert len(set(UNITS)) == 6
    for u in UNITS:
        assert u.norm() == 1
        assert u.is_unit()
    found = {EisensteinInt(a, b) for a in range(-2, 3) for b in range(-2, 3)
             if EisensteinInt(a, b).norm() == 1}
    assert found == set(UNITS)


def test_lambda_squares_to_unit_times_three():
    assert LAMBDA.norm() == 3
    ratio = (LAMBDA * LAMBDA).divide_exact(EisensteinInt(3, 0))
    assert ratio.is_unit()
    assert LAMBDA * EisensteinInt(2, 1) == EisensteinInt(3, 0)


@given(elements, elements)
def test_divide_exact_inverts_multiplication(x, y):
    if x.is_zero():
        return
    assert (x * y).divide_exact(x) == y


def test_divide_exact_rejects_inexact():
    with pytest.raises(ValueError):
        ONE.divide_exact(LAMBDA)
    with pytest.raises(ZeroDivisionError):
        ONE.divide_exact(ZERO)


@given(elements)
def test_divides_agrees_with_divide_exact(x):
    assert LAMBDA.divides(x * LAMBDA)
    if not LAMBDA.divides(x):
        with pytest.raises(ValueError):
            x.divide_exact(LAMBDA)


def test_lambda_valuation_basics():
    assert lambda_valuation(ZERO) == math.inf
    assert lambda_valuation(ONE) == 0
    assert lambda_valuation(LAMBDA) == 1
    assert lambda_valuation(EisensteinInt(3, 0)) == 2
    assert lambda_valuation(EisensteinInt(9, 0)) == 4
    assert lambda_valuation(LAMBDA * LAMBDA * LAMBDA) == 3


@given(elements, st.integers(min_value=0, max_value=5))
def test_lambda_valuation_shifts_under_multiplication(x, k):
    if x.is_zero():
        return
    shifted = x
    for _ in range(k):
        shifted = shifted * LAMBDA
    assert lambda_valuation(shifted) == lambda_valuation(x) + k


@given(elements)
def test_token_round_trip(x):
    assert EisensteinInt.parse(str(x)) == x


def test_parse_accepts_plain_integers_and_signed_forms():
    assert EisensteinInt.parse("7") == EisensteinInt(7, 0)
    assert EisensteinInt.parse("-2+3w") == EisensteinInt(-2, 3)
    assert EisensteinInt.parse("0-1w") == EisensteinInt(0, -1)


def test_parse_rejects_garbage():
    for bad in ("", "w+1", "1+w2", "x", "1+2w+3", "w"):
        with pytest.raises(ValueError):
            EisensteinInt.parse(bad)


def test_parse_tolerates_embedded_spaces():
    assert EisensteinInt.parse("1 + 2w") == EisensteinInt(1, 2)


@given(elements, small)
def test_integer_coercion_in_arithmetic(x, n):
    assert x + n == x + EisensteinInt(n, 0)
    assert x * n == x * EisensteinInt(n, 0)
    assert n - x == EisensteinInt(n, 0) - x


@given(elements, st.integers(min_value=0, max_value=8))
def test_power_matches_repeated_multiplication(x, n):
    acc = ONE
    for _ in range(n):
        acc = acc * x
    assert x ** n == acc
