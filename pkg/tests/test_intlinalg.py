"""Exact integer linear algebra: Smith form, kernels, abelian invariants."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanoball.intlinalg import (
    FiniteAbelianGroup,
    IntMatrix,
    abelian_group_from_factors,
    integer_inverse,
    integer_kernel_basis,
    invariant_factors,
    kernel_mod_p,
    rank_mod_p,
    rational_inverse,
    smith_normal_form,
    solve_exact,
)

matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9),
                     min_size=c, max_size=c),
            min_size=r, max_size=r).map(IntMatrix)))


def _det(m: IntMatrix) -> Fraction:
    n = m.rows
    rows = [[Fraction(x) for x in row] for row in m.entries]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / rows[col][col]
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


@settings(max_examples=150)
@given(matrices)
def test_smith_form_decomposition(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(_det(u)) == 1
    assert abs(_det(v)) == 1
    assert d.is_diagonal()
    diag = [x for x in d.diagonal() if x]
    assert all(x > 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0


def test_smith_form_fixed_example():
    m = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert invariant_factors(m) == [2, 6, 12]


def test_smith_form_rectangular_and_zero():
    assert invariant_factors(IntMatrix([[0, 0], [0, 0]])) == []
    m = IntMatrix([[1, 2, 3], [4, 5, 6]])
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert invariant_factors(m) == [1, 3]


@settings(max_examples=100)
@given(matrices)
def test_integer_kernel_annihilates(m):
    basis = integer_kernel_basis(m)
    for vec in basis:
        image = m @ IntMatrix([[x] for x in vec])
        assert all(entry == [0] for entry in image.entries)
    n_rank = sum(1 for x in invariant_factors(m) if x)
    assert len(basis) == m.cols - n_rank


def test_rational_inverse_round_trip():
    m = IntMatrix([[2, 1], [1, 1]])
    inv = rational_inverse(m)
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    with pytest.raises(ValueError):
        rational_inverse(IntMatrix([[1, 2], [2, 4]]))


def test_integer_inverse_requires_unimodularity():
    m = IntMatrix([[1, 1], [0, 1]])
    assert integer_inverse(m) @ m == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        integer_inverse(IntMatrix([[2, 0], [0, 1]]))


def test_solve_exact_solves():
    b = IntMatrix([[2, 0], [0, 3]])
    target = IntMatrix([[1, 0], [0, 1]])
    x = solve_exact(b, target)
    assert x == [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(1, 3)]]


def _brute_kernel_mod_p(m: IntMatrix, p: int) -> set:
    vectors = set()
    for candidate in itertools.product(range(p), repeat=m.cols):
        image = [sum(m.entries[r][c] * candidate[c] for c in range(m.cols)) % p
                 for r in range(m.rows)]
        if all(x == 0 for x in image):
            vectors.add(candidate)
    return vectors


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(min_value=-4, max_value=4),
                         min_size=3, max_size=3),
                min_size=2, max_size=3).map(IntMatrix))
def test_kernel_mod_p_spans_the_brute_kernel(m):
    p = 3
    basis = kernel_mod_p(m, p)
    spanned = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        vec = tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) % p
                    for k in range(m.cols))
        spanned.add(vec)
    assert spanned == _brute_kernel_mod_p(m, p)
    assert len(basis) == m.cols - rank_mod_p(m, p)


def test_kernel_mod_p_requires_prime():
    with pytest.raises(ValueError):
        kernel_mod_p(IntMatrix([[1]]), 4)


def test_finite_abelian_group_describe():
    assert abelian_group_from_factors([]).describe() == "1"
    assert abelian_group_from_factors([3, 3, 3, 3, 3]).describe() == "(Z/3)^5"
    assert abelian_group_from_factors([2, 6, 6]).describe() == "Z/2 x (Z/6)^2"
    assert abelian_group_from_factors([1, 1, 5]).describe() == "Z/5"


def test_finite_abelian_group_invariants():
    g = abelian_group_from_factors([3, 3])
    assert g.order == 9
    assert g.exponent == 3
    assert g.is_elementary(3)
    assert not g.is_trivial()
    trivial = abelian_group_from_factors([1])
    assert trivial.is_trivial()
    assert trivial.order == 1


def test_finite_abelian_group_rejects_bad_chain():
    with pytest.raises(ValueError):
        FiniteAbelianGroup((3, 2))
    with pytest.raises(ValueError):
        FiniteAbelianGroup((0,))


def test_int_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix([])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
