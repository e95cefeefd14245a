"""Exact arithmetic in Z[w], the ring of Eisenstein integers.

Here w is a primitive cube root of unity, so w**2 = -1 - w.  Elements are
stored as integer pairs (a, b) meaning a + b*w; all operations are exact.
The prime lambda = 1 - w sits above 3 (its norm is 3, and lambda**2 is a
unit multiple of 3), and divisibility by powers of lambda is the congruence
test used throughout the lattice machinery.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    """a + b*w with integer coefficients, w a primitive cube root of unity."""

    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("coefficients must be integers")

    def __add__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd*w^2, w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EisensteinInt:
        if n < 0:
            raise ValueError("negative powers are not defined in Z[w]")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> EisensteinInt:
        """Complex conjugate: w maps to w^2 = -1 - w."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """Field norm a^2 - a*b + b^2; always a nonnegative integer."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divide_exact(self, other: EisensteinInt | int) -> EisensteinInt:
        """Return self / other, raising ValueError unless it is exact."""
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        num = self * other.conj()
        if num.a % n or num.b % n:
            raise ValueError(f"{other} does not divide {self}")
        return EisensteinInt(num.a // n, num.b // n)

    def divides(self, other: EisensteinInt) -> bool:
        n = self.norm()
        if n == 0:
            return other.is_zero()
        num = other * self.conj()
        return num.a % n == 0 and num.b % n == 0

    def to_complex(self) -> complex:
        return self.a + self.b * _OMEGA_NUMERIC

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}w"

    @classmethod
    def parse(cls, token: str) -> EisensteinInt:
        """Parse an "a+bw" token; a bare integer is read as b = 0."""
        token = token.strip().replace(" ", "")
        m = _TOKEN_RE.fullmatch(token)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = _INT_RE.fullmatch(token)
        if m:
            return cls(int(token), 0)
        raise ValueError(f"cannot parse Eisenstein integer from {token!r}")


_TOKEN_RE = re.compile(r"([+-]?\d+)([+-]\d+)w")
_INT_RE = re.compile(r"[+-]?\d+")
_OMEGA_NUMERIC = complex(-0.5, math.sqrt(3.0) / 2.0)


def _coerce(x: EisensteinInt | int) -> EisensteinInt:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    return NotImplemented


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
# The ramified prime above 3: norm(LAMBDA) = 3 and LAMBDA^2 = -3w.
LAMBDA = EisensteinInt(1, -1)

#: The six units of Z[w]: +-1, +-w, +-w^2.
UNITS = (ONE, OMEGA, OMEGA * OMEGA, -ONE, -OMEGA, -(OMEGA * OMEGA))


def omega_power(k: int) -> EisensteinInt:
    """w**k for any integer exponent (reduced mod 3)."""
    return (ONE, OMEGA, EisensteinInt(-1, -1))[k % 3]


def lambda_valuation(x: EisensteinInt) -> int | float:
    """Largest k with lambda^k dividing x; math.inf for x = 0.

    Computed by repeated exact division (x / lambda = x * (2 + w) / 3),
    which avoids any unit bookkeeping.
    """
    if x.is_zero():
        return math.inf
    k = 0
    conj_lambda = LAMBDA.conj()  # 2 + w, with lambda * (2 + w) = 3
    while True:
        t = x * conj_lambda
        if t.a % 3 or t.b % 3:
            return k
        x = EisensteinInt(t.a // 3, t.b // 3)
        k += 1
