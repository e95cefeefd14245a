"""Exact integer linear algebra: Smith normal form, kernels, abelian groups.

Everything here runs on arbitrary-precision Python integers.  The Smith
normal form uses a deterministic pivot rule (smallest nonzero absolute
value, ties broken by row-major position) so that transform matrices, and
hence every downstream report, are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """Dense integer matrix with exact arithmetic."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[int]]):
        if not entries or not entries[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError("entries must be integers")
        self.entries = [list(row) for row in entries]
        self.rows = len(entries)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)])

    def copy(self) -> IntMatrix:
        return IntMatrix(self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.entries[i]
            for k in range(self.cols):
                a = row[k]
                if a:
                    orow = other.entries[k]
                    orow_out = out[i]
                    for j in range(other.cols):
                        orow_out[j] += a * orow[j]
        return IntMatrix(out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, IntMatrix)
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries!r})"

    def column(self, j: int) -> list[int]:
        return [self.entries[i][j] for i in range(self.rows)]

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ m @ V == D in Smith form, U and V unimodular.

    Pivot selection: the entry of smallest nonzero absolute value in the
    remaining submatrix, ties broken by row-major order.
    """
    a = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    u = IntMatrix.identity(rows).entries
    v = IntMatrix.identity(cols).entries

    def swap_rows(i1, i2):
        if i1 != i2:
            a[i1], a[i2] = a[i2], a[i1]
            u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        if j1 != j2:
            for row in a:
                row[j1], row[j2] = row[j2], row[j1]
            for row in v:
                row[j1], row[j2] = row[j2], row[j1]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        arow, urow = a[src], u[src]
        for j in range(cols):
            a[dst][j] += q * arow[j]
        for j in range(rows):
            u[dst][j] += q * urow[j]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def pick_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    t = 0
    while t < min(rows, cols):
        found = pick_pivot(t)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)
        # clear row and column t; remainders force a re-pick of the pivot
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        dirty = True
            if not dirty:
                break
            found = pick_pivot(t)
            _, pi, pj = found
            swap_rows(t, pi)
            swap_cols(t, pj)
        # enforce divisibility of the remaining block by the pivot
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    offender = (i, j)
                    break
            if offender:
                break
        if offender:
            add_col(offender[1], t, 1)
            continue  # redo position t with the polluted column
        if a[t][t] < 0:
            for j in range(cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1

    return IntMatrix(u), IntMatrix(a), IntMatrix(v)


def invariant_factors(m: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form of m."""
    _, d, _ = smith_normal_form(m)
    return [x for x in d.diagonal() if x]


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    """Exact inverse of a square nonsingular integer matrix."""
    if m.rows != m.cols:
        raise ValueError("matrix is not square")
    n = m.rows
    aug = [[Fraction(m.entries[i][j]) for j in range(n)]
           + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def integer_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, verified to be integral."""
    inv = rational_inverse(m)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return IntMatrix(out)


def solve_exact(b: IntMatrix, target: IntMatrix) -> list[list[Fraction]]:
    """Solve b @ x == target exactly (b square nonsingular)."""
    binv = rational_inverse(b)
    n = b.rows
    return [[sum(binv[i][k] * target.entries[k][j] for k in range(n))
             for j in range(target.cols)] for i in range(n)]


def integer_kernel_basis(m: IntMatrix) -> list[list[int]]:
    """Basis of the integer kernel lattice {x : m @ x = 0} (saturated)."""
    _, d, v = smith_normal_form(m)
    diag = d.diagonal()
    rank = sum(1 for x in diag if x)
    return [v.column(j) for j in range(rank, m.cols)]


def kernel_mod_p(m: IntMatrix, p: int) -> list[tuple[int, ...]]:
    """Echelonized basis of the kernel of m over the field with p elements.

    Deterministic: columns are eliminated left to right, and each basis
    vector has a 1 in its free column with zeros in the other free columns.
    """
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    rows = [[x % p for x in row] for row in m.entries]
    cols = m.cols
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivot_of_col[c] = r
        r += 1
    basis = []
    free_cols = [c for c in range(cols) if c not in pivot_of_col]
    for fc in free_cols:
        vec = [0] * cols
        vec[fc] = 1
        for c, pr in pivot_of_col.items():
            vec[c] = (-rows[pr][fc]) % p
        basis.append(tuple(vec))
    return basis


def rank_mod_p(m: IntMatrix, p: int) -> int:
    return m.cols - len(kernel_mod_p(m, p))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group by invariant factors d1 | d2 | ... (each > 1).

    An optional coordinate model records generators as residue vectors in
    an ambient product of cyclic groups prod Z/moduli[i].
    """

    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...] = field(default=())
    moduli: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        for d, dn in zip(self.factors, self.factors[1:]):
            if dn % d:
                raise ValueError("factors must form a divisibility chain")
        if any(d < 2 for d in self.factors):
            raise ValueError("factors must exceed 1")
        if self.generators and len(self.generators) != len(self.factors):
            raise ValueError("one generator per invariant factor")

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def is_trivial(self) -> bool:
        return not self.factors

    def is_elementary(self, p: int) -> bool:
        return all(d == p for d in self.factors)

    def describe(self) -> str:
        """Canonical text form, e.g. "(Z/3)^5" or "Z/2 x (Z/6)^2" or "1"."""
        if not self.factors:
            return "1"
        parts = []
        i = 0
        while i < len(self.factors):
            j = i
            while j < len(self.factors) and self.factors[j] == self.factors[i]:
                j += 1
            count = j - i
            base = f"Z/{self.factors[i]}"
            parts.append(base if count == 1 else f"({base})^{count}")
            i = j
        return " x ".join(parts)


def abelian_group_from_factors(factors: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(d for d in factors if d > 1))
