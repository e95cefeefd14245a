"""Classification of abelian covers branched over a weighted arrangement.

A branched abelian cover of a rational surface is determined by a subgroup
of a finite abelian group attached to the branch data: the kernel of the
map sending a coefficient tuple (a_1, ..., a_s), a_i taken mod e_i, to the
class sum a_i / e_i [D_i] in the rational Picard group modulo integral
classes.  This module computes that kernel exactly via Smith normal form,
decides when one cover factors through another, and compares declared
branch orders for etaleness.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .intlinalg import (FiniteAbelianGroup, IntMatrix, integer_inverse,
                        integer_kernel_basis, smith_normal_form, solve_exact)
from .invariants import DivisorClass, IntersectionLattice


@dataclass(frozen=True, slots=True)
class BranchArrangement:
    """Weighted branch divisors inside a fixed intersection lattice."""

    lattice: IntersectionLattice
    branch: tuple[tuple[DivisorClass, int], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.branch):
            raise ValueError("one label per branch divisor")
        for cls, weight in self.branch:
            if len(cls.coefficients) != self.lattice.rank:
                raise ValueError(f"class {cls} does not live in the lattice")
            if any(c.denominator != 1 for c in cls.coefficients):
                raise ValueError(f"branch class {cls} is not integral")
            if weight < 2:
                raise ValueError(f"branch weight must be >= 2, got {weight}")

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.branch)


def arrangement_from_classes(lattice: IntersectionLattice,
                             classes: Iterable[DivisorClass],
                             weight: int,
                             labels: Iterable[str]) -> BranchArrangement:
    """Uniform-weight arrangement over explicitly given classes."""
    pairs = tuple((c, weight) for c in classes)
    return BranchArrangement(lattice, pairs, tuple(labels))


def _integral_columns(arr: BranchArrangement, lcm: int) -> list[list[int]]:
    """Columns (lcm / e_i) * D_i in lattice coordinates."""
    cols = []
    for cls, weight in arr.branch:
        scale = lcm // weight
        cols.append([scale * int(c) for c in cls.coefficients])
    return cols


def divisor_cover_group(arr: BranchArrangement) -> FiniteAbelianGroup:
    """Group of cover data: kernel of (a_i) -> sum a_i / e_i [D_i] mod Pic.

    Scaling by L = lcm(e_i) turns the kernel condition into a congruence
    M a = 0 (mod L) on integer tuples, so the lifted kernel is the lattice
    of integer solutions and the group is that lattice modulo the sublattice
    where every a_i is divisible by e_i.  Both the invariant factors and
    generators in branch coordinates fall out of one Smith normal form.
    """
    weights = arr.weights
    s = len(weights)
    n = arr.lattice.rank
    lcm = math.lcm(*weights)
    cols = _integral_columns(arr, lcm)
    augmented = IntMatrix([[cols[j][i] for j in range(s)]
                           + [lcm if k == i else 0 for k in range(n)]
                           for i in range(n)])
    kernel = integer_kernel_basis(augmented)
    if len(kernel) != s:
        raise ValueError("kernel projection is not full rank")
    basis = IntMatrix([[vec[k] for vec in kernel] for k in range(s)])
    diag = IntMatrix([[weights[i] if i == j else 0 for j in range(s)]
                      for i in range(s)])
    coords = solve_exact(basis, diag)
    for row in coords:
        for x in row:
            if x.denominator != 1:
                raise ValueError("weight sublattice escaped the kernel lattice")
    relation = IntMatrix([[int(x) for x in row] for row in coords])
    u, d, _ = smith_normal_form(relation)
    adapted = basis @ integer_inverse(u)
    factors = []
    generators = []
    for i, di in enumerate(d.diagonal()):
        if di > 1:
            factors.append(di)
            col = adapted.column(i)
            generators.append(tuple(col[k] % weights[k] for k in range(s)))
    return FiniteAbelianGroup(tuple(factors), tuple(generators), weights)


def brute_force_cover_elements(arr: BranchArrangement) -> list[tuple[int, ...]]:
    """Independent scan of all coefficient tuples; exponential, small s only."""
    weights = arr.weights
    lcm = math.lcm(*weights)
    cols = _integral_columns(arr, lcm)
    n = arr.lattice.rank
    out = []
    for tup in itertools.product(*(range(e) for e in weights)):
        if all(sum(a * cols[j][k] for j, a in enumerate(tup)) % lcm == 0
               for k in range(n)):
            out.append(tup)
    return out


@dataclass(frozen=True, slots=True)
class CoverGroup:
    """Subgroup of a cover-data group, given by generators in the ambient
    coordinate model (residue tuples mod the branch weights)."""

    ambient: FiniteAbelianGroup
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        mods = self._moduli()
        for g in self.generators:
            if len(g) != len(mods):
                raise ValueError("generator length does not match ambient")

    def _moduli(self) -> tuple[int, ...]:
        return self.ambient.moduli or self.ambient.factors

    def elements(self) -> frozenset[tuple[int, ...]]:
        mods = self._moduli()
        zero = (0,) * len(mods)
        seen = {zero}
        frontier = [zero]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = tuple((a + b) % m for a, b, m in zip(x, g, mods))
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    @property
    def order(self) -> int:
        return len(self.elements())

    def contains(self, other: CoverGroup) -> bool:
        if self.ambient != other.ambient:
            raise ValueError("cover groups live in different ambients")
        return other.elements() <= self.elements()

    def canonical_elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.elements()))


def full_cover_group(ambient: FiniteAbelianGroup) -> CoverGroup:
    if ambient.generators:
        return CoverGroup(ambient, ambient.generators)
    units = tuple(tuple(1 if j == i else 0 for j in range(len(ambient.factors)))
                  for i in range(len(ambient.factors)))
    return CoverGroup(ambient, units)


def factorization_exists(g1: CoverGroup, g2: CoverGroup) -> tuple[bool, int | None]:
    """Whether the cover with data g2 factors through the one with data g1.

    True exactly when g1 is contained in g2; the intermediate map then has
    degree |g2| / |g1|.
    """
    if g1.ambient != g2.ambient:
        raise ValueError("cover groups live in different ambients")
    e1, e2 = g1.elements(), g2.elements()
    if e1 <= e2:
        return True, len(e2) // len(e1)
    return False, None


def etale_check(orders1: Sequence[int], orders2: Sequence[int]) -> bool:
    """Covers with identical declared branch orders over every divisor give
    an unramified intermediate map."""
    if len(orders1) != len(orders2):
        raise ValueError("branch order lists have different lengths")
    return tuple(orders1) == tuple(orders2)


def branched_curve_euler(degree: int, base_euler: int,
                         branch_orders: Sequence[int]) -> int:
    """Euler characteristic of a curve cover: degree * chi(base) minus the
    defect degree - degree/e at each branch point."""
    total = degree * base_euler
    for e in branch_orders:
        if degree % e:
            raise ValueError(f"branch order {e} does not divide degree {degree}")
        total -= degree - degree // e
    return total


def subgroup_census(ambient: FiniteAbelianGroup, index: int,
                    ) -> tuple[int, tuple[CoverGroup, ...]]:
    """All subgroups of the given index in an elementary abelian group.

    Subgroups correspond to row spaces of reduced row echelon forms over
    the prime field, so the enumeration is exact and canonically ordered.
    """
    if index == 1:
        return 1, (full_cover_group(ambient),)
    if not ambient.factors:
        return 0, ()
    p = ambient.exponent
    if not ambient.is_elementary(p):
        raise ValueError("census implemented for elementary abelian groups only")
    k = 0
    rest = index
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"index {index} is not a power of the exponent {p}")
    r = len(ambient.factors)
    if k > r:
        return 0, ()
    m = r - k
    mods = ambient.moduli or ambient.factors
    if ambient.generators:
        coord_gens = ambient.generators
    else:
        coord_gens = tuple(tuple(1 if j == i else 0 for j in range(r))
                           for i in range(r))

    def to_coords(row: Sequence[int]) -> tuple[int, ...]:
        acc = [0] * len(mods)
        for coeff, gen in zip(row, coord_gens):
            if coeff:
                for t, g in enumerate(gen):
                    acc[t] = (acc[t] + coeff * g) % mods[t]
        return tuple(acc)

    reps = []
    if m == 0:
        reps.append(CoverGroup(ambient, ()))
    else:
        for pivots in itertools.combinations(range(r), m):
            free = [[] for _ in range(m)]
            pivot_set = set(pivots)
            for i in range(m):
                free[i] = [j for j in range(pivots[i] + 1, r)
                           if j not in pivot_set]
            slots = [(i, j) for i in range(m) for j in free[i]]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * r for _ in range(m)]
                for i in range(m):
                    rows[i][pivots[i]] = 1
                for (i, j), v in zip(slots, values):
                    rows[i][j] = v
                gens = tuple(to_coords(row) for row in rows)
                reps.append(CoverGroup(ambient, gens))
    return len(reps), tuple(reps)


def parse_arrangement(text: str, source: str = "<string>") -> BranchArrangement:
    """Parse the line-oriented arrangement format.

    Layout: "rank N"; "gram" followed by N rows of N integers; "canonical"
    with N integers; then "branch c1 .. cN weight e [label]" lines.  Blank
    lines and text after "#" are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))

    def fail(lineno: int, message: str) -> ValueError:
        return ValueError(f"{source}:{lineno}: {message}")

    def take() -> tuple[int, str]:
        if not lines:
            raise ValueError(f"{source}: unexpected end of file")
        return lines.pop(0)

    def ints(tokens: list[str], lineno: int) -> list[int]:
        out = []
        for tok in tokens:
            try:
                out.append(int(tok))
            except ValueError:
                raise fail(lineno, f"expected integer, got {tok!r}") from None
        return out

    lineno, head = take()
    tokens = head.split()
    if len(tokens) != 2 or tokens[0] != "rank":
        raise fail(lineno, f"expected 'rank N', got {head!r}")
    rank = ints(tokens[1:], lineno)[0]
    if rank < 1:
        raise fail(lineno, "rank must be positive")

    lineno, head = take()
    if head != "gram":
        raise fail(lineno, f"expected 'gram', got {head!r}")
    gram = []
    for _ in range(rank):
        lineno, row = take()
        values = ints(row.split(), lineno)
        if len(values) != rank:
            raise fail(lineno, f"expected {rank} integers in gram row")
        gram.append(tuple(values))

    lineno, head = take()
    tokens = head.split()
    if tokens[0] != "canonical":
        raise fail(lineno, f"expected 'canonical', got {tokens[0]!r}")
    canonical = ints(tokens[1:], lineno)
    if len(canonical) != rank:
        raise fail(lineno, f"expected {rank} canonical coefficients")

    try:
        lattice = IntersectionLattice(tuple(gram), DivisorClass(canonical))
    except ValueError as exc:
        raise fail(lineno, str(exc)) from None

    branch = []
    labels = []
    while lines:
        lineno, head = take()
        tokens = head.split()
        if tokens[0] != "branch":
            raise fail(lineno, f"expected 'branch', got {tokens[0]!r}")
        if len(tokens) < rank + 3:
            raise fail(lineno, "branch line too short")
        coeffs = ints(tokens[1:rank + 1], lineno)
        if tokens[rank + 1] != "weight":
            raise fail(lineno, f"expected 'weight', got {tokens[rank + 1]!r}")
        weight = ints(tokens[rank + 2:rank + 3], lineno)[0]
        rest = tokens[rank + 3:]
        if len(rest) > 1:
            raise fail(lineno, f"unexpected trailing tokens {rest[1:]!r}")
        label = rest[0] if rest else f"D{len(branch) + 1}"
        if weight < 2:
            raise fail(lineno, f"branch weight must be >= 2, got {weight}")
        branch.append((DivisorClass(coeffs), weight))
        labels.append(label)
    if not branch:
        raise ValueError(f"{source}: no branch divisors")
    return BranchArrangement(lattice, tuple(branch), tuple(labels))


def load_arrangement(path: str) -> BranchArrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read(), source=path)


def load_bundled(name: str) -> BranchArrangement:
    """Load one of the arrangements shipped with the package."""
    ref = resources.files(f"{__package__}.data").joinpath(name)
    return parse_arrangement(ref.read_text(encoding="utf-8"), source=name)


def bundled_names() -> tuple[str, ...]:
    ref = resources.files(f"{__package__}.data")
    return tuple(sorted(entry.name for entry in ref.iterdir()
                        if entry.name.endswith(".arr")))
