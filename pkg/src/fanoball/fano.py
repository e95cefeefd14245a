"""Combinatorial model of a 30-curve configuration with a 135-point locus.

The objects here are labels, not varieties.  A curve label (i, j, beta)
stands for the family of lines through the cone vertex e_i - w^beta e_j,
where w is a primitive cube root of unity; two such families meet exactly
when their index pairs are disjoint, which yields 135 intersection points.
A diagonal torsion automorphism acts on everything through its exponent
vector.  All counts (30 curves, 135 points, 81 group elements, stabilizer
sizes 27 / 3 / 9) are enforced or derivable from these rules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .eisenstein import EisensteinInt, omega_power

INDICES = (1, 2, 3, 4, 5)


@dataclass(frozen=True, slots=True, order=True)
class CurveLabel:
    """One of the 30 curve families: indices i < j and a twist exponent."""

    i: int
    j: int
    beta: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.j <= 5):
            raise ValueError(f"need 1 <= i < j <= 5, got ({self.i}, {self.j})")
        if self.beta not in (0, 1, 2):
            raise ValueError(f"twist exponent must be 0, 1 or 2, got {self.beta}")

    @property
    def index_pair(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def complement(self) -> tuple[int, ...]:
        return tuple(k for k in INDICES if k not in (self.i, self.j))

    def __str__(self) -> str:
        return f"C{self.i}{self.j}^{self.beta}"


@dataclass(frozen=True, slots=True, order=True)
class PointLabel:
    """Intersection point of two curve families with disjoint index pairs.

    Stored unordered: the constructor sorts the two labels, so equal points
    compare equal no matter the argument order.
    """

    first: CurveLabel
    second: CurveLabel

    def __post_init__(self) -> None:
        a, b = self.first, self.second
        if a.index_pair & b.index_pair:
            raise ValueError(f"index pairs overlap: {a} and {b}")
        if (b.i, b.j, b.beta) < (a.i, a.j, a.beta):
            object.__setattr__(self, "first", b)
            object.__setattr__(self, "second", a)

    @property
    def curves(self) -> tuple[CurveLabel, CurveLabel]:
        return (self.first, self.second)

    def __str__(self) -> str:
        return f"{self.first}*{self.second}"


@dataclass(frozen=True, slots=True, order=True)
class TorsionAut:
    """Diagonal automorphism diag(w^t1, ..., w^t5) with t1+...+t5 = 0 mod 3."""

    exponents: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.exponents) != 5:
            raise ValueError("need exactly 5 exponents")
        norm = tuple(t % 3 for t in self.exponents)
        if sum(norm) % 3:
            raise ValueError(f"exponents must sum to 0 mod 3: {self.exponents}")
        object.__setattr__(self, "exponents", norm)

    def compose(self, other: TorsionAut) -> TorsionAut:
        return TorsionAut(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> TorsionAut:
        return TorsionAut(tuple(-t for t in self.exponents))

    def is_identity(self) -> bool:
        return all(t == 0 for t in self.exponents)

    def exponent_at(self, index: int) -> int:
        return self.exponents[index - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(t) for t in self.exponents) + ")"


IDENTITY = TorsionAut((0, 0, 0, 0, 0))


@lru_cache(maxsize=1)
def all_curves() -> tuple[CurveLabel, ...]:
    """The 30 curve labels in (i, j, beta) order."""
    return tuple(CurveLabel(i, j, beta)
                 for i, j in itertools.combinations(INDICES, 2)
                 for beta in range(3))


@lru_cache(maxsize=1)
def all_points() -> tuple[PointLabel, ...]:
    """The 135 intersection points, sorted."""
    pts = {PointLabel(a, b)
           for a, b in itertools.combinations(all_curves(), 2)
           if not (a.index_pair & b.index_pair)}
    return tuple(sorted(pts))


@lru_cache(maxsize=1)
def group_elements() -> tuple[TorsionAut, ...]:
    """The 81 torsion automorphisms, sorted by exponent vector."""
    out = []
    for head in itertools.product(range(3), repeat=4):
        tail = -sum(head) % 3
        out.append(TorsionAut(head + (tail,)))
    return tuple(sorted(out))


def intersection_number(c1: CurveLabel, c2: CurveLabel) -> int:
    """Pairing on curve classes: 1 across disjoint index pairs, -3 on the
    diagonal, 0 otherwise."""
    if c1 == c2:
        return -3
    if not (c1.index_pair & c2.index_pair):
        return 1
    return 0


def act_on_curve(g: TorsionAut, c: CurveLabel) -> CurveLabel:
    """Image of a curve: the vertex e_i - w^beta e_j is scaled into
    e_i - w^(beta + tj - ti) e_j, so only the twist exponent moves."""
    shift = g.exponent_at(c.j) - g.exponent_at(c.i)
    return CurveLabel(c.i, c.j, (c.beta + shift) % 3)


def act_on_point(g: TorsionAut, p: PointLabel) -> PointLabel:
    return PointLabel(act_on_curve(g, p.first), act_on_curve(g, p.second))


def curve_stabilizer(c: CurveLabel) -> tuple[TorsionAut, ...]:
    """The 27 automorphisms sending the curve family to itself."""
    return tuple(g for g in group_elements() if act_on_curve(g, c) == c)


def pointwise_fixer(c: CurveLabel) -> tuple[TorsionAut, ...]:
    """The 3 automorphisms fixing every line of the cone.

    Every line of the cone joins the vertex to a point with support in the
    complementary indices, so the line is preserved exactly when the vertex
    is scaled (t_i = t_j) and the complementary coordinates are scaled
    uniformly.
    """
    comp = c.complement()
    out = []
    for g in curve_stabilizer(c):
        t = g.exponents
        if len({t[k - 1] for k in comp}) == 1:
            out.append(g)
    return tuple(out)


def point_stabilizer(p: PointLabel) -> tuple[TorsionAut, ...]:
    """The 9 automorphisms fixing the point (both curve labels preserved)."""
    return tuple(g for g in group_elements() if act_on_point(g, p) == p)


def stabilizer(x: CurveLabel | PointLabel) -> tuple[TorsionAut, ...]:
    if isinstance(x, CurveLabel):
        return curve_stabilizer(x)
    if isinstance(x, PointLabel):
        return point_stabilizer(x)
    raise TypeError(f"expected CurveLabel or PointLabel, got {type(x).__name__}")


def orbit(x: CurveLabel | PointLabel) -> tuple[CurveLabel, ...] | tuple[PointLabel, ...]:
    act = act_on_curve if isinstance(x, CurveLabel) else act_on_point
    return tuple(sorted({act(g, x) for g in group_elements()}))


def tangent_eigenvalues(g: TorsionAut, p: PointLabel) -> tuple[EisensteinInt, EisensteinInt]:
    """Eigenvalues of a stabilizing automorphism on the two spanning vertices.

    With t_i = t_j and t_s = t_t the two vertices are genuine eigenvectors,
    with eigenvalues w^(t_i) and w^(t_s).  Rejects g outside the stabilizer.
    """
    if act_on_point(g, p) != p:
        raise ValueError(f"{g} does not stabilize {p}")
    return (omega_power(g.exponent_at(p.first.i)),
            omega_power(g.exponent_at(p.second.i)))


def tangent_exponents(g: TorsionAut, p: PointLabel) -> tuple[int, int]:
    """Exponent form of tangent_eigenvalues: the pair (t_i mod 3, t_s mod 3)."""
    if act_on_point(g, p) != p:
        raise ValueError(f"{g} does not stabilize {p}")
    return (g.exponent_at(p.first.i) % 3, g.exponent_at(p.second.i) % 3)


@dataclass(frozen=True, slots=True)
class FixedLocus:
    """Fixed-point data of one nontrivial automorphism."""

    curves: tuple[CurveLabel, ...]
    isolated_points: tuple[PointLabel, ...]


def fixed_locus(g: TorsionAut) -> FixedLocus:
    """Pointwise-fixed curves and isolated fixed points of g != identity.

    A stabilized point counts as isolated when it lies on no pointwise-fixed
    curve; this is a purely combinatorial criterion, independent of the
    eigenvalue test (the two agree, and the test suite verifies it).
    """
    if g.is_identity():
        raise ValueError("identity fixes everything; fixed locus undefined")
    fixed_curves = tuple(c for c in all_curves() if g in pointwise_fixer(c))
    fixed_curve_set = set(fixed_curves)
    isolated = tuple(p for p in all_points()
                     if act_on_point(g, p) == p
                     and p.first not in fixed_curve_set
                     and p.second not in fixed_curve_set)
    return FixedLocus(fixed_curves, isolated)


def isolated_point_union() -> tuple[PointLabel, ...]:
    """Points isolated in the fixed locus of at least one automorphism."""
    seen: set[PointLabel] = set()
    for g in group_elements():
        if g.is_identity():
            continue
        seen.update(fixed_locus(g).isolated_points)
    return tuple(sorted(seen))


def quotient_intersection(pair1: frozenset[int], pair2: frozenset[int]) -> int:
    """Pairing of two orbit classes downstairs: 1 across disjoint index
    pairs, -1 on the diagonal, 0 otherwise."""
    if pair1 == pair2:
        return -1
    if not (pair1 & pair2):
        return 1
    return 0


@dataclass(frozen=True, slots=True)
class OrbitCensus:
    """Orbit decomposition plus the pullback bookkeeping for the quotient.

    pullback maps each downstairs index pair to (multiplicity, upstairs
    orbit): the class upstairs is multiplicity times the sum of the orbit.
    """

    curve_orbits: tuple[tuple[CurveLabel, ...], ...]
    point_orbits: tuple[tuple[PointLabel, ...], ...]
    pullback: dict[frozenset[int], tuple[int, tuple[CurveLabel, ...]]]


def orbit_census() -> OrbitCensus:
    curve_orbits = []
    seen_c: set[CurveLabel] = set()
    for c in all_curves():
        if c not in seen_c:
            orb = orbit(c)
            curve_orbits.append(orb)
            seen_c.update(orb)
    point_orbits = []
    seen_p: set[PointLabel] = set()
    for p in all_points():
        if p not in seen_p:
            orb = orbit(p)
            point_orbits.append(orb)
            seen_p.update(orb)
    pullback = {orb[0].index_pair: (3, orb) for orb in curve_orbits}
    return OrbitCensus(tuple(curve_orbits), tuple(point_orbits), pullback)


def pullback_pairing_check() -> bool:
    """Degree consistency of the pairing under pullback.

    For every unordered pair of downstairs classes, expanding the pulled
    back classes bilinearly over the 30-curve pairing must equal 81 times
    the downstairs pairing.
    """
    census = orbit_census()
    pairs = sorted(census.pullback, key=sorted)
    for pa, pb in itertools.combinations_with_replacement(pairs, 2):
        mult_a, orb_a = census.pullback[pa]
        mult_b, orb_b = census.pullback[pb]
        upstairs = mult_a * mult_b * sum(intersection_number(x, y)
                                         for x in orb_a for y in orb_b)
        if upstairs != 81 * quotient_intersection(pa, pb):
            return False
    return True


def curve_gram_matrix() -> list[list[int]]:
    """The symmetric 30 x 30 pairing matrix in all_curves() order."""
    curves = all_curves()
    return [[intersection_number(a, b) for b in curves] for a in curves]
