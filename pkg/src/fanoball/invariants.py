"""Exact divisor-lattice and characteristic-number bookkeeping.

Covers four layers of arithmetic that feed the verification suites: a
degree-5 del Pezzo Picard lattice with its ten (-1)-classes and their
pair labeling, Euler characteristics of curve configurations and of
stratified covers, canonical-class formulas for branched covers, and log
Chern numbers with the ball-quotient bound.  Everything is exact; floats
never appear.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import fano

Rat = int | Fraction


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """Vector of coefficients in a fixed lattice basis."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Rat]):
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(c) for c in coefficients))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(a + b for a, b in
                            zip(self.coefficients, other.coefficients, strict=True))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(a - b for a, b in
                            zip(self.coefficients, other.coefficients, strict=True))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-a for a in self.coefficients)

    def scaled(self, factor: Rat) -> DivisorClass:
        f = Fraction(factor)
        return DivisorClass(f * a for a in self.coefficients)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coefficients)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


def class_sum(classes: Iterable[DivisorClass]) -> DivisorClass:
    total = None
    for c in classes:
        total = c if total is None else total + c
    if total is None:
        raise ValueError("empty sum has no ambient rank")
    return total


@dataclass(frozen=True, slots=True)
class IntersectionLattice:
    """Free lattice with an integer Gram matrix and a canonical class."""

    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i},{j})")
        if len(self.canonical.coefficients) != n:
            raise ValueError("canonical class has wrong length")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        va, vb = a.coefficients, b.coefficients
        if len(va) != self.rank or len(vb) != self.rank:
            raise ValueError("class length does not match lattice rank")
        total = Fraction(0)
        for i, x in enumerate(va):
            if x:
                row = self.gram[i]
                total += x * sum(g * y for g, y in zip(row, vb) if g)
        return total

    def self_intersection(self, a: DivisorClass) -> Fraction:
        return self.pair(a, a)

    def basis_class(self, i: int) -> DivisorClass:
        return DivisorClass(1 if j == i else 0 for j in range(self.rank))


def diagonal_lattice(diag: Sequence[int], canonical: Sequence[Rat]) -> IntersectionLattice:
    n = len(diag)
    gram = tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))
    return IntersectionLattice(gram, DivisorClass(canonical))


@dataclass(frozen=True, slots=True)
class DelPezzoModel:
    """Degree-5 del Pezzo lattice with its ten (-1)-classes.

    labeling assigns each class an unordered pair from {1..5} so that two
    classes pair to 1 exactly when their labels are disjoint (the Petersen
    adjacency) and to -1 exactly on the diagonal.
    """

    lattice: IntersectionLattice
    ten_classes: tuple[DivisorClass, ...]
    labeling: dict[frozenset[int], DivisorClass]

    def labeled_class(self, i: int, j: int) -> DivisorClass:
        return self.labeling[frozenset((i, j))]

    def total_branch_class(self) -> DivisorClass:
        return class_sum(self.ten_classes)


def _search_pair_labeling(lattice: IntersectionLattice,
                          classes: Sequence[DivisorClass],
                          ) -> dict[frozenset[int], DivisorClass]:
    """Backtracking search for a Petersen-compatible pair labeling.

    Deterministic: classes are taken in the given order and candidate
    labels in sorted order, so the first solution found is canonical.
    """
    labels = [frozenset(p) for p in itertools.combinations(range(1, 6), 2)]
    pairing = [[lattice.pair(a, b) for b in classes] for a in classes]
    assignment: list[frozenset[int] | None] = [None] * len(classes)

    def compatible(k: int, label: frozenset[int]) -> bool:
        for m in range(k):
            expected = 1 if not (label & assignment[m]) else 0
            if pairing[k][m] != expected:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(classes):
            return True
        used = set(assignment[:k])
        for label in labels:
            if label not in used and compatible(k, label):
                assignment[k] = label
                if extend(k + 1):
                    return True
                assignment[k] = None
        return False

    if not extend(0):
        raise ValueError("no pair labeling matches the pairing table")
    return {lab: cls for lab, cls in zip(assignment, classes)}


def del_pezzo_lattice() -> DelPezzoModel:
    """Rank-5 lattice diag(1,-1,-1,-1,-1), canonical (-3,1,1,1,1), and the
    ten (-1)-classes: four basis exceptional classes and six line classes
    through two of them."""
    lattice = diagonal_lattice((1, -1, -1, -1, -1), (-3, 1, 1, 1, 1))
    exceptional = [lattice.basis_class(a) for a in range(1, 5)]
    lines = []
    for a, b in itertools.combinations(range(1, 5), 2):
        coeffs = [1, 0, 0, 0, 0]
        coeffs[a] = -1
        coeffs[b] = -1
        lines.append(DivisorClass(coeffs))
    ten = tuple(exceptional + lines)
    for c in ten:
        if lattice.self_intersection(c) != -1 or lattice.pair(lattice.canonical, c) != -1:
            raise ValueError(f"class {c} is not a (-1)-class")
    labeling = _search_pair_labeling(lattice, ten)
    return DelPezzoModel(lattice, ten, labeling)


@dataclass(frozen=True, slots=True)
class CurveConfig:
    """Curve configuration: components with their Euler characteristics,
    and points listing the components through them (>= 2 each)."""

    components: tuple[tuple[str, int], ...]
    points: tuple[tuple[str, tuple[str, ...]], ...]

    def __post_init__(self) -> None:
        ids = {name for name, _ in self.components}
        if len(ids) != len(self.components):
            raise ValueError("duplicate component ids")
        for pname, through in self.points:
            if len(through) < 2:
                raise ValueError(f"point {pname} lies on fewer than 2 components")
            unknown = set(through) - ids
            if unknown:
                raise ValueError(f"point {pname} references unknown components {unknown}")


def config_euler(cfg: CurveConfig) -> int:
    """Euler characteristic of the configuration: each k-fold point was
    counted k times in the component sum, so k-1 copies come back off."""
    total = sum(chi for _, chi in cfg.components)
    total -= sum(len(through) - 1 for _, through in cfg.points)
    return total


def stratified_euler(strata: Iterable[tuple[int, int]]) -> int:
    """Euler characteristic of a stratified cover: sum of chi times the
    local covering degree over each stratum."""
    return sum(chi * degree for chi, degree in strata)


def solve_stratified_unknown(total: int, known: Iterable[tuple[int, int]],
                             unknown_degree: int) -> Fraction:
    """Solve total = unknown_degree * x + stratified_euler(known) for x."""
    if unknown_degree == 0:
        raise ValueError("unknown stratum must have nonzero degree")
    return Fraction(total - stratified_euler(known), unknown_degree)


def branched_canonical(base: IntersectionLattice,
                       branch: Iterable[tuple[DivisorClass, int]],
                       degree: int) -> Fraction:
    """c1^2 of a degree-d cover branched with weight e_i over class D_i:
    degree * (K + sum (1 - 1/e_i) D_i)^2, exact."""
    if degree <= 0:
        raise ValueError("degree must be positive")
    adjusted = base.canonical
    for cls, weight in branch:
        if weight < 2:
            raise ValueError(f"branch weight must be >= 2, got {weight}")
        adjusted = adjusted + cls.scaled(1 - Fraction(1, weight))
    return degree * base.self_intersection(adjusted)


@dataclass(frozen=True, slots=True)
class LogChern:
    c1_squared: int
    c2: int

    @property
    def satisfies_bound(self) -> bool:
        return self.c1_squared <= 3 * self.c2

    @property
    def is_equality(self) -> bool:
        return self.c1_squared == 3 * self.c2


def log_chern(k_squared: int, k_dot_d: int, d_squared: int,
              chi_surface: int, chi_divisor: int) -> LogChern:
    """Log Chern numbers of a surface with boundary divisor D:
    c1^2 = (K+D)^2 expanded, c2 = chi(surface) - chi(D)."""
    return LogChern(k_squared + 2 * k_dot_d + d_squared,
                    chi_surface - chi_divisor)


def quotient_curve_chi() -> int:
    """Euler characteristic of one image curve downstairs, solved from the
    stratification of the 9-to-1 map restricted to a single curve.

    The source curve has chi 0.  Counts (map degree, number of branch
    points downstairs, fiber size over them) are all read off the orbit
    data rather than pinned.
    """
    curve = fano.all_curves()[0]
    stab = fano.curve_stabilizer(curve)
    fixer = fano.pointwise_fixer(curve)
    degree = len(stab) // len(fixer)
    on_curve = [p for p in fano.all_points() if curve in p.curves]
    orbits: set[tuple[fano.PointLabel, ...]] = set()
    for p in on_curve:
        orbits.add(tuple(sorted({fano.act_on_point(g, p) for g in stab})))
    branch_points = len(orbits)
    fiber_sizes = {len(orb) for orb in orbits}
    if len(fiber_sizes) != 1:
        raise ValueError("branch fibers are not uniform")
    fiber = fiber_sizes.pop()
    open_part = solve_stratified_unknown(0, [(branch_points, fiber)], degree)
    chi = open_part + branch_points
    if chi.denominator != 1:
        raise ValueError("stratified solve did not come out integral")
    return int(chi)


def quotient_curve_config() -> CurveConfig:
    """The ten image curves with the 15 image points, incidences and curve
    Euler characteristics all derived from the orbit census."""
    census = fano.orbit_census()
    chi = quotient_curve_chi()
    name = {}
    components = []
    for orb in census.curve_orbits:
        pair = orb[0].index_pair
        cid = "X" + "".join(str(k) for k in sorted(pair))
        name[pair] = cid
        components.append((cid, chi))
    points = []
    for k, orb in enumerate(census.point_orbits):
        rep = orb[0]
        through = tuple(sorted(name[c.index_pair] for c in rep.curves))
        points.append((f"p{k}", through))
    return CurveConfig(tuple(components), tuple(points))


def source_curve_config() -> CurveConfig:
    """The 30 curves upstairs (each chi 0) with their 135 double points."""
    components = tuple((str(c), 0) for c in fano.all_curves())
    points = tuple((str(p), (str(p.first), str(p.second)))
                   for p in fano.all_points())
    return CurveConfig(components, points)


def surface_euler_from_quotient() -> tuple[int, int, int]:
    """(chi upstairs, chi downstairs, branch config chi) assembled from the
    two curve configurations and the three-level stratification.

    chi downstairs is 2 + rank of the del Pezzo lattice; the upstairs
    number comes out of the 81 / 27 / 9 stratification.
    """
    model = del_pezzo_lattice()
    chi_base = 2 + model.lattice.rank
    cfg = quotient_curve_config()
    chi_branch = config_euler(cfg)
    n_points = len(cfg.points)
    chi_total = stratified_euler([
        (chi_base - chi_branch, 81),
        (chi_branch - n_points, 27),
        (n_points, 9),
    ])
    return chi_total, chi_base, chi_branch


def hirzebruch_invariants(n: int) -> tuple[int, int]:
    """Chern numbers of the degree n^5 cover branched with weight n over
    the ten (-1)-curves of the degree-5 del Pezzo surface."""
    if n < 2:
        raise ValueError(f"cover exponent must be >= 2, got {n}")
    model = del_pezzo_lattice()
    degree = n ** 5
    c1sq = branched_canonical(model.lattice,
                              [(c, n) for c in model.ten_classes], degree)
    if c1sq.denominator != 1:
        raise ValueError("c1^2 did not come out integral")
    cfg = quotient_curve_config()
    chi_base = 2 + model.lattice.rank
    chi_branch = config_euler(cfg)
    n_points = len(cfg.points)
    c2 = stratified_euler([
        (chi_base - chi_branch, degree),
        (chi_branch - n_points, degree // n),
        (n_points, degree // n ** 2),
    ])
    return int(c1sq), c2


@dataclass(frozen=True, slots=True)
class SourceSurfaceModel:
    """Pairing data for the 30-curve surface upstairs.

    Generators are the canonical class (slot 0) followed by the 30 curve
    classes in all_curves() order.  The canonical self-pairing 45 and the
    value 3 for canonical against each curve are input constants; the
    curve-curve block is the combinatorial pairing.
    """

    lattice: IntersectionLattice
    curve_classes: tuple[DivisorClass, ...]

    @property
    def canonical(self) -> DivisorClass:
        return self.lattice.canonical

    def total_curve_class(self) -> DivisorClass:
        return class_sum(self.curve_classes)

    def class_of(self, label: fano.CurveLabel) -> DivisorClass:
        return self.curve_classes[fano.all_curves().index(label)]


def source_surface_lattice() -> SourceSurfaceModel:
    curves = fano.all_curves()
    n = len(curves) + 1
    gram = [[0] * n for _ in range(n)]
    gram[0][0] = 45
    for a in range(len(curves)):
        gram[0][a + 1] = gram[a + 1][0] = 3
        for b in range(len(curves)):
            gram[a + 1][b + 1] = fano.intersection_number(curves[a], curves[b])
    lattice = IntersectionLattice(tuple(tuple(row) for row in gram),
                                  DivisorClass([1] + [0] * len(curves)))
    classes = tuple(lattice.basis_class(a + 1) for a in range(len(curves)))
    return SourceSurfaceModel(lattice, classes)


def disjoint_curve_dozen() -> tuple[fano.CurveLabel, ...]:
    """Twelve pairwise node-free curves upstairs: all families whose index
    pair contains 1 pair to 0 with each other."""
    chosen = tuple(c for c in fano.all_curves() if 1 in (c.i, c.j))
    for a, b in itertools.combinations(chosen, 2):
        if fano.intersection_number(a, b) != 0:
            raise ValueError("selected curves are not pairwise disjoint")
    return chosen
