"""Ball 5-tuples and hypergeometric periods.

A weight tuple is five rationals in (0, 1) summing to 2.  The integrality
test inverts 1 - mu_i - mu_j over all pairs (pairs summing to at least 1
are exempt); the enumeration walks all tuples with bounded denominator.
Periods are integrals of prod (z - x_k)^(-mu_k) between two of the points,
computed by Gauss-Jacobi quadrature in the endpoint exponents while the
remaining factors follow one declared branch: principal determination at
the segment midpoint, continued continuously along the segment, and
continued by closeness to the base determination when a configuration is
perturbed.  The integrality arithmetic is exact; only periods are floats.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.special import roots_jacobi

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class MuTuple:
    """Five exact weights in (0,1) summing to 2, with common denominator."""

    values: tuple[Fraction, ...]

    @property
    def denominator(self) -> int:
        return math.lcm(*(v.denominator for v in self.values))

    @property
    def numerators(self) -> tuple[int, ...]:
        d = self.denominator
        return tuple(int(v * d) for v in self.values)

    def sorted(self) -> MuTuple:
        return MuTuple(tuple(sorted(self.values)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def validate_mu(values: Iterable[Fraction | int | str]) -> MuTuple:
    """Build a weight tuple, naming the violated constraint on failure."""
    vals = []
    for v in values:
        if isinstance(v, float):
            raise ValueError(f"weights must be exact rationals, got float {v!r}")
        vals.append(Fraction(v))
    if len(vals) != 5:
        raise ValueError(f"need exactly 5 weights, got {len(vals)}")
    for k, v in enumerate(vals):
        if not 0 < v < 1:
            raise ValueError(f"weight {k + 1} = {v} is not strictly between 0 and 1")
    total = sum(vals)
    if total != 2:
        raise ValueError(f"weights sum to {total}, expected 2")
    return MuTuple(tuple(vals))


@dataclass(frozen=True, slots=True)
class PairCertificate:
    """Integrality record for one index pair."""

    i: int
    j: int
    exempt: bool
    value: Fraction | None
    integral: bool


def int_condition(mu: MuTuple, half_integers_for_equal: bool = False,
                  ) -> tuple[bool, tuple[PairCertificate, ...]]:
    """Pairwise integrality test with certificates.

    For each pair with mu_i + mu_j < 1 the reciprocal of 1 - mu_i - mu_j
    must be an integer; pairs summing to >= 1 are exempt.  The relaxed
    variant accepts half-integers when the two weights are equal.  The
    condition and its exemption rule follow the hypergeometric lattice
    literature; this module records certificates rather than deriving it.
    """
    certs = []
    ok = True
    for i, j in itertools.combinations(range(5), 2):
        s = mu.values[i] + mu.values[j]
        if s >= 1:
            certs.append(PairCertificate(i, j, True, None, True))
            continue
        value = 1 / (1 - s)
        if half_integers_for_equal and mu.values[i] == mu.values[j]:
            integral = (2 * value).denominator == 1
        else:
            integral = value.denominator == 1
        certs.append(PairCertificate(i, j, False, value, integral))
        ok = ok and integral
    return ok, tuple(certs)


def enumerate_int(max_denominator: int,
                  half_integers_for_equal: bool = False) -> tuple[MuTuple, ...]:
    """All integrality-passing tuples with common denominator up to the
    bound, one representative per reordering class, sorted."""
    if max_denominator > 24:
        raise ValueError("denominator bound above 24 is out of scope")
    if max_denominator < 2:
        return ()
    seen: set[tuple[Fraction, ...]] = set()
    for d in range(2, max_denominator + 1):
        for parts in _bounded_partitions(2 * d, d):
            vals = tuple(Fraction(n, d) for n in parts)
            if vals in seen:
                continue
            seen.add(vals)
    out = []
    for vals in sorted(seen):
        mu = MuTuple(vals)
        ok, _ = int_condition(mu, half_integers_for_equal)
        if ok:
            out.append(mu)
    return tuple(out)


def _bounded_partitions(total: int, d: int) -> Iterable[tuple[int, ...]]:
    """Nondecreasing 5-tuples of integers in 1..d-1 with the given sum."""
    def rec(remaining: int, slots: int, minimum: int):
        if slots == 1:
            if minimum <= remaining <= d - 1:
                yield (remaining,)
            return
        for first in range(minimum, d):
            if first * slots > remaining or remaining > (d - 1) * slots:
                break
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest
    yield from rec(total, 5, 1)


MIN_SEPARATION = 1e-6


@dataclass(frozen=True, slots=True)
class PointConfig:
    """Five distinct marked points in the complex plane."""

    points: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.points) != 5:
            raise ValueError(f"need exactly 5 points, got {len(self.points)}")
        pts = tuple(complex(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for a, b in itertools.combinations(range(5), 2):
            if abs(pts[a] - pts[b]) <= MIN_SEPARATION:
                raise ValueError(f"points {a} and {b} are closer than {MIN_SEPARATION}")


def _segment_clearance(x: PointConfig, i: int, j: int) -> float:
    """Distance from the open segment x_i -> x_j to the nearest other point."""
    zi, zj = x.points[i], x.points[j]
    delta = zj - zi
    best = math.inf
    for k in range(5):
        if k in (i, j):
            continue
        w = x.points[k] - zi
        t = max(0.0, min(1.0, (w * delta.conjugate()).real / abs(delta) ** 2))
        best = min(best, abs(w - t * delta))
    return best


def config_clearance(x: PointConfig) -> float:
    """Smallest distance from any inter-point segment to a third point.

    Every pair integral is well conditioned when this is comfortably above
    MIN_SEPARATION."""
    return min(_segment_clearance(x, i, j)
               for i, j in itertools.combinations(range(5), 2))


@lru_cache(maxsize=256)
def _jacobi_rule(n: int, alpha: float, beta: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = roots_jacobi(n, alpha, beta)
    return tuple(nodes.tolist()), tuple(weights.tolist())


def _continuous_log_factors(ts: np.ndarray, zi: complex, delta: complex,
                            others: Sequence[tuple[complex, float]],
                            anchor_refs: Sequence[float] | None,
                            ) -> tuple[np.ndarray, tuple[float, ...]]:
    """Product over the non-endpoint factors (z(t)-x_k)^(-mu_k) at nodes ts.

    Each factor's argument is unwrapped along a refining grid containing
    the nodes, then pinned at t = 1/2: to the principal value, or to the
    winding sheet nearest the supplied reference when perturbing a base
    configuration.  Returns the product at the nodes and the anchored
    midpoint arguments for later homotopy reuse.
    """
    product = np.ones(len(ts), dtype=complex)
    mid_args = []
    for idx, (xk, muk) in enumerate(others):
        dense = 513
        while True:
            grid = np.unique(np.concatenate([ts, np.linspace(0.0, 1.0, dense), [0.5]]))
            w = zi + grid * delta - xk
            theta = np.unwrap(np.angle(w))
            if np.max(np.abs(np.diff(theta))) < 2.5:
                break
            dense *= 4
            if dense > 2 ** 17:
                raise ArithmeticError(
                    "branch continuity lost: segment passes too close to a point")
        mid_pos = int(np.searchsorted(grid, 0.5))
        w_mid = zi + 0.5 * delta - xk
        anchor = cmath.phase(w_mid)
        if anchor_refs is not None:
            anchor += TWO_PI * round((anchor_refs[idx] - anchor) / TWO_PI)
        theta += TWO_PI * round((anchor - theta[mid_pos]) / TWO_PI)
        mid_args.append(theta[mid_pos])
        node_pos = np.searchsorted(grid, ts)
        log_w = np.log(np.abs(w[node_pos])) + 1j * theta[node_pos]
        product *= np.exp(-muk * log_w)
    return product, tuple(mid_args)


def period(x: PointConfig, i: int, j: int, mu: MuTuple, *,
           rel_tol: float = 1e-8,
           anchor_refs: Sequence[float] | None = None,
           ) -> complex:
    """Integral of prod (z-x_k)^(-mu_k) dz along the straight segment from
    x_i to x_j (0-based indices).

    Endpoint singularities carry exponents in (-1, 0) and are absorbed by
    the Gauss-Jacobi weight; the node count doubles until two consecutive
    rules agree to rel_tol."""
    value, _ = period_with_anchors(x, i, j, mu, rel_tol=rel_tol,
                                   anchor_refs=anchor_refs)
    return value


def period_with_anchors(x: PointConfig, i: int, j: int, mu: MuTuple, *,
                        rel_tol: float = 1e-8,
                        anchor_refs: Sequence[float] | None = None,
                        ) -> tuple[complex, tuple[float, ...]]:
    """period() plus the anchored arguments that pin its branch: the two
    endpoint-direction arguments, then the midpoint arguments of the inner
    factors.  A perturbed configuration passes them back in as anchor_refs
    to stay on the same sheet."""
    if i == j:
        raise ValueError("endpoints must differ")
    clearance = _segment_clearance(x, i, j)
    if clearance < MIN_SEPARATION:
        raise ValueError(f"segment {i}-{j} passes within {clearance:.2e} of a point")
    zi, zj = x.points[i], x.points[j]
    delta = zj - zi
    mu_i = float(mu.values[i])
    mu_j = float(mu.values[j])
    others = [(x.points[k], float(mu.values[k])) for k in range(5) if k not in (i, j)]
    # constant prefactor: delta from dz, plus the determinations of
    # delta^(-mu_i) and (zi-zj)^(-mu_j) pulled out of the endpoint factors.
    # Their arguments start principal (zi - zj rather than -delta, so the
    # signed zero of the imaginary part matches the midpoint values) and
    # are re-anchored to the nearest sheet of a reference determination,
    # since a perturbation may carry either direction across the cut.
    arg_fwd = cmath.phase(delta)
    arg_bwd = cmath.phase(zi - zj)
    if anchor_refs is not None:
        arg_fwd += TWO_PI * round((anchor_refs[0] - arg_fwd) / TWO_PI)
        arg_bwd += TWO_PI * round((anchor_refs[1] - arg_bwd) / TWO_PI)
    log_len = math.log(abs(delta))
    prefactor = delta * cmath.exp(-mu_i * complex(log_len, arg_fwd)
                                  - mu_j * complex(log_len, arg_bwd)) \
        * 2.0 ** (mu_i + mu_j - 1.0)

    inner_refs = anchor_refs[2:] if anchor_refs is not None else None
    previous = None
    inner_anchors: tuple[float, ...] = ()
    n = 24
    while n <= 6144:
        nodes, weights = _jacobi_rule(n, -mu_j, -mu_i)
        ts = (np.asarray(nodes) + 1.0) / 2.0
        inner, inner_anchors = _continuous_log_factors(ts, zi, delta, others,
                                                       inner_refs)
        total = complex(np.dot(np.asarray(weights), inner))
        value = prefactor * total
        if previous is not None:
            scale = max(abs(value), 1e-14)
            if abs(value - previous) <= rel_tol * scale:
                return value, (arg_fwd, arg_bwd) + inner_anchors
        previous = value
        n *= 2
    raise ArithmeticError(f"quadrature did not converge for segment {i}-{j}")


@dataclass(frozen=True, slots=True)
class RankReport:
    """Numerical rank of the period matrix over perturbed configurations."""

    rank: int
    singular_values: tuple[float, ...]
    degenerate: bool


def period_rank(x: PointConfig, mu: MuTuple, samples: int, *,
                seed: int = 0, rel_threshold: float = 1e-6,
                rel_tol: float = 1e-8) -> RankReport:
    """Rank of the 10 x samples matrix of periods over jittered copies of
    the base configuration.

    Branches stay on the base determination through the jitter (anchored
    by nearest winding sheet), so columns are values of the same ten
    multivalued functions.  Fewer than 6 samples cannot witness rank 3
    and is flagged degenerate."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(5), 2))
    base_anchor: dict[tuple[int, int], tuple[float, ...]] = {}
    for i, j in pairs:
        _, base_anchor[(i, j)] = period_with_anchors(x, i, j, mu, rel_tol=rel_tol)
    min_sep = min(abs(a - b) for a, b in itertools.combinations(x.points, 2))
    jitter = 0.02 * min_sep
    columns = []
    for _ in range(samples):
        while True:
            moved = tuple(p + complex(rng.uniform(-jitter, jitter),
                                      rng.uniform(-jitter, jitter))
                          for p in x.points)
            try:
                cfg = PointConfig(moved)
            except ValueError:
                continue
            if all(_segment_clearance(cfg, i, j) > MIN_SEPARATION for i, j in pairs):
                break
        col = [period(cfg, i, j, mu, rel_tol=rel_tol,
                      anchor_refs=base_anchor[(i, j)]) for i, j in pairs]
        columns.append(col)
    matrix = np.asarray(columns, dtype=complex).T
    sing = np.linalg.svd(matrix, compute_uv=False)
    top = float(sing[0]) if len(sing) else 0.0
    rank = int(np.sum(sing > rel_threshold * top)) if top > 0 else 0
    return RankReport(rank, tuple(float(s) for s in sing), samples < 6)
