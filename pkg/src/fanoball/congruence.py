"""Congruence unitary group over the Eisenstein integers.

The group under study consists of the 3x3 matrices over Z[w] that preserve
the diagonal Hermitian form (1, 1, -1) and reduce to the identity modulo
lambda = 1 - w.  Everything algebraic here is exact: form preservation,
membership, complex reflections, commutators and their lambda-adic
congruence level, and reductions into the finite quotient rings
Z[w]/lambda^k.  Only the unit-ball action at the bottom runs in floating
point, and nothing exact is derived from it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .eisenstein import (LAMBDA, ONE, ZERO, EisensteinInt, lambda_valuation,
                         omega_power)
from .intlinalg import FiniteAbelianGroup

FORM_DIAGONAL = (1, 1, -1)

Vector = tuple[EisensteinInt, EisensteinInt, EisensteinInt]


@dataclass(frozen=True, slots=True)
class EisensteinMatrix:
    """3x3 matrix with exact Eisenstein integer entries."""

    entries: tuple[tuple[EisensteinInt, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 3 or any(len(row) != 3 for row in self.entries):
            raise ValueError("matrix must be 3x3")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[EisensteinInt | int]]) -> EisensteinMatrix:
        conv = []
        for row in rows:
            conv.append(tuple(x if isinstance(x, EisensteinInt) else EisensteinInt(x, 0)
                              for x in row))
        return cls(tuple(conv))

    @classmethod
    def identity(cls) -> EisensteinMatrix:
        return cls.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def diagonal(cls, d1: EisensteinInt, d2: EisensteinInt, d3: EisensteinInt) -> EisensteinMatrix:
        z = ZERO
        return cls(((d1, z, z), (z, d2, z), (z, z, d3)))

    def __matmul__(self, other: EisensteinMatrix) -> EisensteinMatrix:
        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = ZERO
                for k in range(3):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return EisensteinMatrix(tuple(rows))

    def __sub__(self, other: EisensteinMatrix) -> EisensteinMatrix:
        return EisensteinMatrix(tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def conjugate_transpose(self) -> EisensteinMatrix:
        return EisensteinMatrix(tuple(
            tuple(self.entries[j][i].conj() for j in range(3)) for i in range(3)))

    def determinant(self) -> EisensteinInt:
        e = self.entries
        return (e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))

    def power(self, n: int) -> EisensteinMatrix:
        if n < 0:
            return self.inverse().power(-n)
        result = EisensteinMatrix.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def inverse(self) -> EisensteinMatrix:
        """Inverse of a form-preserving matrix: conjugate-transpose twisted
        by the form.  Exact; rejects matrices that do not preserve the form."""
        if not is_unitary(self):
            raise ValueError("inverse formula requires a form-preserving matrix")
        return hermitian_form() @ self.conjugate_transpose() @ hermitian_form()

    def to_tokens(self) -> tuple[str, ...]:
        return tuple(str(x) for row in self.entries for x in row)

    @classmethod
    def from_tokens(cls, tokens: Sequence[str]) -> EisensteinMatrix:
        if len(tokens) != 9:
            raise ValueError(f"expected 9 entry tokens, got {len(tokens)}")
        vals = [EisensteinInt.parse(tok) for tok in tokens]
        return cls(tuple(tuple(vals[3 * i + j] for j in range(3)) for i in range(3)))

    def sort_key(self) -> tuple:
        height = max(x.norm() for row in self.entries for x in row)
        flat = tuple((x.a, x.b) for row in self.entries for x in row)
        return (height, flat)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


def hermitian_form() -> EisensteinMatrix:
    return EisensteinMatrix.diagonal(EisensteinInt(1, 0), EisensteinInt(1, 0),
                                     EisensteinInt(-1, 0))


def _as_vector(v: Sequence[EisensteinInt | int]) -> tuple[EisensteinInt, ...]:
    return tuple(x if isinstance(x, EisensteinInt) else EisensteinInt(x, 0)
                 for x in v)


def herm_product(x: Vector, y: Vector) -> EisensteinInt:
    """Signature (2,1) pairing: x1 conj(y1) + x2 conj(y2) - x3 conj(y3)."""
    acc = ZERO
    for d, xi, yi in zip(FORM_DIAGONAL, _as_vector(x), _as_vector(y)):
        term = xi * yi.conj()
        acc = acc + (term if d == 1 else -term)
    return acc


def is_unitary(t: EisensteinMatrix) -> bool:
    """Exact check of conjugate-transpose(T) . H . T == H."""
    h = hermitian_form()
    return (t.conjugate_transpose() @ h @ t) == h


def congruence_level(t: EisensteinMatrix) -> int | float:
    """Smallest lambda-valuation among the entries of T - I (inf for I)."""
    diff = t - EisensteinMatrix.identity()
    return min(lambda_valuation(x) for row in diff.entries for x in row)


def in_gamma(t: EisensteinMatrix) -> bool:
    """Form-preserving and congruent to the identity modulo lambda."""
    return is_unitary(t) and congruence_level(t) >= 1


def reflection(v: Vector) -> EisensteinMatrix:
    """Complex reflection x -> x - (1-w) <x,v> v in a norm-1 vector.

    The lambda factor makes the result automatically congruent to the
    identity, so reflections land in the group by construction.
    """
    v = _as_vector(v)
    if herm_product(v, v) != ONE:
        raise ValueError(f"vector must have form norm 1, got {herm_product(v, v)}")
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            base = ONE if i == j else ZERO
            twist = v[j].conj() * v[i]
            if FORM_DIAGONAL[j] == -1:
                twist = -twist
            row.append(base - LAMBDA * twist)
        rows.append(tuple(row))
    return EisensteinMatrix(tuple(rows))


def height_one_reflection_vectors() -> tuple[Vector, ...]:
    """Norm-1 vectors with all entry norms <= 1, one per unit-scalar class.

    The classes are: the first two coordinate vectors, and the 36 vectors
    (1, u, u') with u, u' units.  Scaling by a unit does not change the
    reflection, so these 38 exhaust the height-1 reflections.
    """
    units = [omega_power(k) for k in range(3)]
    units += [-u for u in units]
    vecs: list[Vector] = [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO)]
    for u2 in sorted(units, key=lambda x: (x.a, x.b)):
        for u3 in sorted(units, key=lambda x: (x.a, x.b)):
            vecs.append((ONE, u2, u3))
    for v in vecs:
        if herm_product(v, v) != ONE:
            raise AssertionError(f"vector {v} lost norm 1")
    return tuple(vecs)


def _entries_up_to_norm(height: int) -> list[EisensteinInt]:
    bound = int(2 * math.isqrt(height)) + 2
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x = EisensteinInt(a, b)
            if x.norm() <= height:
                out.append(x)
    return sorted(out, key=lambda x: (x.norm(), x.a, x.b))


def enumerate_gamma(height: int) -> tuple[EisensteinMatrix, ...]:
    """All group elements with every entry norm at most the height bound.

    Columns of a form-preserving matrix pair to (1, 1, -1) and are mutually
    orthogonal, so the search assembles orthogonal column triples from the
    two norm classes and keeps the matrices congruent to the identity.
    Output is sorted by height, then lexicographically by entries.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    pool = _entries_up_to_norm(height)
    plus: list[Vector] = []
    minus: list[Vector] = []
    for v in itertools.product(pool, repeat=3):
        n = herm_product(v, v)
        if n == ONE:
            plus.append(v)
        elif n == -ONE:
            minus.append(v)
    found = []
    for c1 in plus:
        second = [c2 for c2 in plus if herm_product(c2, c1).is_zero()]
        third = [c3 for c3 in minus if herm_product(c3, c1).is_zero()]
        for c2 in second:
            for c3 in third:
                if not herm_product(c3, c2).is_zero():
                    continue
                t = EisensteinMatrix(tuple(
                    (c1[i], c2[i], c3[i]) for i in range(3)))
                if congruence_level(t) >= 1:
                    if not is_unitary(t):
                        raise AssertionError("assembled matrix lost the form")
                    found.append(t)
    return tuple(sorted(found, key=EisensteinMatrix.sort_key))


def commutator(t: EisensteinMatrix, u: EisensteinMatrix,
               ) -> tuple[EisensteinMatrix, int | float]:
    """T U T^-1 U^-1 and the congruence level of the result.

    Both inputs must be group members; the level of any commutator is at
    least 2 (one more than the members themselves)."""
    for name, m in (("first", t), ("second", u)):
        if not in_gamma(m):
            raise ValueError(f"{name} argument is not a group member")
    c = t @ u @ t.inverse() @ u.inverse()
    return c, congruence_level(c)


@dataclass(frozen=True, slots=True)
class ResidueRing:
    """Finite quotient Z[w]/lambda^k with canonical residue representatives.

    The ideal is a rank-2 sublattice of Z^2 under the (a, b) coordinates;
    its row Hermite normal form (h11, h12; 0, h22) turns reduction into two
    integer remainders.  The ring has 3^k elements.
    """

    level: int
    h11: int
    h12: int
    h22: int

    @classmethod
    def at_level(cls, k: int) -> ResidueRing:
        if not 1 <= k <= 8:
            raise ValueError(f"residue level must be in 1..8, got {k}")
        gen = LAMBDA ** k
        rows = [[gen.a, gen.b],
                [-gen.b, gen.a - gen.b]]
        # row HNF of the 2x2 generator matrix
        while rows[1][0]:
            if rows[0][0] == 0 or (rows[1][0] and abs(rows[1][0]) < abs(rows[0][0])):
                rows[0], rows[1] = rows[1], rows[0]
            q = rows[1][0] // rows[0][0]
            rows[1] = [x - q * y for x, y in zip(rows[1], rows[0])]
        if rows[0][0] < 0:
            rows[0] = [-x for x in rows[0]]
        if rows[1][1] < 0:
            rows[1] = [-x for x in rows[1]]
        h11, h12 = rows[0]
        h22 = rows[1][1]
        h12 %= h22
        ring = cls(k, h11, h12, h22)
        if h11 * h22 != 3 ** k:
            raise AssertionError("ideal index must be 3^k")
        return ring

    @property
    def size(self) -> int:
        return self.h11 * self.h22

    def reduce(self, x: EisensteinInt) -> EisensteinInt:
        q, a = divmod(x.a, self.h11)
        b = (x.b - q * self.h12) % self.h22
        return EisensteinInt(a, b)

    def reduce_matrix(self, t: EisensteinMatrix) -> EisensteinMatrix:
        return EisensteinMatrix(tuple(
            tuple(self.reduce(x) for x in row) for row in t.entries))


def reduce_mod(t: EisensteinMatrix, k: int) -> EisensteinMatrix:
    """Entrywise canonical reduction modulo lambda^k."""
    return ResidueRing.at_level(k).reduce_matrix(t)


class ClosureBudgetExceeded(RuntimeError):
    """Raised when a finite closure outgrows its element budget."""

    def __init__(self, visited: int, budget: int):
        super().__init__(f"closure exceeded budget: {visited} elements "
                         f"generated, budget {budget}")
        self.visited = visited
        self.budget = budget


def _closure(seed: Iterable[EisensteinMatrix],
             step: Sequence[EisensteinMatrix],
             mul: Callable[[EisensteinMatrix, EisensteinMatrix], EisensteinMatrix],
             budget: int) -> set[EisensteinMatrix]:
    seen = set(seed)
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for g in step:
            y = mul(x, g)
            if y not in seen:
                if len(seen) >= budget:
                    raise ClosureBudgetExceeded(len(seen), budget)
                seen.add(y)
                frontier.append(y)
    return seen


@dataclass(frozen=True, slots=True)
class FiniteGroupReport:
    """Closure data of a generating set inside one finite quotient ring."""

    level: int
    order: int
    derived_order: int
    abelianization: FiniteAbelianGroup


def scalar_classes() -> tuple[EisensteinMatrix, ...]:
    """The three scalar group members: unit multiples of the identity that
    are congruent to the identity."""
    return tuple(EisensteinMatrix.diagonal(omega_power(k), omega_power(k),
                                           omega_power(k)) for k in range(3))


def finite_group_analysis(generators: Iterable[EisensteinMatrix], k: int,
                          budget: int = 10_000_000,
                          modulo: Iterable[EisensteinMatrix] = (),
                          ) -> FiniteGroupReport:
    """Closure of the reduced generators, its derived subgroup, and the
    abelianization invariants, all inside Z[w]/lambda^k.

    Inverses in the quotient reuse the form twist, which survives
    reduction because reduction is a ring homomorphism and conjugation
    preserves the ideal.  derived_order always reports the honest derived
    subgroup; elements passed as modulo have their normal closure added
    before the abelianization quotient (used to factor out the scalars)."""
    ring = ResidueRing.at_level(k)
    gens = []
    for t in generators:
        if not in_gamma(t):
            raise ValueError("generators must be group members")
        r = ring.reduce_matrix(t)
        if r not in gens:
            gens.append(r)
    h = hermitian_form()

    def mul(x: EisensteinMatrix, y: EisensteinMatrix) -> EisensteinMatrix:
        return ring.reduce_matrix(x @ y)

    def inv(x: EisensteinMatrix) -> EisensteinMatrix:
        return ring.reduce_matrix(h @ x.conjugate_transpose() @ h)

    identity = ring.reduce_matrix(EisensteinMatrix.identity())
    group = _closure([identity], gens, mul, budget)

    def normal_closure(seed: set[EisensteinMatrix]) -> set[EisensteinMatrix]:
        closed = _closure(seed, sorted(seed, key=EisensteinMatrix.sort_key),
                          mul, budget)
        while True:
            extra = set()
            for d in closed:
                for g in gens:
                    c = mul(mul(g, d), inv(g))
                    if c not in closed:
                        extra.add(c)
            if not extra:
                break
            closed = _closure(closed | extra,
                              sorted(extra, key=EisensteinMatrix.sort_key),
                              mul, budget)
        return closed

    base = {identity}
    for a, b in itertools.product(gens, repeat=2):
        base.add(mul(mul(mul(a, b), inv(a)), inv(b)))
    derived = normal_closure(base)

    quotient_by = derived
    extra_normal = {ring.reduce_matrix(m) for m in modulo}
    if extra_normal - derived:
        quotient_by = normal_closure(derived | extra_normal)

    factors = _abelian_invariants_of_quotient(group, quotient_by, mul, identity)
    return FiniteGroupReport(k, len(group), len(derived),
                             FiniteAbelianGroup(factors))


def _abelian_invariants_of_quotient(group: set[EisensteinMatrix],
                                    derived: set[EisensteinMatrix],
                                    mul: Callable, identity: EisensteinMatrix,
                                    ) -> tuple[int, ...]:
    """Invariant factors of the (abelian) quotient group/derived.

    Cosets are labeled by their minimal member; element orders in the
    quotient then determine the factors by counting solutions of
    x^(p^i) = 1 prime by prime."""
    coset_of: dict[EisensteinMatrix, EisensteinMatrix] = {}
    reps = []
    for x in sorted(group, key=EisensteinMatrix.sort_key):
        if x in coset_of:
            continue
        members = sorted((mul(x, d) for d in derived), key=EisensteinMatrix.sort_key)
        label = members[0]
        for m in members:
            coset_of[m] = label
        reps.append(label)
    size = len(reps)

    def qmul(a: EisensteinMatrix, b: EisensteinMatrix) -> EisensteinMatrix:
        return coset_of[mul(a, b)]

    qid = coset_of[identity]
    orders = {}
    for r in reps:
        n, acc = 1, r
        while acc != qid:
            acc = qmul(acc, r)
            n += 1
        orders[r] = n

    partitions: dict[int, list[int]] = {}
    n = size
    p = 2
    while n > 1:
        if n % p:
            p += 1
            continue
        while n % p == 0:
            n //= p
        p_elems = [r for r in reps if _is_p_power(orders[r], p)]
        # layers[i-1] = number of cyclic factors with exponent >= i,
        # read off the count of solutions of x^(p^i) = 1
        layers = []
        prev = 1
        i = 1
        while prev < len(p_elems):
            c_i = sum(1 for r in p_elems if p ** i % orders[r] == 0)
            layers.append(_int_log(c_i, p) - _int_log(prev, p))
            prev = c_i
            i += 1
        part = []
        for i, layer in enumerate(layers, start=1):
            nxt = layers[i] if i < len(layers) else 0
            part.extend([i] * (layer - nxt))
        partitions[p] = sorted(part)

    width = max((len(v) for v in partitions.values()), default=0)
    factors = []
    for slot in range(width):
        f = 1
        for prime, part in partitions.items():
            padded = [0] * (width - len(part)) + part
            f *= prime ** padded[slot]
        if f > 1:
            factors.append(f)
    return tuple(factors)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _int_log(n: int, p: int) -> int:
    v = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        v += 1
    return v


@dataclass(frozen=True, slots=True)
class BallPoint:
    """Point of the open unit ball in C^2."""

    z1: complex
    z2: complex

    def __post_init__(self) -> None:
        if self.norm_squared >= 1 + 1e-12:
            raise ValueError(f"point lies outside the unit ball: {self}")

    @property
    def norm_squared(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z2) ** 2

    def __str__(self) -> str:
        return f"({self.z1}, {self.z2})"


def ball_act(t: EisensteinMatrix, z: BallPoint) -> BallPoint:
    """Projective action on the ball: lift to (z1, z2, 1), apply the matrix
    numerically, rescale by the last coordinate."""
    if not is_unitary(t):
        raise ValueError("ball action requires a form-preserving matrix")
    vec = (z.z1, z.z2, 1.0)
    out = []
    for i in range(3):
        acc = 0j
        for j in range(3):
            acc += t.entries[i][j].to_complex() * vec[j]
        out.append(acc)
    scale = out[2]
    if abs(scale) < 1e-15:
        raise ArithmeticError("last coordinate vanished on an interior point")
    return BallPoint(out[0] / scale, out[1] / scale)
