"""Exact-arithmetic verification toolkit.

The package checks, at desk scale, a linked family of computations: the
30-curve/135-point incidence configuration with its order-81 diagonal
torsion action, invariant bookkeeping down to a rank-5 intersection
lattice (Euler characteristics, canonical squares, logarithmic Chern
numbers, weighted-cover Chern scans), the classification of abelian
covers branched over a divisor arrangement, a congruence subgroup of the
unitary group of a sign-(2,1) Hermitian form over the Eisenstein
integers, and hypergeometric weight tuples with their period integrals.

Everything that can be exact is exact (integers, rationals, ring
elements); floating point enters only in the period quadrature and the
numerical ball action, each paired with an independent oracle or a drift
bound.  The ``suites`` module aggregates the full check list and the
``fanoball`` command line exposes it.
"""

from .eisenstein import (
    LAMBDA,
    OMEGA,
    ONE,
    UNITS,
    ZERO,
    EisensteinInt,
    lambda_valuation,
    omega_power,
)
from .intlinalg import (
    FiniteAbelianGroup,
    IntMatrix,
    abelian_group_from_factors,
    integer_kernel_basis,
    invariant_factors,
    kernel_mod_p,
    rank_mod_p,
    smith_normal_form,
    solve_exact,
)
from .fano import (
    CurveLabel,
    FixedLocus,
    OrbitCensus,
    PointLabel,
    TorsionAut,
    act_on_curve,
    act_on_point,
    all_curves,
    all_points,
    curve_gram_matrix,
    curve_stabilizer,
    fixed_locus,
    group_elements,
    intersection_number,
    isolated_point_union,
    orbit,
    orbit_census,
    point_stabilizer,
    pointwise_fixer,
    tangent_eigenvalues,
    tangent_exponents,
)
from .invariants import (
    CurveConfig,
    DelPezzoModel,
    DivisorClass,
    IntersectionLattice,
    LogChern,
    branched_canonical,
    config_euler,
    del_pezzo_lattice,
    hirzebruch_invariants,
    log_chern,
    quotient_curve_chi,
    source_surface_lattice,
    stratified_euler,
    surface_euler_from_quotient,
)
from .covers import (
    BranchArrangement,
    CoverGroup,
    brute_force_cover_elements,
    bundled_names,
    divisor_cover_group,
    etale_check,
    factorization_exists,
    full_cover_group,
    load_arrangement,
    load_bundled,
    parse_arrangement,
    subgroup_census,
)
from .congruence import (
    BallPoint,
    EisensteinMatrix,
    FiniteGroupReport,
    ball_act,
    commutator,
    congruence_level,
    enumerate_gamma,
    finite_group_analysis,
    height_one_reflection_vectors,
    hermitian_form,
    in_gamma,
    is_unitary,
    reflection,
    scalar_classes,
)
from .hypergeometric import (
    MuTuple,
    PairCertificate,
    PointConfig,
    RankReport,
    enumerate_int,
    int_condition,
    period,
    period_rank,
    validate_mu,
)
from .suites import (
    CheckResult,
    SuiteReport,
    emit_json,
    emit_markdown,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "LAMBDA", "OMEGA", "ONE", "UNITS", "ZERO", "EisensteinInt",
    "lambda_valuation", "omega_power",
    "FiniteAbelianGroup", "IntMatrix", "abelian_group_from_factors",
    "integer_kernel_basis", "invariant_factors", "kernel_mod_p",
    "rank_mod_p", "smith_normal_form", "solve_exact",
    "CurveLabel", "FixedLocus", "OrbitCensus", "PointLabel", "TorsionAut",
    "act_on_curve", "act_on_point", "all_curves", "all_points",
    "curve_gram_matrix", "curve_stabilizer", "fixed_locus",
    "group_elements", "intersection_number", "isolated_point_union",
    "orbit", "orbit_census", "point_stabilizer", "pointwise_fixer",
    "tangent_eigenvalues", "tangent_exponents",
    "CurveConfig", "DelPezzoModel", "DivisorClass", "IntersectionLattice",
    "LogChern", "branched_canonical", "config_euler", "del_pezzo_lattice",
    "hirzebruch_invariants", "log_chern", "quotient_curve_chi",
    "source_surface_lattice", "stratified_euler",
    "surface_euler_from_quotient",
    "BranchArrangement", "CoverGroup", "brute_force_cover_elements",
    "bundled_names", "divisor_cover_group", "etale_check",
    "factorization_exists", "full_cover_group", "load_arrangement",
    "load_bundled", "parse_arrangement", "subgroup_census",
    "BallPoint", "EisensteinMatrix", "FiniteGroupReport", "ball_act",
    "commutator", "congruence_level", "enumerate_gamma",
    "finite_group_analysis", "height_one_reflection_vectors",
    "hermitian_form", "in_gamma", "is_unitary", "reflection",
    "scalar_classes",
    "MuTuple", "PairCertificate", "PointConfig", "RankReport",
    "enumerate_int", "int_condition", "period", "period_rank",
    "validate_mu",
    "CheckResult", "SuiteReport", "emit_json", "emit_markdown", "run_suite",
    "__version__",
]
