"""Divisor bookkeeping: lattices, Euler characteristics, Chern numbers."""

from fractions import Fraction

import pytest

from fanoball.invariants import (
    CurveConfig,
    DivisorClass,
    IntersectionLattice,
    branched_canonical,
    class_sum,
    config_euler,
    del_pezzo_lattice,
    diagonal_lattice,
    disjoint_curve_dozen,
    hirzebruch_invariants,
    log_chern,
    quotient_curve_chi,
    quotient_curve_config,
    solve_stratified_unknown,
    source_curve_config,
    source_surface_lattice,
    stratified_euler,
    surface_euler_from_quotient,
)


def test_divisor_class_arithmetic():
    a = DivisorClass([1, 2])
    b = DivisorClass([Fraction(1, 2), -1])
    assert (a + b).coefficients == (Fraction(3, 2), Fraction(1))
    assert (a - a).is_zero()
    assert (-a).coefficients == (-1, -2)
    assert a.scaled(Fraction(1, 3)).coefficients == (Fraction(1, 3), Fraction(2, 3))
    assert class_sum([a, b, b]).coefficients == (2, 0)


def test_intersection_lattice_validation_and_pairing():
    lattice = diagonal_lattice([1, -1], [-3, 1])
    assert lattice.rank == 2
    assert lattice.pair(lattice.basis_class(0), lattice.basis_class(1)) == 0
    assert lattice.self_intersection(lattice.canonical) == 9 - 1
    with pytest.raises(ValueError):
        IntersectionLattice(((0, 1), (2, 0)), DivisorClass([0, 0]))


def test_del_pezzo_model():
    model = del_pezzo_lattice()
    lat = model.lattice
    assert lat.rank == 5
    assert lat.self_intersection(lat.canonical) == 5
    assert len(model.ten_classes) == 10
    for c in model.ten_classes:
        assert lat.self_intersection(c) == -1
        assert lat.pair(lat.canonical, c) == -1


def test_del_pezzo_labeling_is_petersen():
    model = del_pezzo_lattice()
    labels = sorted(model.labeling, key=sorted)
    assert len(labels) == 10
    assert {frozenset(x) for x in labels} == {
        frozenset(p) for p in
        [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]}
    for a in labels:
        for b in labels:
            if a == b:
                continue
            expected = 1 if not (a & b) else 0
            got = model.lattice.pair(model.labeling[a], model.labeling[b])
            assert got == expected, (a, b)


def test_config_euler_triangle():
    # three lines in general position: chi = 3*2 - 3*(2-1) = 3
    cfg = CurveConfig(
        (("a", 2), ("b", 2), ("c", 2)),
        (("p", ("a", "b")), ("q", ("b", "c")), ("r", ("a", "c"))))
    assert config_euler(cfg) == 3


def test_config_validation():
    with pytest.raises(ValueError):
        CurveConfig((("a", 2),), (("p", ("a",)),))  # point needs >= 2 curves
    with pytest.raises(ValueError):
        CurveConfig((("a", 2),), (("p", ("a", "zzz")),))  # unknown component


def test_stratified_euler_and_solver():
    assert stratified_euler([(4, 2), (1, 5)]) == 13
    unknown = solve_stratified_unknown(13, [(1, 5)], 2)
    assert unknown == 4
    assert stratified_euler([]) == 0


def test_quotient_curve_chi_is_two():
    assert quotient_curve_chi() == 2
    # the display 0 = 9(chi - 3) + 9 pins the same value
    chi = quotient_curve_chi()
    assert 9 * (chi - 3) + 9 == 0


def test_quotient_config_shape():
    cfg = quotient_curve_config()
    assert len(cfg.components) == 10
    assert len(cfg.points) == 15
    assert all(chi == 2 for _, chi in cfg.components)
    assert config_euler(cfg) == 5


def test_source_config_shape():
    cfg = source_curve_config()
    assert len(cfg.components) == 30
    assert len(cfg.points) == 135
    assert config_euler(cfg) == -135


def test_surface_euler_triple():
    assert surface_euler_from_quotient() == (27, 7, 5)


def test_source_lattice_canonical_square():
    model = source_surface_lattice()
    assert model.lattice.self_intersection(model.canonical) == 45
    # canonical meets every curve in 3
    for cls in model.curve_classes:
        assert model.lattice.pair(model.canonical, cls) == 3
        assert model.lattice.self_intersection(cls) == -3


def test_quotient_canonical_square_from_pullback():
    model = source_surface_lattice()
    k_source = model.lattice.self_intersection(model.canonical)
    assert Fraction(9 * k_source, 81) == 5


def test_disjoint_curve_dozen():
    dozen = disjoint_curve_dozen()
    assert len(dozen) == 12
    model = source_surface_lattice()
    total = class_sum(model.class_of(c) for c in dozen)
    assert model.lattice.self_intersection(total) == -36
    assert model.lattice.pair(model.canonical, total) == 36


def test_log_chern_equality_case():
    lc = log_chern(45, 36, -36, 27, 0)
    assert (lc.c1_squared, lc.c2) == (81, 27)
    assert lc.satisfies_bound
    assert lc.is_equality
    scaled = log_chern(135, 108, -108, 81, 0)
    assert (scaled.c1_squared, scaled.c2) == (243, 81)
    assert scaled.is_equality
    strict = log_chern(1, 0, 0, 10, 0)
    assert strict.satisfies_bound and not strict.is_equality


def test_branched_canonical():
    model = del_pezzo_lattice()
    branch = [(c, 3) for c in model.ten_classes]
    value = branched_canonical(model.lattice, branch, 243)
    assert value == 243 * model.lattice.self_intersection(
        model.lattice.canonical
        + class_sum(model.ten_classes).scaled(Fraction(2, 3)))
    with pytest.raises(ValueError):
        branched_canonical(model.lattice, [(model.ten_classes[0], 1)], 3)
    with pytest.raises(ValueError):
        branched_canonical(model.lattice, [], 0)


def test_hirzebruch_invariants():
    assert hirzebruch_invariants(5) == (5625, 1875)
    assert hirzebruch_invariants(3) == (135, 81)
    ratio_three = [n for n in range(2, 13)
                   if hirzebruch_invariants(n)[0]
                   == 3 * hirzebruch_invariants(n)[1]]
    assert ratio_three == [5]
    with pytest.raises(ValueError):
        hirzebruch_invariants(1)


def test_hirzebruch_closed_forms():
    for n in range(2, 13):
        c1sq, c2 = hirzebruch_invariants(n)
        assert c1sq == 5 * n ** 3 * (n - 2) ** 2
        assert c2 == n ** 3 * (2 * n ** 2 - 10 * n + 15)
