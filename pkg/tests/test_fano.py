"""Curve/point combinatorics and the diagonal torsion action."""

import itertools
import random

import pytest

from fanoball.fano import (
    IDENTITY,
    CurveLabel,
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
    pullback_pairing_check,
    tangent_eigenvalues,
    tangent_exponents,
)


def test_population_counts():
    assert len(all_curves()) == 30
    assert len(all_points()) == 135
    assert len(group_elements()) == 81


def test_curve_label_validation():
    with pytest.raises(ValueError):
        CurveLabel(2, 1, 0)
    with pytest.raises(ValueError):
        CurveLabel(1, 1, 0)
    with pytest.raises(ValueError):
        CurveLabel(1, 2, 3)
    with pytest.raises(ValueError):
        CurveLabel(0, 2, 0)


def test_point_label_requires_disjoint_index_pairs():
    a = CurveLabel(1, 2, 0)
    with pytest.raises(ValueError):
        PointLabel(a, CurveLabel(1, 3, 0))
    with pytest.raises(ValueError):
        PointLabel(a, CurveLabel(1, 2, 1))
    p = PointLabel(CurveLabel(3, 4, 1), a)
    assert p.curves[0] == a  # stored in sorted order


def test_torsion_aut_validation_and_group_law():
    with pytest.raises(ValueError):
        TorsionAut((1, 0, 0, 0, 0))  # exponents must sum to 0 mod 3
    with pytest.raises(ValueError):
        TorsionAut((1, 2, 0, 0))
    g = TorsionAut((1, 2, 0, 0, 0))
    h = TorsionAut((0, 1, 2, 0, 0))
    assert g.compose(g.inverse()) == IDENTITY
    assert g.compose(h).compose(h.inverse()) == g


def test_group_is_closed_and_abelian():
    group = set(group_elements())
    sample = random.Random(7).sample(sorted(group, key=lambda g: g.exponents),
                                     12)
    for g, h in itertools.product(sample, repeat=2):
        assert g.compose(h) in group
        assert g.compose(h) == h.compose(g)


def test_action_is_a_group_action_on_curves_and_points():
    rng = random.Random(3)
    group = group_elements()
    pairs = [(rng.choice(group), rng.choice(group)) for _ in range(40)]
    curves = all_curves()
    points = all_points()
    for g, h in pairs:
        gh = g.compose(h)
        for c in curves:
            assert act_on_curve(g, act_on_curve(h, c)) == act_on_curve(gh, c)
        for p in points[::9]:
            assert act_on_point(g, act_on_point(h, p)) == act_on_point(gh, p)
    for c in curves:
        assert act_on_curve(IDENTITY, c) == c
    for p in points:
        assert act_on_point(IDENTITY, p) == p


def test_action_permutes_curves_and_points():
    curves = set(all_curves())
    points = set(all_points())
    for g in group_elements()[::5]:
        assert {act_on_curve(g, c) for c in curves} == curves
        assert {act_on_point(g, p) for p in points} == points


def test_intersection_number_is_action_invariant():
    curves = all_curves()
    for g in group_elements()[::4]:
        for c, d in itertools.combinations(curves, 2):
            assert intersection_number(c, d) == intersection_number(
                act_on_curve(g, c), act_on_curve(g, d))


def test_gram_matrix_shape_and_totals():
    gram = curve_gram_matrix()
    assert len(gram) == 30
    assert all(gram[a][a] == -3 for a in range(30))
    assert all(sum(row) == 6 for row in gram)
    meeting = sum(1 for a in range(30) for b in range(a + 1, 30)
                  if gram[a][b] == 1)
    assert meeting == 135


def test_each_meeting_pair_is_one_point():
    curves = all_curves()
    point_pairs = {frozenset(p.curves) for p in all_points()}
    gram_pairs = {frozenset((c, d))
                  for c, d in itertools.combinations(curves, 2)
                  if intersection_number(c, d) == 1}
    assert point_pairs == gram_pairs


def test_orbit_stabilizer_products():
    for c in all_curves():
        assert len(orbit(c)) * len(curve_stabilizer(c)) == 81
    for p in all_points():
        assert len(orbit(p)) * len(point_stabilizer(p)) == 81


def test_orbit_census_partitions():
    census = orbit_census()
    assert sorted(len(o) for o in census.curve_orbits) == [3] * 10
    assert sorted(len(o) for o in census.point_orbits) == [9] * 15
    assert sum(len(o) for o in census.curve_orbits) == 30
    assert sum(len(o) for o in census.point_orbits) == 135
    seen = set()
    for o in census.curve_orbits:
        seen.update(o)
    assert len(seen) == 30


def test_stabilizers_are_subgroups_of_expected_order():
    c = all_curves()[0]
    stab = curve_stabilizer(c)
    assert len(stab) == 27
    assert all(g.compose(h) in set(stab) for g in stab for h in stab)
    fixer = pointwise_fixer(c)
    assert len(fixer) == 3
    assert set(fixer) <= set(stab)
    p = all_points()[0]
    pstab = point_stabilizer(p)
    assert len(pstab) == 9
    assert all(g.compose(h) in set(pstab) for g in pstab for h in pstab)


def test_pointwise_fixer_fixes_every_point_of_the_curve():
    c = all_curves()[0]
    on_curve = [p for p in all_points() if c in p.curves]
    assert len(on_curve) == 9
    for g in pointwise_fixer(c):
        for p in on_curve:
            assert act_on_point(g, p) == p


def test_tangent_eigenvalues_are_cube_roots_of_unity():
    from fanoball.eisenstein import ONE, omega_power

    p = all_points()[0]
    for g in point_stabilizer(p):
        exps = tangent_exponents(g, p)
        assert all(0 <= e < 3 for e in exps)
        assert tangent_eigenvalues(g, p) == tuple(omega_power(e) for e in exps)
        for ev in tangent_eigenvalues(g, p):
            assert ev ** 3 == ONE
        if g.is_identity():
            assert exps == (0, 0)


def test_isolated_fixed_points_match_eigenvalue_test():
    group = [g for g in group_elements() if not g.is_identity()]
    isolated = {g: frozenset(fixed_locus(g).isolated_points) for g in group}
    for p in all_points():
        for g in point_stabilizer(p):
            if g.is_identity():
                continue
            eigen = all(e != 0 for e in tangent_exponents(g, p))
            assert (p in isolated[g]) == eigen


def test_fixed_locus_rejects_identity():
    with pytest.raises(ValueError):
        fixed_locus(IDENTITY)


def test_fixed_curves_and_isolated_points_are_disjoint():
    for g in group_elements():
        if g.is_identity():
            continue
        locus = fixed_locus(g)
        fixed_curves = set(locus.curves)
        for p in locus.isolated_points:
            assert act_on_point(g, p) == p
            assert not (set(p.curves) & fixed_curves)


def test_isolated_point_union_covers_everything():
    assert len(isolated_point_union()) == 135


def test_pullback_pairing():
    assert pullback_pairing_check()


def test_stabilizer_representation_is_full():
    full = sorted((a, b) for a in range(3) for b in range(3))
    for p in all_points()[::7]:
        reps = sorted(tangent_exponents(g, p) for g in point_stabilizer(p))
        assert reps == full
