"""Constructive procedures: cube faces, cones, lifting, pipelines, witnesses.

Expected values for the exact checks were derived by hand from the defining
formulas (homothety images, slice interpolation, gauge evaluations) before
being frozen here; the randomized blocks re-verify the advertised
containments and factor bounds on every instance.
"""

import itertools
import random
from fractions import Fraction as F

import pytest

from latcut.constructions import (
    ApproxResult,
    FacetSubsetResult,
    TruncatedCone,
    approximate_any_f,
    approximate_fixed_f,
    caratheodory_facet_subset,
    cube_face_construction,
    cylinder_lift_witness,
    inapprox_pyramid,
    lift_to_nplus1,
    segment_meets,
    shrink_epsilon,
    simplex_tower,
    truncated_cone_shrink,
)
from latcut.errors import (
    HypothesisViolated,
    MuTooSmall,
    NotLatticeFreeInput,
    NotPolytope,
    OutOfRange,
    PointNotInterior,
    UnsupportedDimension,
)
from latcut.geometry import (
    HalfSpace,
    Polyhedron,
    drop_last_axis,
    embed_last_axis,
    homothety,
    minkowski_scale_shift,
    section_last_axis,
)
from latcut import linalg as la
from latcut.lattice import certify_lattice_free, flatness_bound, point_denominator
from latcut.strength import relative_strength

F12 = (F(1, 2), F(1, 2))


def tri(t):
    """Lattice-free triangles flattening onto the horizontal split."""
    return Polyhedron.from_generators([(F(-t), F(0)), (F(t + 1), F(0)),
                                       (F(1, 2), 1 + F(1, 2 * t))])


def seg01():
    return Polyhedron.from_generators([(F(0),), (F(1),)])


def facet_witnesses(b):
    """One integer point per facet, tight there and strict elsewhere."""
    out = []
    span = range(-3, 5)
    for j, h in enumerate(b.halfspaces):
        found = None
        for z in itertools.product(span, repeat=b.dim):
            zv = tuple(F(x) for x in z)
            slacks = [g.eval_slack(zv) for g in b.halfspaces]
            if all(s >= 0 for s in slacks) and slacks[j] == 0 \
                    and sum(1 for s in slacks if s == 0) == 1:
                found = zv
                break
        assert found is not None, f"no witness for facet {j}"
        out.append(found)
    return out


# ---------------------------------------------------------------------------
# cube faces


def test_cube_face_census_all_counts_certified():
    for n in (1, 2, 3):
        for i in range(2, 2 ** n + 1):
            b = cube_face_construction(n, i)
            assert len(b.halfspaces) == i
            cert = certify_lattice_free(b)
            assert cert.lattice_free and cert.maximal


def test_cube_face_two_facets_is_the_horizontal_split():
    b = cube_face_construction(2, 2)
    assert b == Polyhedron.from_halfspaces(
        [HalfSpace.make((F(0), F(-1)), F(0)), HalfSpace.make((F(0), F(1)), F(1))], 2)


def test_cube_face_four_facets_is_the_diamond():
    b = cube_face_construction(2, 4)
    diamond = Polyhedron.from_halfspaces(
        [HalfSpace.make((F(-1), F(-1)), F(0)),
         HalfSpace.make((F(1), F(1)), F(2)),
         HalfSpace.make((F(1), F(-1)), F(1)),
         HalfSpace.make((F(-1), F(1)), F(1))], 2)
    assert b == diamond


def test_cube_face_count_out_of_range():
    for n, i in ((2, 1), (2, 5), (3, 9), (1, 3)):
        with pytest.raises(OutOfRange):
            cube_face_construction(n, i)


# ---------------------------------------------------------------------------
# truncated cones


def make_wedge():
    # segment base on the x-axis, far base twice as long and two up
    base = Polyhedron.from_generators([(F(0), F(0)), (F(2), F(0))])
    return TruncatedCone.make(base, F(1), (F(0), F(2)))


def test_cone_slices_interpolate_between_bases():
    cone = make_wedge()
    assert cone.slice_at(0) == cone.base
    far = minkowski_scale_shift(cone.base, 2, (F(0), F(2)))
    assert cone.slice_at(1) == far
    mid = cone.slice_at(F(1, 2))
    assert cone.hull.contains(mid)
    assert mid.vertices == ((F(0), F(1)), (F(3), F(1)))


def test_cone_transverse_coordinate_reads_the_slice_level():
    cone = make_wedge()
    assert cone.transverse_coordinate((F(1), F(0))) == 0
    assert cone.transverse_coordinate((F(1), F(2))) == 1
    assert cone.transverse_coordinate((F(1), F(1, 2))) == F(1, 4)


def test_cone_rejects_shift_inside_the_base_hull():
    base = Polyhedron.from_generators([(F(0), F(0)), (F(2), F(0))])
    with pytest.raises(OutOfRange):
        TruncatedCone.make(base, F(0), (F(1), F(0)))


def test_shrink_sandwich_exact_on_the_wedge():
    cone = make_wedge()
    f = (F(1), F(1))
    out = truncated_cone_shrink(cone, f)
    assert cone.hull.contains(out)
    assert out.contains(homothety(cone.hull, f, F(1, 4)))
    # base collapses to the single preimage point of f
    assert (F(2, 3), F(0)) in out.vertices


def test_shrink_at_far_base_keeps_the_quarter_body():
    cone = make_wedge()
    f = (F(2), F(2))  # on the far base, transverse coordinate 1
    out = truncated_cone_shrink(cone, f)
    assert out.contains(homothety(cone.hull, f, F(1, 4)))


def test_shrink_below_one_third_rejected():
    cone = make_wedge()
    with pytest.raises(MuTooSmall):
        truncated_cone_shrink(cone, (F(1), F(1, 2)))
    with pytest.raises(OutOfRange):
        truncated_cone_shrink(cone, (F(5), F(5)))


def test_shrink_bound_matters_just_below_one_third():
    # prism over [-1,1]: conv({x} u far base) loses the quarter body once
    # the transverse coordinate drops below 1/3
    base = Polyhedron.from_generators([(F(-1), F(0)), (F(1), F(0))])
    cone = TruncatedCone.make(base, F(0), (F(0), F(1)))
    mu = F(1, 3) - F(1, 24)
    f = (F(0), mu)
    with pytest.raises(MuTooSmall):
        truncated_cone_shrink(cone, f)
    x = (F(0), F(0))
    by_hand = Polyhedron.from_generators(
        [x, (F(-1), F(1)), (F(1), F(1))])
    assert not by_hand.contains(homothety(cone.hull, f, F(1, 4)))


def test_shrink_sandwich_on_randomized_cones():
    rng = random.Random(20240815)
    checked = 0
    while checked < 50:
        dim = rng.choice((2, 2, 3))
        if dim == 2:
            xs = sorted(rng.sample(range(-4, 6), 2))
            verts = [(F(xs[0]), F(0)), (F(xs[1]), F(0))]
            shift = (F(rng.randint(-2, 2)), F(rng.choice((-2, -1, 1, 2))))
        else:
            pts = [(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)), F(0))
                   for _ in range(3)]
            if la.affine_rank(pts) != 2:
                continue
            verts = pts
            shift = (F(rng.randint(-2, 2)), F(rng.randint(-2, 2)),
                     F(rng.choice((-2, -1, 1, 2))))
        base = Polyhedron.from_generators(verts)
        alpha = rng.choice((F(0), F(1, 2), F(1), F(3)))
        cone = TruncatedCone.make(base, alpha, shift)
        mu = rng.choice((F(1, 3), F(2, 5), F(1, 2), F(3, 4), F(1)))
        weights = [F(rng.randint(0, 4)) for _ in verts]
        if sum(weights) == 0:
            weights[0] = F(1)
        tot = sum(weights)
        point = tuple(sum(w * v[k] for w, v in zip(weights, verts)) / tot
                      for k in range(dim))
        f = tuple((1 + mu * alpha) * x for x in point)
        f = tuple(a + mu * b for a, b in zip(f, shift))
        out = truncated_cone_shrink(cone, f)
        assert cone.hull.contains(out)
        assert out.contains(homothety(cone.hull, f, F(1, 4)))
        checked += 1


# ---------------------------------------------------------------------------
# Caratheodory facet subsets


def unique_convex_combination(normals, idx):
    """The unique affine weights of 0 on the selected normals."""
    rows = [[normals[j][c] for j in idx] for c in range(len(normals[0]))]
    rows.append([F(1)] * len(idx))
    rhs = tuple([F(0)] * len(normals[0]) + [F(1)])
    lam = la.solve(tuple(tuple(r) for r in rows), rhs)
    assert lam is not None
    return lam


def check_subset_result(m, res):
    normals = [h.normal for h in m.halfspaces]
    chosen = [normals[j] for j in res.indices]
    assert la.affine_rank(chosen) == len(chosen) - 1
    lam = unique_convex_combination(normals, res.indices)
    assert all(w > 0 for w in lam)
    assert res.simplex_dim + res.lineality_dim == m.dim
    assert len(res.indices) == res.simplex_dim + 1
    relaxed = Polyhedron.from_halfspaces(
        [m.halfspaces[j] for j in res.indices], m.dim)
    assert relaxed.recession_is_subspace()
    assert len(relaxed.lineality) == res.lineality_dim
    assert relaxed.contains(m)


def test_subset_of_the_split_takes_both_facets():
    res = caratheodory_facet_subset(cube_face_construction(2, 2))
    assert res == FacetSubsetResult((0, 1), 1, 1)


def test_subset_of_the_diamond_may_use_an_opposite_pair():
    m = cube_face_construction(2, 4)
    res = caratheodory_facet_subset(m)
    check_subset_result(m, res)


def test_subset_of_a_simplex_keeps_all_normals():
    m = Polyhedron.from_generators([(F(0), F(0)), (F(2), F(0)), (F(0), F(2))])
    res = caratheodory_facet_subset(m)
    assert sorted(res.indices) == [0, 1, 2]
    assert res.simplex_dim == 2 and res.lineality_dim == 0
    check_subset_result(m, res)


def test_subset_rejects_normals_that_miss_the_origin():
    quadrant = Polyhedron.from_halfspaces(
        [HalfSpace.make((F(-1), F(0)), F(0)), HalfSpace.make((F(0), F(-1)), F(0))], 2)
    with pytest.raises(NotLatticeFreeInput):
        caratheodory_facet_subset(quadrant)


def test_subset_invariants_across_the_census():
    for n in (2, 3):
        for i in range(2, 2 ** n + 1):
            m = cube_face_construction(n, i)
            check_subset_result(m, caratheodory_facet_subset(m))


# ---------------------------------------------------------------------------
# lifting


def test_lift_slab_case_returns_the_integer_split():
    out = lift_to_nplus1(tri(1), F12, F(2, 3), seg01(), 1)
    assert out == Polyhedron.from_halfspaces(
        [HalfSpace.make((F(0), F(-1)), F(0)), HalfSpace.make((F(0), F(1)), F(1))], 2)


def test_lift_core_case_adds_one_facet():
    l = tri(1)
    f = (F(1, 2), F(1))
    gamma = F(2, 3)
    out = lift_to_nplus1(l, f, gamma, seg01(), 1)
    assert len(out.halfspaces) <= 3
    assert out.contains(homothety(l, f, gamma / 4))
    cert = certify_lattice_free(out)
    assert cert.lattice_free


def prism_over(d, f_height):
    """3-dim body whose level-1 slice is exactly d, narrowing downwards."""
    c0 = F12
    half = homothety(d, c0, F(1, 2))
    return Polyhedron.from_generators(
        [v + (F(1),) for v in d.vertices] + [v + (F(-1),) for v in half.vertices])


def test_lift_three_dimensional_with_triangle_base():
    d = tri(1)
    l = prism_over(d, None)
    f = (F(1, 2), F(1, 2), F(1, 8))
    out = lift_to_nplus1(l, f, F(1, 2), d, 0)
    assert len(out.halfspaces) <= 4
    assert out.contains(homothety(l, f, F(1, 8)))
    cert = certify_lattice_free(out)
    assert cert.lattice_free


def test_lift_hypothesis_violations_name_the_failed_clause():
    l, d = tri(1), seg01()
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, F12, F(0), d, 1)
    assert e.value.which == "gamma-out-of-range"
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, (F(0), F(0)), F(2, 3), d, 1)
    assert e.value.which == "f-not-interior"
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, F12, F(2, 3),
                       Polyhedron.from_generators([(F(0),), (F(3),)]), 1)
    assert e.value.which == "base-not-lattice-free"
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, F12, F(2, 3), d, 0)  # level-0 slice is [-1, 2]
    assert e.value.which == "slice-not-dominated"
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, F12, F(1), d, 1)  # full triangle is 3/2 wide
    assert e.value.which == "width-exceeds-one"
    with pytest.raises(HypothesisViolated) as e:
        lift_to_nplus1(l, F12, F(1, 6), d, 1)  # shrunken body stays below
    assert e.value.which == "slice-misses-body"


def test_lift_postconditions_on_varied_instances():
    cases = []
    for t in (1, 2, 3):
        cases.append((tri(t), (F(1, 2), F(1)), F(1, 2), seg01(), 1))
        cases.append((tri(t), (F(1, 2), F(1)), F(1, 3), seg01(), 1))
        cases.append((tri(t), (F(1, 2), F(7, 8)), F(1, 2), seg01(), 1))
    d = tri(1)
    l3 = prism_over(d, None)
    for height in (F(0), F(1, 8), F(1, 4), F(1, 2)):
        cases.append((l3, (F(1, 2), F(1, 2), height), F(1, 2), d, 0))
    for l, f, gamma, d_, t_ in cases:
        out = lift_to_nplus1(l, f, gamma, d_, t_)
        assert len(out.halfspaces) <= len(d_.halfspaces) + 1
        assert out.contains(homothety(l, f, gamma / 4))


# ---------------------------------------------------------------------------
# approximation pipelines


def test_any_f_short_circuits_bodies_with_few_facets():
    split = cube_face_construction(2, 2)
    res = approximate_any_f(split, F12)
    assert res.body == split and res.factor == 1


def test_any_f_on_the_diamond():
    diam = cube_face_construction(2, 4)
    res = approximate_any_f(diam, F12)
    assert len(res.body.halfspaces) <= 3
    assert res.factor == 2
    assert res.factor <= 4 * flatness_bound(2)
    rep = relative_strength(res.body, diam, F12)
    assert rep.kind == "finite" and rep.value == res.factor
    assert res.body.contains(homothety(diam, F12, 1 / res.factor))


def test_any_f_takes_the_lifting_path_near_a_level():
    diam = cube_face_construction(2, 4)
    f = (F(1, 2), F(1))
    res = approximate_any_f(diam, f)
    assert res.factor <= 4 * flatness_bound(2)
    assert certify_lattice_free(res.body).lattice_free


def test_fixed_f_split_branch_factor_bound_scales_with_denominator():
    diam = cube_face_construction(2, 4)
    for f in (F12, (F(1, 3), F(2, 3)), (F(2, 5), F(1, 5))):
        res = approximate_fixed_f(diam, f)
        s = point_denominator(f)
        assert len(res.body.halfspaces) <= 3
        assert res.factor <= flatness_bound(2) * 4 * s


def test_fixed_f_integer_level_branch_recurses():
    diam = cube_face_construction(2, 4)
    res = approximate_fixed_f(diam, (F(1), F(1, 2)))
    assert res.factor == F(7, 2)
    assert len(res.body.halfspaces) == 3
    assert res.body.contains(homothety(diam, (F(1), F(1, 2)), 1 / res.factor))


def test_pipelines_on_three_dimensional_bodies():
    fs = ((F(1, 2), F(1, 2), F(1, 2)), (F(1, 3), F(1, 2), F(3, 4)),
          (F(1), F(1, 2), F(1, 2)))
    for i in (5, 6, 8):
        l = cube_face_construction(3, i)
        for f in fs:
            if not l.contains_point(f, strict=True):
                continue
            res = approximate_any_f(l, f)
            assert len(res.body.halfspaces) <= 5
            assert res.factor <= 4 * flatness_bound(3)
            res2 = approximate_fixed_f(l, f)
            assert len(res2.body.halfspaces) <= 4
            assert res2.factor <= flatness_bound(3) * 16 * point_denominator(f)


def test_pipeline_rejects_bad_inputs():
    diam = cube_face_construction(2, 4)
    with pytest.raises(PointNotInterior):
        approximate_any_f(diam, (F(0), F(0)))
    box = Polyhedron.from_generators(
        [(F(0), F(0)), (F(3), F(0)), (F(0), F(3)), (F(3), F(3))])
    with pytest.raises(NotLatticeFreeInput):
        approximate_fixed_f(box, (F(3, 2), F(3, 2)))
    four = cylinder_lift_witness(cube_face_construction(3, 8),
                                 (F(1, 2), F(1, 2), F(1, 2)), 4)
    with pytest.raises(UnsupportedDimension):
        approximate_any_f(four, (F(1, 2), F(1, 2), F(1, 2), F(0)))


def test_pipeline_outputs_are_certified_on_a_mixed_family():
    bodies = [cube_face_construction(2, 3), cube_face_construction(2, 4),
              tri(1), tri(2),
              simplex_tower(F12, F(2)).body]
    fs = (F12, (F(1, 3), F(1, 2)), (F(1, 2), F(3, 4)), (F(1), F(1, 2)))
    for l in bodies:
        for f in fs:
            if not l.contains_point(f, strict=True):
                continue
            for res in (approximate_any_f(l, f), approximate_fixed_f(l, f)):
                cert = certify_lattice_free(res.body)
                assert cert.lattice_free
                assert res.body.contains(homothety(l, f, 1 / res.factor))


# ---------------------------------------------------------------------------
# shrink factors and pyramids


def test_shrink_epsilon_of_the_diamond():
    diam = cube_face_construction(2, 4)
    zs = facet_witnesses(diam)
    eps = shrink_epsilon(diam, F12, zs)
    assert eps == F(1, 4)  # worst midpoint gauge is 1/2
    shrunk = homothety(diam, F12, 1 - eps)
    for zi, zj in itertools.combinations(zs, 2):
        mid = tuple((a + b) / 2 for a, b in zip(zi, zj))
        assert shrunk.contains_point(mid)


def test_shrink_epsilon_symmetric_segment():
    eps = shrink_epsilon(seg01(), (F(1, 2),), [(F(0),), (F(1),)])
    assert eps == F(1, 2)  # the single midpoint is the center itself


def test_shrink_epsilon_validates_witnesses():
    diam = cube_face_construction(2, 4)
    zs = facet_witnesses(diam)
    with pytest.raises(OutOfRange):
        shrink_epsilon(diam, F12, zs[:3])
    bad = list(zs)
    bad[0] = (F(1, 2), F(0))
    with pytest.raises(OutOfRange):
        shrink_epsilon(diam, F12, bad)
    bad = list(zs)
    bad[0] = (F(5), F(5))
    with pytest.raises(OutOfRange):
        shrink_epsilon(diam, F12, bad)
    with pytest.raises(NotPolytope):
        shrink_epsilon(cube_face_construction(2, 2), F12,
                       [(F(0), F(0)), (F(0), F(1))])
    with pytest.raises(PointNotInterior):
        shrink_epsilon(diam, (F(2), F(2)), zs)


def test_pyramid_over_the_unit_segment():
    l = seg01()
    zs = [(F(0),), (F(1),)]
    eps = shrink_epsilon(l, (F(1, 2),), zs)
    pw = inapprox_pyramid(l, (F(1, 2),), zs, eps, F(1, 2))
    assert pw.f == (F(1, 2), F(1, 4))
    assert len(pw.body.halfspaces) == 3
    assert pw.body.vertices == (
        (F(-8, 5), F(-1)), (F(1, 2), F(5, 16)), (F(13, 5), F(-1)))
    # level-zero slice recovers the base body exactly
    assert drop_last_axis(section_last_axis(pw.body, 0)) == l
    cert = certify_lattice_free(pw.body)
    assert cert.lattice_free and cert.maximal


def test_pyramid_over_the_diamond_adds_one_facet():
    diam = cube_face_construction(2, 4)
    zs = facet_witnesses(diam)
    eps = shrink_epsilon(diam, F12, zs)
    pw = inapprox_pyramid(diam, F12, zs, eps, F(1, 2))
    assert len(pw.body.halfspaces) == 5
    assert pw.f == (F(1, 2), F(1, 2), F(1, 8))
    assert drop_last_axis(section_last_axis(pw.body, 0)) == diam
    assert pw.body.contains_point(pw.f, strict=True)


def test_pyramid_interior_cover_forces_the_facet_count():
    # bodies that hold the inner pyramid strictly need one facet more than
    # the base; two-facet splits never manage it
    l = seg01()
    zs = [(F(0),), (F(1),)]
    eps = shrink_epsilon(l, (F(1, 2),), zs)
    mu = F(1, 2)
    pw = inapprox_pyramid(l, (F(1, 2),), zs, eps, mu)
    em = eps * mu
    apex = (F(1, 2), em)
    base = homothety(l, (F(1, 2),), 1 / em)
    p = Polyhedron.from_generators([apex] + [v + (F(-1),) for v in base.vertices])
    inner = homothety(p, apex, em)
    assert pw.body.contains_in_interior(inner)
    assert len(pw.body.halfspaces) == 3
    splits = [
        Polyhedron.from_halfspaces([HalfSpace.make((F(0), F(-1)), F(0)),
                                    HalfSpace.make((F(0), F(1)), F(1))], 2),
        Polyhedron.from_halfspaces([HalfSpace.make((F(0), F(-1)), F(1)),
                                    HalfSpace.make((F(0), F(1)), F(0))], 2),
        Polyhedron.from_halfspaces([HalfSpace.make((F(-1), F(0)), F(0)),
                                    HalfSpace.make((F(1), F(0)), F(1))], 2),
        Polyhedron.from_halfspaces([HalfSpace.make((F(-1), F(-4)), F(1)),
                                    HalfSpace.make((F(1), F(4)), F(0))], 2),
    ]
    for s in splits:
        assert not s.contains_in_interior(inner)


def test_pyramid_rejects_out_of_range_parameters():
    l = seg01()
    zs = [(F(0),), (F(1),)]
    with pytest.raises(OutOfRange):
        inapprox_pyramid(l, (F(1, 2),), zs, F(1), F(1, 2))
    diam = cube_face_construction(2, 4)
    with pytest.raises(OutOfRange):
        # worst witness midpoint sits at gauge 1/2, so eps must stay <= 1/2
        inapprox_pyramid(diam, F12, facet_witnesses(diam), F(3, 4), F(1, 2))
    with pytest.raises(NotPolytope):
        inapprox_pyramid(cube_face_construction(2, 2), F12,
                         [(F(0), F(0)), (F(0), F(1))], F(1, 4), F(1, 2))


# ---------------------------------------------------------------------------
# simplex towers and cylinders


def test_tower_base_case_is_the_unit_interval():
    tw = simplex_tower((F(1, 2),), F(2))
    assert tw.body == seg01()
    assert tw.witnesses == ((F(0),), (F(1),))


def test_tower_in_the_plane():
    tw = simplex_tower(F12, F(2))
    assert tw.body.vertices == ((F(-1, 2), F(-3, 2)), (F(1, 2), F(3, 2)),
                                (F(3, 2), F(1, 2)))
    assert tw.witnesses == ((F(0), F(0)), (F(1), F(1)), (F(0), F(-1)))
    assert tw.body.contains_point(F12, strict=True)
    cert = certify_lattice_free(tw.body)
    assert cert.lattice_free and cert.maximal
    shrunk = homothety(tw.body, F12, F(1, 2))
    for zi, zj in itertools.combinations(tw.witnesses, 2):
        assert segment_meets(shrunk, zi, zj)
    # the ratio is sharp: a slightly smaller copy loses a witness segment
    tighter = homothety(tw.body, F12, F(2, 5))
    assert not segment_meets(tighter, (F(0), F(0)), (F(0), F(-1)))


def test_tower_three_dimensional_with_fractional_ratio():
    f = (F(1, 2), F(1, 3), F(1, 5))
    tw = simplex_tower(f, F(5, 2))
    assert len(tw.body.halfspaces) == 4
    assert len(tw.witnesses) == 4
    shrunk = homothety(tw.body, f, F(2, 5))
    for zi, zj in itertools.combinations(tw.witnesses, 2):
        assert segment_meets(shrunk, zi, zj)


def test_tower_witnesses_defeat_sampled_covering_bodies():
    # a lattice-free body with fewer facets than the tower cannot separate
    # every witness pair, so its approximation ratio is at least alpha
    alpha = F(2)
    tw = simplex_tower(F12, alpha)
    slanted = Polyhedron.from_halfspaces(
        [HalfSpace.make((F(-1), F(-1)), F(0)), HalfSpace.make((F(1), F(1)), F(2))], 2)
    few_facets = [
        cube_face_construction(2, 2),
        cylinder_lift_witness(seg01(), (F(1, 2),), 2),
        slanted,
    ]
    for b in few_facets:
        rep = relative_strength(b, tw.body, F12)
        assert rep.kind == "infinite" or rep.value >= alpha
    # richer bodies may do better; the tower itself covers itself exactly
    assert relative_strength(tw.body, tw.body, F12).value == 1
    full = relative_strength(cube_face_construction(2, 4), tw.body, F12)
    assert full.kind == "finite" and full.value >= alpha


def test_tower_rejects_bad_parameters():
    with pytest.raises(OutOfRange):
        simplex_tower((F(1), F(2)), F(2))
    with pytest.raises(OutOfRange):
        simplex_tower(F12, F(1))
    with pytest.raises(UnsupportedDimension):
        simplex_tower((F(1, 2),) * 4, F(2))


def test_cylinder_over_a_segment_is_a_split():
    out = cylinder_lift_witness(seg01(), (F(1, 2),), 2)
    assert out == Polyhedron.from_halfspaces(
        [HalfSpace.make((F(-1), F(0)), F(0)), HalfSpace.make((F(1), F(0)), F(1))], 2)


def test_cylinder_keeps_facets_and_holds_the_fibre():
    diam = cube_face_construction(2, 4)
    out = cylinder_lift_witness(diam, F12, 3)
    assert len(out.halfspaces) == 4
    assert out.lineality == ((F(0), F(0), F(1)),)
    fibre = Polyhedron.from_generators(
        [(F(1, 2), F(1, 2), F(0))],
        [(F(0), F(0), F(1)), (F(0), F(0), F(-1))], 3)
    for mu in (F(1, 10), F(1, 2), F(9, 10)):
        assert homothety(out, (F(1, 2), F(1, 2), F(0)), mu).contains(fibre)
    with pytest.raises(OutOfRange):
        cylinder_lift_witness(diam, F12, 2)
