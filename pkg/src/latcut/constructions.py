"""Constructive procedures around lattice-free bodies.

Cube-face bodies realize every facet count between 2 and 2^n.  Truncated
cones shrink onto a quarter-scale core once the interior point sits at
transverse height 1/3 or more.  A Caratheodory step picks facet subsets
whose relaxation splits as simplex plus subspace.  The lifting step turns a
lattice-free base in dimension n-1 into a lattice-free body in dimension n
with one facet more, and the two approximation pipelines drive it to bodies
with few facets and a certified inflation factor.  The tail of the module
builds the witnesses for the negative results: shrink factors, lattice-free
pyramids that force a facet count, simplex towers, and cylinder lifts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .cuts import gauge
from .errors import (
    DimensionMismatch,
    EmptySet,
    HypothesisViolated,
    MuTooSmall,
    NotLatticeFreeInput,
    NotPolytope,
    OutOfRange,
    PointNotInterior,
    UnboundedEnumeration,
    UnsupportedDimension,
    WitnessOnBoundary,
)
from .geometry import (
    HalfSpace,
    Polyhedron,
    UnimodularMap,
    drop_last_axis,
    embed_last_axis,
    homothety,
    lp_solve,
    minkowski_scale_shift,
    product_with_line,
    section_last_axis,
    separate,
    transform,
)
from .lattice import (
    certify_lattice_free,
    flatness_bound,
    grow_to_maximal,
    interior_lattice_point,
    lattice_width,
    point_denominator,
)
from .linalg import Vec, dot, vadd, vneg, vscale, vsub, vzero
from .simplex import solve_ineq
from .strength import relative_strength

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# cube faces: every facet count from 2 to 2^n

def cube_face_construction(n: int, i: int) -> Polyhedron:
    """Maximal lattice-free body in R^n with exactly i facets.

    Maintains a list of pairwise disjoint faces of the 0/1 cube that covers
    its vertex set, starting from the bottom and top facets and splitting
    the first face of positive dimension along its lowest free coordinate
    until i faces remain.  Each face contributes the inequality sum_fixed
    (+-x_t) <= #ones; the splitting keeps every cube vertex tight on exactly
    one inequality, which is what makes the intersection lattice-free and
    every inequality facet-defining.
    """
    if n < 1:
        raise OutOfRange(f"dimension {n} out of range")
    if i < 2 or i > 2 ** n:
        raise OutOfRange(f"facet count {i} outside [2, {2 ** n}]")
    faces: list[tuple] = [
        tuple([None] * (n - 1) + [0]),
        tuple([None] * (n - 1) + [1]),
    ]
    while len(faces) < i:
        j = next(k for k, face in enumerate(faces) if None in face)
        face = faces[j]
        ax = face.index(None)
        lower, upper = list(face), list(face)
        lower[ax], upper[ax] = 0, 1
        faces[j:j + 1] = [tuple(lower), tuple(upper)]
    hs = []
    for face in faces:
        normal = tuple(ZERO if c is None else (ONE if c else -ONE) for c in face)
        hs.append(HalfSpace.make(normal, Fraction(sum(1 for c in face if c == 1))))
    out = Polyhedron.from_halfspaces(hs, n)
    assert len(out.halfspaces) == i
    cert = certify_lattice_free(out)
    assert cert.lattice_free and cert.maximal
    return out


# ---------------------------------------------------------------------------
# truncated cones

@dataclass(frozen=True)
class TruncatedCone:
    """conv(base, far base) where the far base is (1+alpha) base + shift.

    The shift must leave the affine hull of the base, so the slices
    (1 + mu alpha) base + mu shift, mu in [0,1], sweep the hull exactly
    once and every point has a well defined transverse coordinate mu.
    """

    base: Polyhedron
    alpha: Fraction
    shift: Vec
    hull: Polyhedron

    @staticmethod
    def make(base: Polyhedron, alpha, shift) -> "TruncatedCone":
        alpha = la.frac(alpha)
        shift = la.vec(shift)
        if alpha < 0:
            raise OutOfRange("expansion ratio must be nonnegative")
        if len(shift) != base.dim:
            raise DimensionMismatch("shift dimension mismatch")
        anchor = base.vertices[0]
        span = [vsub(v, anchor) for v in base.vertices[1:]] + list(base.rays)
        delta = vadd(vscale(alpha, anchor), shift)
        if la.rank(span + [delta]) == la.rank(span):
            raise OutOfRange("far base shares the affine hull of the base")
        far = minkowski_scale_shift(base, ONE + alpha, shift)
        hull = Polyhedron.from_generators(
            list(base.vertices) + list(far.vertices),
            list(base.rays) + list(far.rays),
            base.dim,
        )
        cone = TruncatedCone(base, alpha, shift, hull)
        for mu in (ZERO, Fraction(1, 3), Fraction(1, 2), ONE):
            assert hull.contains(cone.slice_at(mu))
        return cone

    def slice_at(self, mu) -> Polyhedron:
        mu = la.frac(mu)
        return minkowski_scale_shift(self.base, ONE + mu * self.alpha,
                                     vscale(mu, self.shift))

    def transverse_coordinate(self, x) -> Fraction:
        """The mu of the slice through x; 0 on the base, 1 on the far base."""
        anchor = self.base.vertices[0]
        span = [vsub(v, anchor) for v in self.base.vertices[1:]]
        span += list(self.base.rays)
        delta = vadd(vscale(self.alpha, anchor), self.shift)
        g = la.project_off(delta, span)
        return dot(g, vsub(la.vec(x), anchor)) / dot(g, delta)


def truncated_cone_shrink(cone: TruncatedCone, f) -> Polyhedron:
    """Pull the base of a truncated cone into a single interior point.

    Writes f = (1 + mu alpha) x + mu shift with x in the base and replaces
    the cone by conv({x}, far base).  The result still holds the quarter
    homothety of the hull about f provided mu >= 1/3.
    """
    f = la.vec(f)
    if not cone.hull.contains_point(f):
        raise OutOfRange("point outside the truncated cone")
    mu = cone.transverse_coordinate(f)
    assert ZERO <= mu <= ONE
    if mu < Fraction(1, 3):
        raise MuTooSmall(f"transverse coordinate {mu} below 1/3")
    scale = ONE + mu * cone.alpha
    x = vscale(ONE / scale, vsub(f, vscale(mu, cone.shift)))
    assert cone.base.contains_point(x)
    far = minkowski_scale_shift(cone.base, ONE + cone.alpha, cone.shift)
    out = Polyhedron.from_generators([x] + list(far.vertices), far.rays,
                                     cone.base.dim)
    assert cone.hull.contains(out)
    assert out.contains(homothety(cone.hull, f, Fraction(1, 4)))
    return out


# ---------------------------------------------------------------------------
# Caratheodory facet subsets

@dataclass(frozen=True)
class FacetSubsetResult:
    """Facet subset whose relaxation is a simplex plus a subspace."""

    indices: tuple[int, ...]
    simplex_dim: int
    lineality_dim: int


def _zero_combination(normals: list[Vec]):
    """Positive convex weights on an affinely independent subset of the
    normals expressing 0, or None when 0 is outside their hull."""
    m = len(normals)
    n = len(normals[0])
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    for j in range(m):
        rows.append(tuple(-ONE if k == j else ZERO for k in range(m)))
        rhs.append(ZERO)
    ones = (ONE,) * m
    rows.append(ones)
    rhs.append(ONE)
    rows.append(vneg(ones))
    rhs.append(-ONE)
    for c in range(n):
        row = tuple(normals[j][c] for j in range(m))
        rows.append(row)
        rhs.append(ZERO)
        rows.append(vneg(row))
        rhs.append(ZERO)
    res = solve_ineq(rows, rhs, vzero(m), sense="max")
    if res.status == "infeasible":
        return None
    lam = list(res.point)
    support = [j for j in range(m) if lam[j] > 0]
    while True:
        pts = [normals[j] for j in support]
        eqs = [[p[c] for p in pts] for c in range(n)]
        eqs.append([ONE] * len(pts))
        dep = la.kernel_basis(eqs, len(pts))
        if not dep:
            break
        nu = dep[0]
        if all(x <= 0 for x in nu):
            nu = vneg(nu)
        t = min(lam[support[k]] / nu[k] for k in range(len(nu)) if nu[k] > 0)
        for k, j in enumerate(support):
            lam[j] -= t * nu[k]
        support = [j for j in support if lam[j] > 0]
    assert sum(lam[j] for j in support) == 1
    return support, [lam[j] for j in support]


def caratheodory_facet_subset(m: Polyhedron) -> FacetSubsetResult:
    """Facet subset of a lattice-free body whose relaxation splits off all
    unboundedness as lineality around a simplex.

    A lattice-free body has 0 in the convex hull of its facet normals
    (otherwise some direction recedes from every facet and the interior
    holds a whole shifted orthant); reducing a convex combination to an
    affinely independent support keeps all weights positive, which forces
    the recession cone of the relaxation to be a subspace.
    """
    normals = [h.normal for h in m.halfspaces]
    got = _zero_combination(normals)
    if got is None:
        raise NotLatticeFreeInput("0 outside the hull of the facet normals")
    idx, lam = got
    assert all(w > 0 for w in lam)
    n = m.dim
    relaxed = Polyhedron.from_halfspaces([m.halfspaces[j] for j in idx], n)
    k = len(relaxed.lineality)
    assert len(idx) == n - k + 1
    assert relaxed.recession_is_subspace()
    assert len(relaxed.halfspaces) == len(idx)
    return FacetSubsetResult(tuple(idx), n - k, k)


# ---------------------------------------------------------------------------
# the lifting step

def _last_axis_range(p: Polyhedron):
    """Exact range of the last coordinate; None marks an unbounded end."""
    e = vzero(p.dim - 1) + (ONE,)
    lo = lp_solve(e, p, sense="min")
    hi = lp_solve(e, p, sense="max")
    return (lo.value if lo.status == "optimal" else None,
            hi.value if hi.status == "optimal" else None)


def _integer_slab(dim: int, lo: int) -> Polyhedron:
    e = vzero(dim - 1) + (ONE,)
    return Polyhedron.from_halfspaces(
        [HalfSpace.make(e, Fraction(lo + 1)), HalfSpace.make(vneg(e), Fraction(-lo))],
        dim)


def _slab_slice_lattice_free(b: Polyhedron):
    """Lattice-freeness certificate by horizontal slicing.

    Interior integer points of a full-dimensional body must sit on integer
    levels of the last axis strictly inside its level range, and on such a
    level they are exactly the interior integer points of the substituted
    body one dimension down.  Returns (free, witness).
    """
    assert b.fulldim
    lo, hi = _last_axis_range(b)
    if lo is None or hi is None:
        raise UnboundedEnumeration("slice certificate needs a bounded level range")
    for w in range(math.floor(lo) + 1, math.ceil(hi)):
        rows = []
        infeasible = False
        for h in b.halfspaces:
            a = h.normal[:-1]
            c = h.offset - h.normal[-1] * w
            if la.is_zero_vec(a):
                if c <= 0:
                    infeasible = True
                    break
            else:
                rows.append(HalfSpace.make(a, c))
        if infeasible:
            continue
        if not rows:
            return False, vzero(b.dim - 1) + (Fraction(w),)
        try:
            s = Polyhedron.from_halfspaces(rows, b.dim - 1)
        except EmptySet:
            continue
        if not s.fulldim:
            continue
        z = interior_lattice_point(s)
        if z is not None:
            return False, z + (Fraction(w),)
    return True, None


def lift_to_nplus1(l: Polyhedron, f, gamma, d: Polyhedron, t: int) -> Polyhedron:
    """One-dimension-up lattice-free cover with at most one facet more.

    Given a lattice-free base d for the level-t slice of l and a shrink
    ratio gamma whose homothety L' has last-axis width at most 1 and meets
    level t, produces a lattice-free body with at most (facets of d) + 1
    facets containing homothety(l, f, gamma/4).  Separating half-spaces are
    pushed against the parts of level t outside each facet of d; if both
    integer levels remain facets afterwards, a truncated-cone shrink about
    f removes one of them.
    """
    f = la.vec(f)
    gamma = la.frac(gamma)
    t = int(t)
    n = l.dim
    if n < 2:
        raise UnsupportedDimension("lifting starts from the plane")
    if len(f) != n:
        raise DimensionMismatch("point dimension mismatch")
    if d.dim != n - 1:
        raise DimensionMismatch("base must live one dimension down")
    if not (0 < gamma <= 1):
        raise HypothesisViolated("gamma-out-of-range", f"gamma = {gamma}")
    if not l.contains_point(f, strict=True):
        raise HypothesisViolated("f-not-interior", "f must be interior to the body")
    if not d.fulldim:
        raise HypothesisViolated("base-not-full-dimensional", "")
    if not certify_lattice_free(d).lattice_free:
        raise HypothesisViolated("base-not-lattice-free", "")
    try:
        sec = drop_last_axis(section_last_axis(l, t))
    except EmptySet:
        sec = None
    if sec is not None and not d.contains(sec):
        raise HypothesisViolated("slice-not-dominated",
                                 "the level-t slice leaves the base")
    lp = homothety(l, f, gamma)
    lo, hi = _last_axis_range(lp)
    if lo is None or hi is None or hi - lo > 1:
        raise HypothesisViolated("width-exceeds-one",
                                 "the shrunken body is too wide transversally")
    if not lo <= t <= hi:
        raise HypothesisViolated("slice-misses-body",
                                 "the shrunken body misses level t")

    # normalize: slice level to 0, f weakly above it
    matrix = la.identity(n)
    if f[-1] < t:
        matrix = tuple(tuple(-x if i == n - 1 else x for x in row)
                       for i, row in enumerate(matrix))
        shift = vzero(n - 1) + (Fraction(t),)
    else:
        shift = vzero(n - 1) + (Fraction(-t),)
    phi = UnimodularMap.make(matrix, shift)
    l0 = transform(l, phi)
    f0 = phi.apply(f)
    lp0 = transform(lp, phi)

    lpp = homothety(lp0, f0, Fraction(1, 4))
    lo2, hi2 = _last_axis_range(lpp)
    if hi2 <= 0 or lo2 >= 0:
        # the quarter body misses level 0: an integer slab already covers it
        b0 = _integer_slab(n, -1 if hi2 <= 0 else 0)
    else:
        b0 = _lift_core(lp0, f0, d)
    assert b0.contains(lpp)
    free, wit = _slab_slice_lattice_free(b0)
    assert free, f"lifted body has interior lattice point {wit}"
    assert len(b0.halfspaces) <= len(d.halfspaces) + 1
    return transform(b0, phi.inverse())


def _lift_core(lp0: Polyhedron, f0: Vec, d: Polyhedron) -> Polyhedron:
    """Separation stage of the lift, in normalized coordinates.

    lp0 is the shrunken body, its interior meets level 0, f0 is its center
    with 0 <= f0_n <= 1/4.
    """
    n = lp0.dim
    e = vzero(n - 1) + (ONE,)
    seps = []
    for h in d.halfspaces:
        # closure of the part of level 0 beyond facet h of the base
        beyond = Polyhedron.from_halfspaces(
            [HalfSpace.make(vneg(h.normal) + (ZERO,), -h.offset),
             HalfSpace.make(e, ZERO),
             HalfSpace.make(vneg(e), ZERO)],
            n)
        seps.append(separate(lp0, beyond, f0))
    caps = [HalfSpace.make(e, ONE), HalfSpace.make(vneg(e), ONE)]
    bprime = Polyhedron.from_halfspaces(seps + caps, n)
    m = len(d.halfspaces)
    if len(bprime.halfspaces) <= m + 1:
        return bprime

    # both caps are facets: drop one through a truncated-cone shrink
    assert ZERO <= f0[-1] <= Fraction(1, 4)
    slice_normals = []
    for h in seps:
        assert not la.is_zero_vec(h.normal[:-1])
        slice_normals.append(h.normal[:-1])
    got = _zero_combination(slice_normals)
    if got is None:
        raise NotLatticeFreeInput("separator slice normals do not surround 0")
    idx, lam = got
    kept = [seps[j] for j in idx]
    tshape = Polyhedron.from_halfspaces(kept + caps, n)

    def size(level: Fraction) -> Fraction:
        # positive multiple of the inradius-type size of the level slice
        return sum(w * (seps[j].offset - seps[j].normal[-1] * level)
                   for w, j in zip(lam, idx))

    assert size(ZERO) > 0
    s_lo, s_hi = size(-ONE), size(ONE)
    assert s_lo > 0 and s_hi > 0
    base_level = ONE if s_hi <= s_lo else -ONE
    other_level = -base_level
    alpha = size(other_level) / size(base_level) - ONE
    # translation between the slice systems: g_j . p' matches the offsets
    rhs = tuple((seps[j].offset - seps[j].normal[-1] * other_level)
                - (ONE + alpha) * (seps[j].offset - seps[j].normal[-1] * base_level)
                for j in idx)
    pprime = la.solve(tuple(h.normal[:-1] for h in kept), rhs)
    assert pprime is not None
    p = pprime + (other_level - (ONE + alpha) * base_level,)
    base = embed_last_axis(drop_last_axis(section_last_axis(tshape, base_level)),
                           base_level)
    cone = TruncatedCone.make(base, alpha, p)
    assert cone.hull == tshape
    # the interior point sits high enough: mu >= 3/8 from the upper base,
    # mu >= 1/2 from the lower, both clearing the 1/3 threshold
    mu = (ONE - f0[-1]) / 2 if base_level == ONE else (ONE + f0[-1]) / 2
    assert cone.transverse_coordinate(f0) == mu
    assert mu >= (Fraction(3, 8) if base_level == ONE else Fraction(1, 2))
    tprime = truncated_cone_shrink(cone, f0)
    rest = [seps[j] for j in range(m) if j not in set(idx)]
    return Polyhedron.from_halfspaces(list(tprime.halfspaces) + rest, n)


# ---------------------------------------------------------------------------
# approximation pipelines

@dataclass(frozen=True)
class ApproxResult:
    """Approximating body together with its exact inflation factor."""

    body: Polyhedron
    factor: Fraction


def approximate_any_f(l: Polyhedron, f) -> ApproxResult:
    """Few-facet lattice-free cover of l with factor at most 4 flatness(n).

    Rotates a lattice width direction onto the last axis, shrinks by one
    over the flatness bound, and either an integer slab already covers the
    shrunken body or an integer level cuts it, in which case the level
    slice is grown to a maximal lattice-free base and lifted back up.
    """
    f = la.vec(f)
    n = l.dim
    if n > 3:
        raise UnsupportedDimension("pipelines stop at dimension 3")
    if len(f) != n:
        raise DimensionMismatch("point dimension mismatch")
    if not certify_lattice_free(l).lattice_free:
        raise NotLatticeFreeInput("input body has an interior lattice point")
    if not l.contains_point(f, strict=True):
        raise PointNotInterior("f must be interior to the body")
    cap = 2 ** (n - 1) + 1
    flt = flatness_bound(n)
    if len(l.halfspaces) <= cap:
        rep = relative_strength(l, l, f)
        assert rep.kind == "finite"
        return ApproxResult(l, rep.value)
    wr = lattice_width(l)
    assert wr.width <= flt
    phi = UnimodularMap.make(la.unimodular_with_bottom_row(wr.direction))
    lt = transform(l, phi)
    ft = phi.apply(f)
    gamma = Fraction(1, flt)
    lo, hi = _last_axis_range(homothety(lt, ft, gamma))
    tlo = math.floor(lo)
    if hi <= tlo + 1:
        b0 = _integer_slab(n, tlo)
    else:
        t = math.ceil(lo)
        assert lo < t < hi
        d = grow_to_maximal(drop_last_axis(section_last_axis(lt, t)))
        assert len(d.halfspaces) <= 2 ** (n - 1)
        b0 = lift_to_nplus1(lt, ft, gamma, d, t)
    b = transform(b0, phi.inverse())
    rep = relative_strength(b, l, f)
    assert rep.kind == "finite" and rep.value <= 4 * flt
    assert len(b.halfspaces) <= cap
    return ApproxResult(b, rep.value)


def approximate_fixed_f(l: Polyhedron, f) -> ApproxResult:
    """Cover of l by a body with at most n+1 facets; the factor bound
    flatness(n) 4^(n-1) s depends on the denominator s of f.

    Induction over the dimension: when the rotated f sits strictly between
    integer levels its denominator bounds the distance to them and an
    integer slab suffices; when it sits on one, the level slice is grown to
    a maximal base, approximated recursively at f's projection, and lifted.
    """
    f = la.vec(f)
    n = l.dim
    if n > 3:
        raise UnsupportedDimension("pipelines stop at dimension 3")
    if len(f) != n:
        raise DimensionMismatch("point dimension mismatch")
    if not certify_lattice_free(l).lattice_free:
        raise NotLatticeFreeInput("input body has an interior lattice point")
    if not l.contains_point(f, strict=True):
        raise PointNotInterior("f must be interior to the body")
    s = point_denominator(f)
    flt = flatness_bound(n)
    bound = flt * 4 ** (n - 1) * s
    if len(l.halfspaces) <= n + 1:
        rep = relative_strength(l, l, f)
        assert rep.kind == "finite"
        return ApproxResult(l, rep.value)
    # n >= 2 from here: one-dimensional lattice-free bodies have <= 2 facets
    wr = lattice_width(l)
    assert wr.width <= flt
    fn = dot(wr.direction, f)
    if fn.denominator > 1:
        # strictly fractional level: the slab between the neighbouring
        # integer levels holds the 1/bound homothety since fn keeps a
        # distance of at least 1/s from both
        phi = UnimodularMap.make(la.unimodular_with_bottom_row(wr.direction))
        b0 = _integer_slab(n, math.floor(fn))
        assert b0.contains(homothety(transform(l, phi), phi.apply(f),
                                     Fraction(1, bound)))
        b = transform(b0, phi.inverse())
    else:
        shift = vzero(n - 1) + (-fn,)
        phi = UnimodularMap.make(la.unimodular_with_bottom_row(wr.direction),
                                 shift)
        lt = transform(l, phi)
        ft = phi.apply(f)
        assert ft[-1] == 0
        mmax = grow_to_maximal(drop_last_axis(section_last_axis(lt, 0)))
        sub = approximate_fixed_f(mmax, ft[:-1])
        d = sub.body
        assert len(d.halfspaces) <= n
        gamma_prime = Fraction(1, flt * 4 ** (n - 2) * s)
        b0 = lift_to_nplus1(homothety(lt, ft, gamma_prime), ft, ONE, d, 0)
        b = transform(b0, phi.inverse())
    rep = relative_strength(b, l, f)
    assert rep.kind == "finite" and rep.value <= bound
    assert len(b.halfspaces) <= n + 1
    return ApproxResult(b, rep.value)


# ---------------------------------------------------------------------------
# inapproximability witnesses

def _check_witnesses(b: Polyhedron, zs: list[Vec]):
    """Validate one integral witness per facet, strictly inside the rest."""
    if len(zs) != len(b.halfspaces):
        raise OutOfRange("need exactly one witness per facet")
    tight_facets = []
    for z in zs:
        if not la.is_integer_vec(z):
            raise OutOfRange(f"witness {z} is not integral")
        slacks = [h.eval_slack(z) for h in b.halfspaces]
        if any(sl < 0 for sl in slacks):
            raise OutOfRange(f"witness {z} outside the body")
        tight = [j for j, sl in enumerate(slacks) if sl == 0]
        if len(tight) != 1:
            raise OutOfRange(f"witness {z} not in a facet relative interior")
        tight_facets.append(tight[0])
    if sorted(tight_facets) != list(range(len(b.halfspaces))):
        raise OutOfRange("witnesses do not cover all facets")


def shrink_epsilon(b: Polyhedron, c, zs) -> Fraction:
    """Largest-comfortable shrink factor keeping witness midpoints inside.

    Midpoints of facet witnesses on distinct facets are interior, so some
    homothety (1-eps) b + eps c still holds them all; returns half the
    exact feasible maximum of eps.
    """
    c = la.vec(c)
    zs = [la.vec(z) for z in zs]
    if b.rays:
        raise NotPolytope("shrink factor needs a bounded body")
    if not b.contains_point(c, strict=True):
        raise PointNotInterior("center must be interior")
    _check_witnesses(b, zs)
    worst = ZERO
    for zi, zj in itertools.combinations(zs, 2):
        g = gauge(b, c, vsub(vscale(Fraction(1, 2), vadd(zi, zj)), c))
        if g >= 1:
            raise WitnessOnBoundary("a witness midpoint is not interior")
        worst = max(worst, g)
    eps = (ONE - worst) / 2
    assert 0 < eps < 1
    shrunk = homothety(b, c, ONE - eps)
    for zi, zj in itertools.combinations(zs, 2):
        assert shrunk.contains_point(vscale(Fraction(1, 2), vadd(zi, zj)))
    return eps


@dataclass(frozen=True)
class PyramidWitness:
    """Lattice-free pyramid over a scaled copy of the base body, with the
    fractional point for which it certifies the facet-count lower bound."""

    body: Polyhedron
    f: Vec


def inapprox_pyramid(l: Polyhedron, c, zs, eps, mu) -> PyramidWitness:
    """Pyramid forcing one facet more than the base body.

    Every body that covers a positive homothety of the pyramid about
    f = (c, eps mu) must catch the witness segments; the base body's facet
    witnesses pair up across the pyramid so that no body with fewer facets
    can separate them all.  The returned pyramid is maximal lattice-free
    with (facets of l) + 1 facets.
    """
    c = la.vec(c)
    eps = la.frac(eps)
    mu = la.frac(mu)
    zs = [la.vec(z) for z in zs]
    if l.rays:
        raise NotPolytope("the pyramid construction needs a bounded base")
    if not (0 < eps < 1 and 0 < mu < 1):
        raise OutOfRange("eps and mu must lie strictly between 0 and 1")
    if not l.contains_point(c, strict=True):
        raise PointNotInterior("center must be interior")
    _check_witnesses(l, zs)
    em = eps * mu
    for zi, zj in itertools.combinations(zs, 2):
        mid = vscale(Fraction(1, 2), vadd(zi, zj))
        if gauge(l, c, vsub(mid, c)) > ONE - eps:
            raise OutOfRange("eps too large for the witnesses")

    n = l.dim + 1
    f = c + (em,)
    fbase = homothety(l, c, ONE / em)
    p = Polyhedron.from_generators(
        [f] + [v + (-ONE,) for v in fbase.vertices], dim=n)
    assert drop_last_axis(section_last_axis(p, 0)) == homothety(l, c, ONE / (em + 1))
    lam = (em * (em + 1) + 1) / (em + 1)
    body = homothety(p, c + (-ONE,), lam)
    assert drop_last_axis(section_last_axis(body, 0)) == l
    assert len(body.halfspaces) == len(l.halfspaces) + 1
    assert body.contains(p)
    assert body.contains_point(f, strict=True)
    cert = certify_lattice_free(body)
    assert cert.lattice_free and cert.maximal

    # covering properties of the inner pyramid eps mu (p - f) + f
    inner = homothety(p, f, em)
    assert inner.contains(embed_last_axis(homothety(l, c, ONE - eps), 0))
    for zi, zj in itertools.combinations(zs, 2):
        mid = vscale(Fraction(1, 2), vadd(zi, zj))
        assert inner.contains_point(mid + (ZERO,))
    e2m2 = em * em
    for z in zs:
        q = vadd(vscale(e2m2, zs[0] + (-ONE,)), vscale(ONE - e2m2, z + (ZERO,)))
        assert q[-1] == -e2m2 and l.contains_point(q[:-1])
        assert inner.contains_point(q)
    return PyramidWitness(body, f)


@dataclass(frozen=True)
class TowerWitness:
    """Maximal lattice-free simplex whose facet witnesses pairwise connect
    through the 1/alpha homothety about f."""

    body: Polyhedron
    witnesses: tuple[Vec, ...]


def segment_meets(p: Polyhedron, a, b) -> bool:
    """Exact test whether the segment [a, b] intersects the polyhedron."""
    a = la.vec(a)
    b = la.vec(b)
    lo, hi = ZERO, ONE
    d = vsub(b, a)
    for h in p.halfspaces:
        num = h.offset - dot(h.normal, a)
        den = dot(h.normal, d)
        if den == 0:
            if num < 0:
                return False
        elif den > 0:
            hi = min(hi, num / den)
        else:
            lo = max(lo, num / den)
    return lo <= hi


def simplex_tower(f, alpha) -> TowerWitness:
    """Simplex around f whose facet witnesses all meet its 1/alpha copy.

    Recursive pyramid: rotate a coordinate of f to an integer level, build
    the tower one dimension down around the projection, then take the cone
    from an apex at height 1/(alpha-1) over the alpha-blown base at level
    -1.  Every witness pair's segment crosses the level of the shrunken
    base, so no inflation below alpha separates them.
    """
    f = la.vec(f)
    alpha = la.frac(alpha)
    n = len(f)
    if n > 3:
        raise UnsupportedDimension("towers stop at dimension 3")
    if alpha <= 1:
        raise OutOfRange("the homothety ratio must exceed 1")
    if la.is_integer_vec(f):
        raise OutOfRange("f must have a fractional coordinate")
    body, zs = _tower(f, alpha)
    assert len(body.halfspaces) == n + 1 and not body.rays
    assert body.contains_point(f, strict=True)
    _check_witnesses(body, zs)
    cert = certify_lattice_free(body)
    assert cert.lattice_free and cert.maximal
    shrunk = homothety(body, f, ONE / alpha)
    for zi, zj in itertools.combinations(zs, 2):
        assert segment_meets(shrunk, zi, zj)
    return TowerWitness(body, tuple(zs))


def _tower(f: Vec, alpha: Fraction):
    n = len(f)
    if n == 1:
        z1 = Fraction(math.floor(f[0]))
        body = Polyhedron.from_generators([(z1,), (z1 + 1,)])
        return body, [(z1,), (z1 + 1,)]
    scaled = tuple(int(x * point_denominator(f)) for x in f)
    u = la.integer_kernel_basis([la.vec(scaled)])[0]
    phi = UnimodularMap.make(la.unimodular_with_bottom_row(u))
    ft = phi.apply(f)
    assert ft[-1] == 0
    fprime = ft[:-1]
    assert not la.is_integer_vec(fprime)
    sub_body, sub_zs = _tower(fprime, alpha)
    apex = fprime + (ONE / (alpha - ONE),)
    base = homothety(sub_body, fprime, alpha)
    body0 = Polyhedron.from_generators([apex] + [v + (-ONE,) for v in base.vertices])
    zs0 = [z + (ZERO,) for z in sub_zs] + [sub_zs[0] + (-ONE,)]
    assert drop_last_axis(section_last_axis(body0, 0)) == sub_body
    # the shrunken tower's base returns to the lower tower at level -1/alpha
    shrunk = homothety(body0, ft, ONE / alpha)
    assert drop_last_axis(section_last_axis(shrunk, -ONE / alpha)) == sub_body
    inv = phi.inverse()
    return transform(body0, inv), [inv.apply(z) for z in zs0]


def cylinder_lift_witness(l: Polyhedron, f_prime, n: int) -> Polyhedron:
    """Cylinder over a lower-dimensional body, keeping its facet count.

    The fibre {f'} x R^(n-i) stays inside every positive homothety of the
    cylinder about (f', 0, ..., 0), which is what transfers the finite
    approximation obstruction up the dimensions.
    """
    i = l.dim
    if i >= n:
        raise OutOfRange("the target dimension must exceed the base's")
    f_prime = la.vec(f_prime)
    if len(f_prime) != i:
        raise DimensionMismatch("point dimension mismatch")
    out = product_with_line(l, n - i)
    assert len(out.halfspaces) == len(l.halfspaces)
    f = f_prime + vzero(n - i)
    assert out.contains_point(f, strict=True) == l.contains_point(f_prime,
                                                                  strict=True)
    return out
