"""Integer points in rational polyhedra: enumeration, lattice-free
certificates, lattice width, and growth to maximal lattice-free bodies.

A body is lattice-free when its topological interior contains no integer
point.  Certificates are two-sided: a violating interior integer point, or
per-facet integer witnesses (an integer point in each facet's relative
interior proves the body cannot be enlarged, so witnesses on every facet
certify maximality).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import (
    NotFullDimensional,
    NotLatticeFreeInput,
    UnboundedEnumeration,
    UnsupportedDimension,
    UnsupportedShape,
    WholeSpace,
)
from .geometry import HalfSpace, Polyhedron, UnimodularMap, transform
from .linalg import ONE, ZERO, Vec, dot, vadd, vscale


# ---------------------------------------------------------------------------
# plain enumeration


def lattice_points_in(p: Polyhedron, strict: bool = False) -> list[Vec]:
    """All integer points of p (of its interior when strict)."""
    if p.rays:
        raise UnboundedEnumeration("cannot enumerate an unbounded polyhedron")
    lo, hi = p.bounding_box()
    ranges = [range(math.ceil(a), math.floor(b) + 1) for a, b in zip(lo, hi)]
    out = []
    for z in itertools.product(*ranges):
        z = tuple(Fraction(c) for c in z)
        if p.contains_point(z, strict=strict):
            out.append(z)
    return out


def point_denominator(x) -> int:
    """Least q >= 1 with q x integer."""
    return la.denominator_lcm(la.vec(x))


def flatness_bound(n: int) -> int:
    """ceil(n^(5/2)): every lattice-free body in dimension n is this thin
    in some integer direction."""
    if n < 1:
        raise UnsupportedDimension("dimension must be at least 1")
    k = n ** 5
    s = math.isqrt(k)
    return s if s * s == k else s + 1


# ---------------------------------------------------------------------------
# integer points on a constrained line (the 2-d workhorse)


def _integer_line(a: Vec, beta: Fraction):
    """All integer solutions of a . z = beta as z0 + Z d, a primitive 2-d.

    Returns None when beta is not an integer (no integer solutions then).
    """
    if beta.denominator != 1:
        return None
    a1, a2 = int(a[0]), int(a[1])
    g, u, v = _xgcd(a1, a2)
    assert g == 1, "line normal must be primitive"
    b = int(beta)
    z0 = (Fraction(u * b), Fraction(v * b))
    d = (Fraction(-a2), Fraction(a1))
    return z0, d


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _line_parameter_interval(z0: Vec, d: Vec, constraints, strict: bool):
    """Feasible t-range for z0 + t d under a . x <= b (or <) constraints.

    Returns (lo, hi, lo_open, hi_open) with None for an infinite end, or
    None when infeasible.
    """
    lo = hi = None
    lo_open = hi_open = strict
    for a, b in constraints:
        num = b - dot(a, z0)
        den = dot(a, d)
        if den == 0:
            if (num <= 0) if strict else (num < 0):
                return None
            continue
        bound = num / den
        if den > 0:
            if hi is None or bound < hi:
                hi = bound
        else:
            if lo is None or bound > lo:
                lo = bound
    if lo is not None and hi is not None:
        if lo > hi or (strict and lo == hi):
            return None
    return lo, hi, lo_open, hi_open


def _integer_in_range(lo, hi, strict: bool):
    """Some integer t with lo <(=) t <(=) hi; None ends mean unbounded."""
    if lo is None and hi is None:
        return 0
    if hi is not None:
        t = math.floor(hi)
        if strict and t == hi:
            t -= 1
        if lo is None or t > lo or (not strict and t == lo):
            return t
        return None
    t = math.ceil(lo)
    if strict and t == lo:
        t += 1
    return t


def _integer_point_on_line(a: Vec, beta: Fraction, others, strict: bool):
    """Integer z with a . z = beta and (g, c) constraints on the side."""
    param = _integer_line(a, beta)
    if param is None:
        return None
    z0, d = param
    rng = _line_parameter_interval(z0, d, others, strict)
    if rng is None:
        return None
    t = _integer_in_range(rng[0], rng[1], strict)
    if t is None:
        return None
    return vadd(z0, vscale(Fraction(t), d))


# ---------------------------------------------------------------------------
# interior integer point, all supported shapes


def interior_lattice_point(p: Polyhedron):
    """An integer point strictly inside p, or None when p is lattice-free.

    Handles bounded bodies in any dimension, unbounded bodies whose
    recession cone is a linear subspace (reduced to a bounded quotient by a
    unimodular change of coordinates), and in the plane also pointed
    recession cones.  Other unbounded shapes raise UnsupportedShape.
    """
    if not p.fulldim:
        raise NotFullDimensional("interior search needs a full-dimensional body")
    if p.is_bounded():
        return _bounded_interior_point(p)
    if p.lineality:
        quotient, back = _split_off_lineality(p)
        z = interior_lattice_point(quotient)
        return None if z is None else back(z)
    if p.dim == 1:
        # half-line: the interior swallows all far-away integers
        v = p.vertices[0]
        r = p.rays[0]
        step = Fraction(math.floor(v[0]) + 1) if r[0] > 0 else Fraction(math.ceil(v[0]) - 1)
        while not p.contains_point((step,), strict=True):
            step += 1 if r[0] > 0 else -1
        return (step,)
    if p.dim == 2:
        return _planar_pointed_interior_point(p)
    raise UnsupportedShape(
        "pointed unbounded recession is only searched in the plane")


def _bounded_interior_point(p: Polyhedron, realign: bool = True):
    """First strict integer point of a bounded body, or None.

    The widest axis is solved as an exact interval per candidate of the
    remaining axes, so cost follows the product of the small extents.  A
    body fat in every axis is first realigned so its thinnest facet-normal
    direction becomes an axis; cone-over-base and slab-like bodies are thin
    along one of their own normals even when no coordinate axis shows it.
    """
    lo, hi = p.bounding_box()
    budget = 1
    for e in sorted(hi[i] - lo[i] for i in range(p.dim))[:-1]:
        budget *= math.floor(e) + 1
    if realign and p.dim >= 3 and budget > 20000:

        def width_along(u: Vec) -> Fraction:
            vals = [dot(u, v) for v in p.vertices]
            return max(vals) - min(vals)

        u_best = min((h.normal for h in p.halfspaces), key=width_along)
        if width_along(u_best) < min(b - a for a, b in zip(lo, hi)):
            um = la.alignment_unimodular([u_best])
            m = UnimodularMap.make(la.transpose(la.inverse(um)))
            z = _bounded_interior_point(transform(p, m), realign=False)
            return None if z is None else m.inverse().apply(z)
    axis = max(range(p.dim), key=lambda i: hi[i] - lo[i])
    others = [i for i in range(p.dim) if i != axis]
    ranges = [range(math.ceil(lo[i]), math.floor(hi[i]) + 1) for i in others]
    for combo in itertools.product(*ranges):
        t_lo = t_hi = None
        feasible = True
        for h in p.halfspaces:
            a = h.normal
            num = h.offset - sum((a[i] * c for i, c in zip(others, combo)), ZERO)
            den = a[axis]
            if den == 0:
                if num <= 0:
                    feasible = False
                    break
                continue
            bound = num / den
            if den > 0:
                if t_hi is None or bound < t_hi:
                    t_hi = bound
            else:
                if t_lo is None or bound > t_lo:
                    t_lo = bound
        if not feasible:
            continue
        # bounded and full-dimensional: both ends exist
        t = _integer_in_range(t_lo, t_hi, strict=True)
        if t is None:
            continue
        z = [ZERO] * p.dim
        for i, c in zip(others, combo):
            z[i] = Fraction(c)
        z[axis] = Fraction(t)
        return tuple(z)
    return None


def _split_off_lineality(p: Polyhedron):
    """Unimodular change sending the lineality space to the trailing axes,
    then dropping them.  Returns (quotient, lift) with lift mapping integer
    quotient points back to integer points of p."""
    k = len(p.lineality)
    u = la.alignment_unimodular(list(p.lineality))
    umap = UnimodularMap.make(u)
    q = transform(p, umap)
    keep = p.dim - k
    # every generator now splits into a leading part and a free tail
    verts = sorted({v[:keep] for v in q.vertices})
    rays = sorted({r[:keep] for r in q.rays if not la.is_zero_vec(r[:keep])})
    quotient = Polyhedron.from_generators(verts, rays, keep)
    inv = umap.inverse()

    def back(z: Vec) -> Vec:
        return inv.apply(tuple(z) + (ZERO,) * k)

    return quotient, back


def _planar_pointed_interior_point(p: Polyhedron):
    """Interior integer point of an unbounded planar body with pointed
    recession, or None.  One recession ray is rotated onto the vertical
    axis; fibers over integer abscissas are then exactly searchable."""
    r0 = p.rays[0]
    u = la.alignment_unimodular([r0])
    if la.mat_vec(u, r0)[-1] < 0:
        u = tuple(tuple(-x for x in row) if i == len(u) - 1 else row
                  for i, row in enumerate(u))
    q = transform(p, UnimodularMap.make(u))
    lo, _ = q.support((-1, 0))
    hi, _ = q.support((1, 0))
    lo = -lo if lo is not None else None
    if lo is not None and hi is not None:
        cons = [(h.normal, h.offset) for h in q.halfspaces]
        for k in range(math.ceil(lo), math.floor(hi) + 1):
            z = _integer_point_on_line((ONE, ZERO), Fraction(k), cons, strict=True)
            if z is not None and q.contains_point(z, strict=True):
                inv = UnimodularMap.make(u).inverse()
                return inv.apply(z)
        return None
    # horizontally unbounded too: the recession cone is a full-dimensional
    # pointed cone, so far enough along an interior recession direction the
    # body contains a unit ball, hence an integer point.
    assert len(q.rays) == 2
    w = vadd(q.rays[0], q.rays[1])
    c = q.relative_interior_point()
    m = min(-dot(h.normal, w) for h in q.halfspaces if dot(h.normal, w) != 0)
    assert m > 0
    weight = max(sum(abs(x) for x in h.normal) for h in q.halfspaces)
    t = Fraction(math.ceil(weight / m) + 1)
    center = vadd(c, vscale(t, w))
    z = tuple(Fraction(round(x)) for x in center)
    assert q.contains_point(z, strict=True)
    inv = UnimodularMap.make(u).inverse()
    return inv.apply(z)


# ---------------------------------------------------------------------------
# facet witnesses and the lattice-free certificate


@dataclass(frozen=True)
class LatticeFreeCert:
    """Outcome of a lattice-free check.

    lattice_free      -- whether the interior avoids integer points
    interior_witness  -- violating integer point when not lattice-free
    facet_witnesses   -- per facet, an integer point in its relative
                         interior (None when that facet has none)
    maximal           -- True iff every facet is witnessed; a witnessed
                         facet cannot be pushed outward, an unwitnessed one
                         can, so this settles maximality exactly
    """

    lattice_free: bool
    interior_witness: Vec | None
    facet_witnesses: tuple
    maximal: bool | None

    def unwitnessed(self) -> list[int]:
        return [i for i, w in enumerate(self.facet_witnesses) if w is None]


def facet_interior_lattice_point(p: Polyhedron, j: int):
    """Integer point in the relative interior of facet j, or None."""
    h = p.halfspaces[j]
    others = [(g.normal, g.offset) for i, g in enumerate(p.halfspaces) if i != j]
    if p.dim == 1:
        x = h.offset / h.normal[0]
        z = (x,)
        if x.denominator == 1 and all(dot(a, z) < b for a, b in others):
            return z
        return None
    if p.dim == 2:
        return _integer_point_on_line(h.normal, h.offset, others, strict=True)
    # higher dimensions: rotate the facet hyperplane onto a coordinate level
    # by a unimodular map and search one dimension down
    if h.offset.denominator != 1:
        return None  # primitive normal: a fractional level misses Z^n entirely
    u = la.alignment_unimodular([h.normal])
    img = la.mat_vec(u, h.normal)
    assert la.is_zero_vec(img[:-1]) and abs(img[-1]) == 1
    level = h.offset * img[-1]
    # under y = U^-T x the plane becomes y_n = level and a . x <= b becomes
    # (U a) . y <= b; fixing y_n leaves strict constraints in y_1..y_{n-1}
    cons = []
    for a, b in others:
        a2 = la.mat_vec(u, a)
        rhs = b - a2[-1] * level
        head = a2[:-1]
        if la.is_zero_vec(head):
            if rhs <= 0:
                return None
            continue
        cons.append(HalfSpace.make(head, rhs))
    if cons:
        sub = Polyhedron.from_halfspaces(cons, p.dim - 1)
        z2 = interior_lattice_point(sub)
        if z2 is None:
            return None
    else:
        z2 = la.vzero(p.dim - 1)  # relative interior is the whole plane
    z = la.mat_vec(la.transpose(u), tuple(z2) + (level,))
    assert dot(h.normal, z) == h.offset
    assert all(dot(a, z) < b for a, b in others)
    return z


def certify_lattice_free(p: Polyhedron) -> LatticeFreeCert:
    """Decide lattice-freeness of a full-dimensional body, with evidence."""
    if not p.fulldim:
        raise NotFullDimensional("lattice-free check needs a full-dimensional body")
    bad = interior_lattice_point(p)
    if bad is not None:
        return LatticeFreeCert(False, bad, (), None)
    if p.lineality:
        quotient, back = _split_off_lineality(p)
        sub = certify_lattice_free(quotient)
        assert sub.lattice_free
        # match each facet of p with its image facet in the quotient
        k = len(p.lineality)
        u = la.alignment_unimodular(list(p.lineality))
        inv_t = la.transpose(la.inverse(u))
        witnesses = []
        for h in p.halfspaces:
            a2 = la.mat_vec(inv_t, h.normal)
            assert all(x == 0 for x in a2[p.dim - k:])
            img = HalfSpace.make(a2[:p.dim - k], h.offset)
            idx = quotient.halfspaces.index(img)
            w = sub.facet_witnesses[idx]
            witnesses.append(None if w is None else back(w))
        return LatticeFreeCert(True, None, tuple(witnesses),
                               all(w is not None for w in witnesses))
    witnesses = tuple(facet_interior_lattice_point(p, j)
                      for j in range(len(p.halfspaces)))
    return LatticeFreeCert(True, None, witnesses,
                           all(w is not None for w in witnesses))


# ---------------------------------------------------------------------------
# lattice width


@dataclass(frozen=True)
class WidthReport:
    """Certified lattice width.

    Soundness of the search bound: the body contains an axis-parallel
    segment of length segment_bound in every axis, so a direction u has
    width at least ||u||_inf * segment_bound; directions outside the
    searched box therefore cannot beat the reported optimum.
    """

    width: Fraction
    direction: Vec
    segment_bound: Fraction
    search_bound: int


def _max_inner_segment(p: Polyhedron, axis: int) -> Fraction:
    """Length of the longest segment parallel to the given axis inside p."""
    from .simplex import solve_ineq

    n = p.dim
    rows = []
    rhs = []
    e = tuple(ONE if i == axis else ZERO for i in range(n))
    for h in p.halfspaces:
        rows.append(h.normal + (ZERO,))
        rhs.append(h.offset)
        rows.append(h.normal + (dot(h.normal, e),))
        rhs.append(h.offset)
    obj = la.vzero(n) + (ONE,)
    res = solve_ineq(rows, rhs, obj, sense="max")
    assert res.status == "optimal"
    return res.value


def lattice_width(p: Polyhedron) -> WidthReport:
    """Minimum over primitive integer directions of the support width."""
    if not p.fulldim:
        raise NotFullDimensional("width needs a full-dimensional body")
    if p.rays:
        if not p.recession_is_subspace():
            raise UnsupportedShape("width search needs subspace recession")
        quotient, _ = _split_off_lineality(p)
        sub = lattice_width(quotient)
        k = len(p.lineality)
        u = la.alignment_unimodular(list(p.lineality))
        direction = la.mat_vec(la.transpose(u), sub.direction + (ZERO,) * k)
        return WidthReport(sub.width, la.primitive(direction),
                           sub.segment_bound, sub.search_bound)
    n = p.dim

    def width_along(u: Vec) -> Fraction:
        vals = [dot(u, v) for v in p.vertices]
        return max(vals) - min(vals)

    if n == 1:
        return WidthReport(width_along((ONE,)), (ONE,), width_along((ONE,)), 1)
    tau = min(_max_inner_segment(p, i) for i in range(n))
    assert tau > 0
    best = min((width_along(tuple(ONE if i == j else ZERO for j in range(n))), i)
               for i in range(n))
    best_w = best[0]
    best_u = tuple(ONE if i == best[1] else ZERO for i in range(n))
    bound = math.ceil(best_w / tau)
    for cand in itertools.product(range(-bound, bound + 1), repeat=n):
        u = tuple(Fraction(c) for c in cand)
        if la.is_zero_vec(u):
            continue
        first = next(c for c in u if c != 0)
        if first < 0:
            continue  # widths are sign-symmetric
        if math.gcd(*(int(c) for c in u)) != 1:
            continue
        w = width_along(u)
        if w < best_w:
            best_w, best_u = w, u
    return WidthReport(best_w, best_u, tau, bound)


# ---------------------------------------------------------------------------
# growth to a maximal lattice-free body (dimension <= 2)


def grow_to_maximal(p: Polyhedron) -> Polyhedron:
    """A maximal lattice-free body containing p (plane and line only).

    Repeatedly picks a facet with no integer point in its relative interior
    and pushes it outward to the first level that meets an integer point
    admissible for all other facets, dropping the facet entirely when no
    such level exists.  Witnessed facets stay witnessed, so the pair
    (facet count, unwitnessed count) strictly decreases and the loop ends.
    """
    if p.dim > 2:
        raise UnsupportedDimension("growth is implemented for dimensions 1 and 2")
    cert = certify_lattice_free(p)
    if not cert.lattice_free:
        raise NotLatticeFreeInput(
            f"interior integer point {cert.interior_witness}")
    if p.dim == 1:
        a = min(v[0] for v in p.vertices)
        lo = Fraction(math.floor(a))
        return Polyhedron.from_halfspaces(
            [((ONE,), lo + 1), ((-ONE,), -lo)], 1)

    q = p
    while True:
        cert = certify_lattice_free(q)
        assert cert.lattice_free
        if cert.maximal:
            return q
        j = cert.unwitnessed()[0]
        h = q.halfspaces[j]
        others = [g for i, g in enumerate(q.halfspaces) if i != j]
        dropped = _try_drop(others)
        if dropped is not None:
            q = dropped
            continue
        # the facet cannot be dropped: push it to the nearest integer level
        cons = [(g.normal, g.offset) for g in others]
        level = Fraction(math.ceil(h.offset))
        while True:
            z = _integer_point_on_line(h.normal, level, cons, strict=True)
            if z is not None and level > h.offset:
                break
            level += 1
        q = Polyhedron.from_halfspaces(
            others + [HalfSpace.make(h.normal, level)], 2)


def _try_drop(others):
    """The polyhedron on the remaining facets, when still lattice-free."""
    try:
        candidate = Polyhedron.from_halfspaces(others, 2)
    except WholeSpace:
        return None
    if interior_lattice_point(candidate) is None:
        return candidate
    return None
