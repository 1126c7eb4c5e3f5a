"""Exact dual-description polyhedra over the rationals.

A ``Polyhedron`` always carries both a half-space description and a generator
description, kept consistent and in canonical form, so structural equality of
two values means equality of the underlying sets.

Conventions
-----------
* Half-space normals are primitive integer vectors (positive scaling only);
  equalities appear as pairs of opposite half-spaces.
* Lineality is encoded in the ray list as +/- pairs; ``vertices`` then holds
  canonical representatives of the extreme points of the quotient (for a pure
  cone or affine set this is a single anchor point).
* The empty set and the whole space are not representable; constructors raise
  ``EmptySet`` / ``WholeSpace`` instead.

The conversion engine is the classical incremental double description method
on the homogenization cone: insert one inequality at a time, keep the extreme
rays of the pointed quotient plus a lineality basis, and combine adjacent
rays across the new hyperplane (combinatorial adjacency test).  Both
conversion directions run through the same cone routine, since the facets of
a polyhedron are the extreme rays of its homogenized dual cone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import (
    DimensionMismatch,
    EmptySet,
    NotSeparable,
    OriginNotInterior,
    WholeSpace,
)
from .linalg import Mat, Vec, ZERO, ONE, dot, vadd, vneg, vscale, vsub
from .simplex import LpResult, solve_ineq


# ---------------------------------------------------------------------------
# cone double description


def cone_dd(rows: list[Vec], dim: int) -> tuple[list[Vec], list[Vec]]:
    """Generators of the cone {y : r . y <= 0 for all r in rows}.

    Returns (lines, rays): a basis of the lineality space and the extreme
    rays of the quotient by it.  Rows equal to zero are skipped.
    """
    lines: list[Vec] = [tuple(ONE if i == j else ZERO for j in range(dim))
                        for i in range(dim)]
    rays: list[Vec] = []
    processed: list[Vec] = []

    for a in rows:
        if la.is_zero_vec(a):
            continue
        vals_l = [dot(a, l) for l in lines]
        pivot = next((i for i, v in enumerate(vals_l) if v != 0), None)
        if pivot is not None:
            # the constraint cuts the lineality space: one line becomes a ray
            lstar = lines.pop(pivot)
            vstar = vals_l.pop(pivot)
            if vstar > 0:
                lstar, vstar = vneg(lstar), -vstar
            lines = [l if v == 0 else vsub(l, vscale(v / vstar, lstar))
                     for l, v in zip(lines, vals_l)]
            new_rays = []
            for r in rays:
                v = dot(a, r)
                if v != 0:
                    r = vsub(r, vscale(v / vstar, lstar))
                new_rays.append(la.primitive(r))
            new_rays.append(la.primitive(lstar))
            rays = new_rays
            processed.append(a)
            continue

        vals = [dot(a, r) for r in rays]
        if all(v <= 0 for v in vals):
            processed.append(a)
            continue
        zsets = [frozenset(k for k, c in enumerate(processed) if dot(c, r) == 0)
                 for r in rays]
        keep = [i for i, v in enumerate(vals) if v <= 0]
        new_rays = [rays[i] for i in keep]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        for ip in pos:
            for im in neg:
                common = zsets[ip] & zsets[im]
                adjacent = True
                for k in range(len(rays)):
                    if k != ip and k != im and common <= zsets[k]:
                        adjacent = False
                        break
                if adjacent:
                    comb = vsub(vscale(vals[ip], rays[im]),
                                vscale(vals[im], rays[ip]))
                    new_rays.append(la.primitive(comb))
        seen = set()
        rays = []
        for r in new_rays:
            if r not in seen:
                seen.add(r)
                rays.append(r)
        processed.append(a)

    return lines, rays


# ---------------------------------------------------------------------------
# half-spaces


@dataclass(frozen=True, order=True)
class HalfSpace:
    """a . x <= b with a a primitive integer vector."""

    normal: Vec
    offset: Fraction

    @staticmethod
    def make(normal, offset) -> "HalfSpace":
        normal = la.vec(normal)
        offset = la.frac(offset)
        if la.is_zero_vec(normal):
            raise ValueError("half-space needs a nonzero normal")
        prim = la.primitive(normal)
        # positive scale factor relating normal to its primitive form
        j = next(i for i, x in enumerate(normal) if x != 0)
        scale = prim[j] / normal[j]
        return HalfSpace(prim, offset * scale)

    def eval_slack(self, x: Vec) -> Fraction:
        return self.offset - dot(self.normal, x)


def _halfspace_from_homog(z: Vec) -> HalfSpace:
    """Homogenized dual vector (z0, c) -> inequality c . x <= -z0."""
    return HalfSpace.make(z[1:], -z[0])


# ---------------------------------------------------------------------------
# canonical representatives


def _canonical_basis(lines: list[Vec]) -> tuple[list[Vec], list[int]]:
    """RREF the line vectors, then scale each row primitive."""
    rows = [list(l) for l in lines]
    rows, pivots = la._rref(rows)
    rows = [r for r in rows if any(x != 0 for x in r)]
    return [la.primitive(tuple(r)) for r in rows], pivots


def _reduce_off(v: Vec, basis: list[Vec], pivots: list[int]) -> Vec:
    for row, p in zip(basis, pivots):
        if v[p] != 0:
            v = vsub(v, vscale(v[p] / row[p], row))
    return v


# ---------------------------------------------------------------------------
# conversions (raw, pre-canonicalization)


def _generators_from_hrep(hs: list[HalfSpace], dim: int):
    rows = [(-h.offset,) + h.normal for h in hs]
    rows.append(tuple([Fraction(-1)] + [ZERO] * dim))  # x0 >= 0
    lines, rays = cone_dd(rows, dim + 1)
    for l in lines:
        assert l[0] == 0, "lineality cannot leave the x0 = 0 slice"
    verts = [tuple(x / r[0] for x in r[1:]) for r in rays if r[0] > 0]
    recrays = [r[1:] for r in rays if r[0] == 0]
    if not verts:
        raise EmptySet("no feasible point satisfies all half-spaces")
    return verts, recrays, [l[1:] for l in lines]


def _hrep_from_generators(verts: list[Vec], recrays: list[Vec],
                          lins: list[Vec], dim: int) -> list[HalfSpace]:
    rows: list[Vec] = [(ONE,) + tuple(v) for v in verts]
    rows += [(ZERO,) + tuple(r) for r in recrays]
    for l in lins:
        rows.append((ZERO,) + tuple(l))
        rows.append((ZERO,) + tuple(vneg(l)))
    dlines, drays = cone_dd(rows, dim + 1)
    dbasis, dpivots = _canonical_basis(dlines)
    hs: list[HalfSpace] = []
    for z in dbasis:
        assert not la.is_zero_vec(z[1:]), "equality with zero normal"
        hs.append(_halfspace_from_homog(z))
        hs.append(_halfspace_from_homog(vneg(z)))
    # the ray class of (-1, 0) is the inequality 0 . x <= 1: not a facet
    trivial = la.primitive(_reduce_off(
        (-ONE,) + la.vzero(dim), dbasis, dpivots))
    for z in drays:
        z = la.primitive(_reduce_off(z, dbasis, dpivots))
        if z == trivial:
            continue
        assert not la.is_zero_vec(z[1:]), "facet with zero normal"
        hs.append(_halfspace_from_homog(z))
    if not hs:
        raise WholeSpace("generators span the whole space")
    return sorted(set(hs))


# ---------------------------------------------------------------------------
# the polyhedron


@dataclass(frozen=True)
class Polyhedron:
    dim: int
    halfspaces: tuple[HalfSpace, ...]
    vertices: tuple[Vec, ...]
    rays: tuple[Vec, ...]          # recession rays; lineality as +/- pairs
    lineality: tuple[Vec, ...]     # canonical basis of the lineality space
    fulldim: bool

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_halfspaces(halfspaces, dim: int) -> "Polyhedron":
        hs = [h if isinstance(h, HalfSpace) else HalfSpace.make(*h)
              for h in halfspaces]
        if not hs:
            raise WholeSpace("no half-spaces given")
        for h in hs:
            if len(h.normal) != dim:
                raise DimensionMismatch(f"normal {h.normal} not in dimension {dim}")
        verts, recrays, lins = _generators_from_hrep(hs, dim)
        return Polyhedron._assemble(verts, recrays, lins, dim)

    @staticmethod
    def from_generators(vertices, rays=(), dim: int | None = None) -> "Polyhedron":
        verts = [la.vec(v) for v in vertices]
        recrays = [la.vec(r) for r in rays]
        if not verts:
            raise EmptySet("a generator description needs at least one point")
        if dim is None:
            dim = len(verts[0])
        for g in itertools.chain(verts, recrays):
            if len(g) != dim:
                raise DimensionMismatch(f"generator {g} not in dimension {dim}")
        hs = _hrep_from_generators(verts, recrays, [], dim)
        verts2, recrays2, lins2 = _generators_from_hrep(hs, dim)
        return Polyhedron._assemble(verts2, recrays2, lins2, dim)

    @staticmethod
    def _assemble(verts, recrays, lins, dim) -> "Polyhedron":
        basis, pivots = _canonical_basis(list(lins))
        vcan = sorted({_reduce_off(v, basis, pivots) for v in verts})
        rcan = sorted({la.primitive(_reduce_off(r, basis, pivots))
                       for r in recrays})
        hs = _hrep_from_generators(vcan, rcan, basis, dim)
        all_rays = list(rcan)
        for l in basis:
            all_rays.extend((l, vneg(l)))
        gen_rank = la.rank([vsub(v, vcan[0]) for v in vcan[1:]]
                           + list(rcan) + list(basis)) if (len(vcan) > 1 or rcan or basis) else 0
        return Polyhedron(
            dim=dim,
            halfspaces=tuple(hs),
            vertices=tuple(vcan),
            rays=tuple(sorted(all_rays)),
            lineality=tuple(basis),
            fulldim=(gen_rank == dim),
        )

    # -- queries -------------------------------------------------------------

    def contains_point(self, x, strict: bool = False) -> bool:
        x = la.vec(x)
        if len(x) != self.dim:
            raise DimensionMismatch("point dimension mismatch")
        if strict:
            return all(h.eval_slack(x) > 0 for h in self.halfspaces)
        return all(h.eval_slack(x) >= 0 for h in self.halfspaces)

    def contains(self, other: "Polyhedron") -> bool:
        """Set containment: other is a subset of self."""
        if self.dim != other.dim:
            raise DimensionMismatch("ambient dimensions differ")
        for h in self.halfspaces:
            if any(h.eval_slack(v) < 0 for v in other.vertices):
                return False
            if any(dot(h.normal, r) > 0 for r in other.rays):
                return False
        return True

    def contains_in_interior(self, other: "Polyhedron") -> bool:
        """other lies in the topological interior of self."""
        if self.dim != other.dim:
            raise DimensionMismatch("ambient dimensions differ")
        for h in self.halfspaces:
            if any(h.eval_slack(v) <= 0 for v in other.vertices):
                return False
            if any(dot(h.normal, r) > 0 for r in other.rays):
                return False
        return True

    def is_bounded(self) -> bool:
        return not self.rays

    def relative_interior_point(self) -> Vec:
        p = self.vertices[0]
        for v in self.vertices[1:]:
            p = vadd(p, v)
        p = vscale(Fraction(1, len(self.vertices)), p)
        for r in self.rays:
            p = vadd(p, r)
        return p

    def recession_is_subspace(self) -> bool:
        """True iff every recession ray is neutralized by its opposite."""
        rayset = set(self.rays)
        return all(vneg(r) in rayset for r in self.rays)

    def implied_equalities(self) -> list[HalfSpace]:
        """Half-spaces that hold with equality on the whole set."""
        out = []
        for h in self.halfspaces:
            if HalfSpace.make(vneg(h.normal), -h.offset) in self.halfspaces:
                out.append(h)
        return out

    def support(self, direction) -> tuple[Fraction | None, Vec | None]:
        """(sup of direction . x, attaining vertex) with None meaning +inf."""
        direction = la.vec(direction)
        if any(dot(direction, r) > 0 for r in self.rays):
            return None, None
        best, arg = None, None
        for v in self.vertices:
            val = dot(direction, v)
            if best is None or val > best:
                best, arg = val, v
        return best, arg

    def bounding_box(self) -> tuple[Vec, Vec]:
        if self.rays:
            raise ValueError("bounding box needs a bounded polyhedron")
        lo = tuple(min(v[i] for v in self.vertices) for i in range(self.dim))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(self.dim))
        return lo, hi


# ---------------------------------------------------------------------------
# polarity


def polar(p: Polyhedron) -> Polyhedron:
    """{r : r . x <= 1 on p}; requires the origin strictly inside p."""
    if not p.contains_point((0,) * p.dim, strict=True):
        raise OriginNotInterior("polar needs 0 strictly inside the body")
    hs = [HalfSpace.make(v, 1) for v in p.vertices if not la.is_zero_vec(v)]
    hs += [HalfSpace.make(r, 0) for r in p.rays]
    if not hs:
        raise WholeSpace("polar of the whole space is a point set we do not represent")
    return Polyhedron.from_halfspaces(hs, p.dim)


# ---------------------------------------------------------------------------
# affine images


@dataclass(frozen=True)
class UnimodularMap:
    """x -> m x + shift with m an integer matrix of determinant +/-1 and an
    integer shift, so the integer lattice maps onto itself."""

    matrix: Mat
    shift: Vec

    def __post_init__(self):
        if any(x.denominator != 1 for row in self.matrix for x in row):
            raise ValueError("unimodular matrix must be integer")
        if any(x.denominator != 1 for x in self.shift):
            raise ValueError("unimodular shift must be integer")
        if la.det(self.matrix) not in (1, -1):
            raise ValueError("matrix determinant must be +1 or -1")

    @staticmethod
    def make(matrix, shift=None) -> "UnimodularMap":
        m = tuple(la.vec(row) for row in matrix)
        s = la.vec(shift) if shift is not None else la.vzero(len(m))
        return UnimodularMap(m, s)

    @staticmethod
    def identity(dim: int) -> "UnimodularMap":
        return UnimodularMap.make(la.identity(dim))

    def apply(self, x) -> Vec:
        return vadd(la.mat_vec(self.matrix, la.vec(x)), self.shift)

    def inverse(self) -> "UnimodularMap":
        inv = la.inverse(self.matrix)
        return UnimodularMap(inv, vneg(la.mat_vec(inv, self.shift)))


def affine_image(p: Polyhedron, matrix: Mat, shift: Vec) -> Polyhedron:
    """Image of p under the invertible map x -> matrix x + shift.

    Invertible affine maps carry facets to facets and extreme rays to extreme
    rays, so both descriptions transform directly with no reconversion.
    """
    inv = la.inverse(matrix)
    verts = [vadd(la.mat_vec(matrix, v), shift) for v in p.vertices]
    recrays = [la.mat_vec(matrix, r) for r in p.rays
               if r not in _lineality_pairs(p)]
    lins = [la.mat_vec(matrix, l) for l in p.lineality]
    basis, pivots = _canonical_basis(lins)
    vcan = sorted({_reduce_off(v, basis, pivots) for v in verts})
    rcan = sorted({la.primitive(_reduce_off(r, basis, pivots)) for r in recrays})
    hs = []
    # transform each half-space: a . x <= b  ->  (a inv) . y <= b + (a inv) . shift
    new_homog = []
    for h in p.halfspaces:
        a2 = la.mat_vec(la.transpose(inv), h.normal)
        b2 = h.offset + dot(a2, shift)
        new_homog.append((-b2,) + tuple(a2))
    eqs, eq_pivots = _canonical_basis(
        [z for z in new_homog if _neg_in(z, new_homog)])
    for z in eqs:
        hs.append(_halfspace_from_homog(z))
        hs.append(_halfspace_from_homog(vneg(z)))
    seen = set(hs)
    for z in new_homog:
        if _neg_in(z, new_homog):
            continue
        z = _reduce_off(z, eqs, eq_pivots)
        h2 = _halfspace_from_homog(z)
        if h2 not in seen:
            seen.add(h2)
            hs.append(h2)
    all_rays = list(rcan)
    for l in basis:
        all_rays.extend((l, vneg(l)))
    return Polyhedron(
        dim=p.dim,
        halfspaces=tuple(sorted(hs)),
        vertices=tuple(vcan),
        rays=tuple(sorted(all_rays)),
        lineality=tuple(basis),
        fulldim=p.fulldim,
    )


def _lineality_pairs(p: Polyhedron) -> set[Vec]:
    rayset = set(p.rays)
    return {r for r in p.rays if vneg(r) in rayset}


def _neg_in(z: Vec, homogs: list[Vec]) -> bool:
    zp = la.primitive(z)
    return vneg(zp) in {la.primitive(w) for w in homogs}


def transform(p: Polyhedron, t: UnimodularMap) -> Polyhedron:
    if len(t.shift) != p.dim:
        raise DimensionMismatch("map dimension mismatch")
    return affine_image(p, t.matrix, t.shift)


def minkowski_scale_shift(p: Polyhedron, lam, v) -> Polyhedron:
    """lam * p + v for a positive rational lam."""
    lam = la.frac(lam)
    if lam <= 0:
        raise ValueError("scale factor must be positive")
    m = tuple(tuple(lam if i == j else ZERO for j in range(p.dim))
              for i in range(p.dim))
    return affine_image(p, m, la.vec(v))


def homothety(p: Polyhedron, center, factor) -> Polyhedron:
    """Scale p about center: x -> center + factor (x - center), factor > 0."""
    center = la.vec(center)
    factor = la.frac(factor)
    return minkowski_scale_shift(p, factor, vscale(ONE - factor, center))


def translate(p: Polyhedron, v) -> Polyhedron:
    return minkowski_scale_shift(p, 1, v)


# ---------------------------------------------------------------------------
# linear programming over a polyhedron


def lp_solve(objective, p: Polyhedron, sense: str = "max") -> LpResult:
    """Exact LP over p's half-space description (simplex, Bland's rule).

    Deliberately ignores p's generators so vertex enumeration and pivoting
    stay independent routes.
    """
    objective = la.vec(objective)
    if len(objective) != p.dim:
        raise DimensionMismatch("objective dimension mismatch")
    rows = [h.normal for h in p.halfspaces]
    rhs = [h.offset for h in p.halfspaces]
    return solve_ineq(rows, rhs, objective, sense)


# ---------------------------------------------------------------------------
# separation


def separate(p: Polyhedron, q: Polyhedron, slack_point=None) -> HalfSpace:
    """A half-space h with p inside h and q outside the interior of h.

    Searches the cone of valid separators by LP.  When ``slack_point`` is
    given (a point of p, normally interior), the separator maximizing the
    slack offset - normal . slack_point is returned, which is the deepest
    cut through that point; otherwise any nonzero separator is returned.
    Raises NotSeparable when only the zero functional separates.
    """
    if p.dim != q.dim:
        raise DimensionMismatch("ambient dimensions differ")
    n = p.dim
    # variables (a, b): a . x <= b on p, a . y >= b on q, plus a box so the
    # LP is bounded.
    rows: list[Vec] = []
    rhs: list[Fraction] = []

    def add(coef_a: Vec, coef_b: Fraction, bound: Fraction):
        rows.append(tuple(coef_a) + (coef_b,))
        rhs.append(bound)

    for v in p.vertices:
        add(v, Fraction(-1), ZERO)            # a.v - b <= 0
    for r in p.rays:
        add(r, ZERO, ZERO)                    # a.r <= 0
    for v in q.vertices:
        add(vneg(v), ONE, ZERO)               # -a.v + b <= 0
    for r in q.rays:
        add(vneg(r), ZERO, ZERO)              # -a.r <= 0
    big = ONE + max(
        (sum(abs(x) for x in v) for v in itertools.chain(p.vertices, q.vertices)),
        default=ZERO,
    )
    for i in range(n):
        e = tuple(ONE if j == i else ZERO for j in range(n))
        add(e, ZERO, ONE)
        add(vneg(e), ZERO, ONE)
    add(la.vzero(n), ONE, big)
    add(la.vzero(n), Fraction(-1), big)

    def lp(objective: Vec) -> LpResult:
        res = solve_ineq(rows, rhs, objective, sense="max")
        assert res.status == "optimal"
        return res

    candidates: list[Vec] = []
    if slack_point is not None:
        sp = la.vec(slack_point)
        res = lp(tuple(-x for x in sp) + (ONE,))  # maximize b - a . sp
        if res.value > 0:
            candidates.append(res.point)
    if not candidates:
        for i in range(n):
            for sign in (ONE, -ONE):
                obj = tuple((sign if j == i else ZERO) for j in range(n)) + (ZERO,)
                res = lp(obj)
                if res.value > 0:
                    candidates.append(res.point)
                    break
            if candidates:
                break
    if not candidates:
        raise NotSeparable("interiors intersect; no separating half-space")
    a, b = candidates[0][:n], candidates[0][n]
    return HalfSpace.make(a, b)


# ---------------------------------------------------------------------------
# exact euclidean distances (squared) between polytopes


def squared_distance_point(x: Vec, p: Polyhedron) -> Fraction:
    """Exact squared euclidean distance from x to a bounded polyhedron.

    The closest point lies in the relative interior of a unique face and is
    the orthogonal projection of x onto that face's affine hull, so scanning
    projections onto hulls of affinely independent vertex subsets (keeping
    those that land inside p) covers the optimum.
    """
    if p.rays:
        raise ValueError("distance helper needs a bounded target")
    x = la.vec(x)
    best: Fraction | None = None
    verts = p.vertices
    for v in verts:
        d = la.norm_sq(vsub(x, v))
        if best is None or d < best:
            best = d
    max_size = min(len(verts), p.dim + 1)
    for size in range(2, max_size + 1):
        for subset in itertools.combinations(verts, size):
            base = subset[0]
            dirs = [vsub(v, base) for v in subset[1:]]
            if la.rank(dirs) != len(dirs):
                continue
            gram = tuple(tuple(dot(a, b) for b in dirs) for a in dirs)
            rhsv = tuple(dot(a, vsub(x, base)) for a in dirs)
            coef = la.solve(gram, rhsv)
            proj = base
            for c, dvec in zip(coef, dirs):
                proj = vadd(proj, vscale(c, dvec))
            if p.contains_point(proj):
                d = la.norm_sq(vsub(x, proj))
                if d < best:
                    best = d
    return best


def hausdorff_sq(p: Polyhedron, q: Polyhedron) -> Fraction:
    """Exact squared Hausdorff distance between bounded polyhedra.

    sup over p of the distance to q is attained at a vertex of p because the
    distance function to a convex set is convex; likewise with the roles
    swapped.  All comparisons happen on squared values, so no roots appear.
    """
    d = ZERO
    for v in p.vertices:
        d = max(d, squared_distance_point(v, q))
    for v in q.vertices:
        d = max(d, squared_distance_point(v, p))
    return d


# ---------------------------------------------------------------------------
# coordinate sections and embeddings (last-axis convention)


def section_last_axis(p: Polyhedron, level) -> Polyhedron:
    """p intersected with {x_n = level}, kept in the ambient space."""
    level = la.frac(level)
    e = la.vzero(p.dim - 1) + (ONE,)
    hs = list(p.halfspaces)
    hs.append(HalfSpace.make(e, level))
    hs.append(HalfSpace.make(vneg(e), -level))
    return Polyhedron.from_halfspaces(hs, p.dim)


def drop_last_axis(p: Polyhedron) -> Polyhedron:
    """Forget the last coordinate of a polyhedron lying in {x_n = const}."""
    level = p.vertices[0][-1]
    assert all(v[-1] == level for v in p.vertices)
    assert all(r[-1] == 0 for r in p.rays)
    return Polyhedron.from_generators(
        [v[:-1] for v in p.vertices], [r[:-1] for r in p.rays], p.dim - 1)


def embed_last_axis(p: Polyhedron, level) -> Polyhedron:
    """Place p into one more dimension at height x_n = level."""
    level = la.frac(level)
    return Polyhedron.from_generators(
        [v + (level,) for v in p.vertices], [r + (ZERO,) for r in p.rays],
        p.dim + 1)


def product_with_line(p: Polyhedron, extra: int = 1) -> Polyhedron:
    """p x R^extra (new free coordinates appended)."""
    zeros = (ZERO,) * extra
    verts = [v + zeros for v in p.vertices]
    rays = [r + zeros for r in p.rays]
    for k in range(extra):
        e = tuple(ONE if i == p.dim + k else ZERO for i in range(p.dim + extra))
        rays.extend((e, vneg(e)))
    return Polyhedron.from_generators(verts, rays, p.dim + extra)
