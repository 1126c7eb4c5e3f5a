"""Gauge functions, intersection cuts, cut closures, and the polar metric.

The gauge of a body B with respect to an interior point f measures how far
one can walk from f in a direction r before leaving B: psi(r) is the
reciprocal of that step length (0 when the walk never leaves).  A body cuts
the fractional point f away from the mixed-integer hull through the
inequality sum_i psi(r_i) s_i >= 1 on the nonnegative combination weights s
of the column directions r_i.

Cut systems are predicate objects over coefficient vectors; they are never
converted back into polyhedra in s-space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import DimensionMismatch, PointNotInterior
from .geometry import Polyhedron, hausdorff_sq, polar, translate
from .linalg import Vec, ZERO, dot, vsub


def _shifted_facets(b: Polyhedron, f: Vec):
    """(normal, positive offset) pairs describing B - f, or raise."""
    pairs = []
    for h in b.halfspaces:
        c = h.offset - dot(h.normal, f)
        if c <= 0:
            raise PointNotInterior(
                f"{tuple(map(str, f))} is not interior to the body")
        pairs.append((h.normal, c))
    return pairs


def gauge(b: Polyhedron, f, r) -> Fraction:
    """psi of B-f at r: max(0, max_i normal_i . r / offset_i)."""
    f = la.vec(f)
    r = la.vec(r)
    if len(r) != b.dim:
        raise DimensionMismatch("direction dimension mismatch")
    best = ZERO
    for a, c in _shifted_facets(b, f):
        best = max(best, dot(a, r) / c)
    return best


@dataclass(frozen=True)
class CutSystem:
    """The inequality sum_i coeffs[i] s_i >= 1 over s >= 0.

    A trivial system (fractional point not interior to the generating body)
    accepts every nonnegative s.
    """

    f: Vec
    columns: tuple
    coeffs: tuple
    trivial: bool

    def accepts(self, s) -> bool:
        s = la.vec(s)
        if len(s) != len(self.columns):
            raise DimensionMismatch("weight vector length mismatch")
        if any(x < 0 for x in s):
            return False
        if self.trivial:
            return True
        return sum(c * x for c, x in zip(self.coeffs, s)) >= 1


@dataclass(frozen=True)
class ClosureSystem:
    """Conjunction of cut systems sharing the same point and columns."""

    f: Vec
    columns: tuple
    cuts: tuple

    def accepts(self, s) -> bool:
        s = la.vec(s)
        if len(s) != len(self.columns):
            raise DimensionMismatch("weight vector length mismatch")
        if any(x < 0 for x in s):
            return False
        return all(c.accepts(s) for c in self.cuts)


def intersection_cut(b: Polyhedron, columns, f) -> CutSystem:
    """Cut generated by b for the corner data (columns, f).

    Never fails: when f is not interior to b the cut degenerates to the
    whole nonnegative orthant and is marked trivial.
    """
    f = la.vec(f)
    cols = tuple(la.vec(r) for r in columns)
    if not b.contains_point(f, strict=True):
        return CutSystem(f, cols, tuple(ZERO for _ in cols), True)
    return CutSystem(f, cols, tuple(gauge(b, f, r) for r in cols), False)


def closure(family, columns, f) -> ClosureSystem:
    """Simultaneous cuts from every family member; empty family accepts all."""
    f = la.vec(f)
    cols = tuple(la.vec(r) for r in columns)
    return ClosureSystem(f, cols,
                         tuple(intersection_cut(b, cols, f) for b in family))


def cut_point_member(system, s) -> bool:
    return system.accepts(s)


def cut_dominates(b1: Polyhedron, b2: Polyhedron, f) -> bool:
    """Whether b1's cut implies b2's cut for every choice of columns.

    Containment of the cut regions for all column matrices is equivalent to
    containment of the generating bodies, so the test is exact geometry.
    """
    f = la.vec(f)
    for b in (b1, b2):
        if not b.contains_point(f, strict=True):
            raise PointNotInterior("cut comparison needs interior points")
    return b1.contains(b2)


# ---------------------------------------------------------------------------
# the polar (f-) metric


@dataclass(frozen=True)
class PolarDistance:
    """Hausdorff distance between (B1-f) polar and (B2-f) polar.

    Exact as a squared rational; the float square root is display-only.
    """

    dist_sq: Fraction

    @property
    def dist(self) -> float:
        return math.sqrt(float(self.dist_sq))


def f_metric(b1: Polyhedron, b2: Polyhedron, f) -> PolarDistance:
    f = la.vec(f)
    polars = []
    for b in (b1, b2):
        if not b.contains_point(f, strict=True):
            raise PointNotInterior("polar metric needs interior points")
        polars.append(polar(translate(b, vsub(la.vzero(b.dim), f))))
    return PolarDistance(hausdorff_sq(polars[0], polars[1]))


# ---------------------------------------------------------------------------
# convergence of gauges along a sequence of bodies


@dataclass(frozen=True)
class GaugeConvergenceEntry:
    dist_sq: Fraction          # polar metric to the limit body, squared
    max_deviation: Fraction    # worst gauge gap over the sampled directions
    lipschitz_ok: bool         # deviation^2 <= dist_sq * |r|^2 on every sample


@dataclass(frozen=True)
class GaugeConvergenceReport:
    entries: tuple

    def all_lipschitz(self) -> bool:
        return all(e.lipschitz_ok for e in self.entries)


def gauge_convergence_check(seq, b: Polyhedron, f, sample_dirs) -> GaugeConvergenceReport:
    """Compare gauges of a body sequence against a limit body.

    The gauge of B-f is the support function of (B-f) polar, and support
    functions of compact sets differ by at most the Hausdorff distance per
    unit of direction length; each entry checks that bound exactly:
    (psi_t(r) - psi(r))^2 <= dist_sq * |r|^2.
    """
    f = la.vec(f)
    dirs = [la.vec(r) for r in sample_dirs]
    limit_vals = [gauge(b, f, r) for r in dirs]
    entries = []
    for bt in seq:
        d = f_metric(bt, b, f)
        worst = ZERO
        ok = True
        for r, lim in zip(dirs, limit_vals):
            dev = gauge(bt, f, r) - lim
            if dev < 0:
                dev = -dev
            worst = max(worst, dev)
            if dev * dev > d.dist_sq * la.norm_sq(r):
                ok = False
        entries.append(GaugeConvergenceEntry(d.dist_sq, worst, ok))
    return GaugeConvergenceReport(tuple(entries))
