"""Exact rational vectors, matrices, and integer lattice utilities.

Every number in this package is a ``fractions.Fraction``; a vector is a tuple
of Fractions and a matrix is a tuple of row tuples.  Using the stdlib rational
type gives arbitrary precision and automatic gcd normalization (reduced
numerator/denominator, positive denominator), which is exactly the invariant
the rest of the code relies on.  Floats never enter any computation here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce an int, string like '3/4', or Fraction to Fraction.

    Floats are rejected: exactness is a package-wide contract.
    """
    if isinstance(x, float):
        raise TypeError("float input is not exact; pass int, str, or Fraction")
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def vzero(n: int) -> Vec:
    return (ZERO,) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_zero_vec(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def norm_sq(u: Vec) -> Fraction:
    return dot(u, u)


def denominator_lcm(u: Sequence[Fraction]) -> int:
    out = 1
    for a in u:
        out = math.lcm(out, a.denominator)
    return out


def primitive(u: Sequence[Fraction]) -> Vec:
    """Scale a nonzero rational vector by a positive rational so that its
    entries are coprime integers.  Direction is preserved."""
    if is_zero_vec(u):
        raise ValueError("zero vector has no primitive form")
    m = denominator_lcm(u)
    ints = [int(a * m) for a in u]
    g = 0
    for z in ints:
        g = math.gcd(g, z)
    return tuple(Fraction(z // g) for z in ints)


def is_integer_vec(u: Sequence[Fraction]) -> bool:
    return all(a.denominator == 1 for a in u)


# ---------------------------------------------------------------------------
# matrices

def identity(n: int) -> Mat:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(row) for row in m]
    _, pivots = _rref(rows)
    return len(pivots)


def solve(m: Mat, b: Vec):
    """One exact solution of m x = b, or None if inconsistent."""
    if not m:
        return None if any(x != 0 for x in b) else ()
    ncols = len(m[0])
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    rows, pivots = _rref(aug)
    # inconsistent iff a pivot lands in the augmented column
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return tuple(x)


def inverse(m: Mat) -> Mat:
    n = len(m)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(m)]
    rows, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def det(m: Mat) -> Fraction:
    n = len(m)
    rows = [list(row) for row in m]
    out = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            out = -out
        out *= rows[c][c]
        inv = ONE / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out


def kernel_basis(m: Sequence[Sequence[Fraction]], ncols: int) -> list[Vec]:
    """Rational basis of {x : m x = 0} (free-variable back substitution)."""
    rows = [list(row) for row in m]
    rows, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [ZERO] * ncols
        x[fcol] = ONE
        for r, c in enumerate(pivots):
            x[c] = -rows[r][fcol]
        basis.append(tuple(x))
    return basis


def affine_rank(points: Sequence[Vec]) -> int:
    """Dimension of the affine hull of the given points."""
    if not points:
        return -1
    base = points[0]
    return rank([vsub(p, base) for p in points[1:]])


def project_off(v: Vec, basis: Sequence[Vec]) -> Vec:
    """Orthogonal projection of v onto the complement of span(basis).

    The Gram system is solved exactly, so the projection is rational.
    """
    if not basis:
        return v
    gram = tuple(tuple(dot(a, b) for b in basis) for a in basis)
    rhs = tuple(dot(a, v) for a in basis)
    coef = solve(gram, rhs)
    out = v
    for c, b in zip(coef, basis):
        out = vsub(out, vscale(c, b))
    return out


# ---------------------------------------------------------------------------
# integer / unimodular utilities

def unimodular_with_bottom_row(u: Vec) -> Mat:
    """Unimodular integer matrix whose bottom row is the primitive vector u.

    Column gcd elimination reduces u to the last unit row vector while a
    companion matrix records the operations; the inverse of that companion
    has u as its last row.
    """
    u = primitive(u)
    n = len(u)
    row = [int(x) for x in u]
    c = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, k):
        row[dst] += k * row[src]
        for i in range(n):
            c[i][dst] += k * c[i][src]

    def col_swap(a, b):
        row[a], row[b] = row[b], row[a]
        for i in range(n):
            c[i][a], c[i][b] = c[i][b], c[i][a]

    def col_neg(a):
        row[a] = -row[a]
        for i in range(n):
            c[i][a] = -c[i][a]

    # euclid all entries into the last column
    for j in range(n - 1):
        while row[j] != 0:
            if row[n - 1] == 0 or abs(row[j]) < abs(row[n - 1]):
                col_swap(j, n - 1)
            else:
                col_addmul(j, n - 1, -(row[j] // row[n - 1]))
    if row[n - 1] < 0:
        col_neg(n - 1)
    assert row == [0] * (n - 1) + [1]
    cmat = tuple(tuple(Fraction(x) for x in r) for r in c)
    w = inverse(cmat)
    assert all(x.denominator == 1 for r in w for x in r)
    assert tuple(w[n - 1]) == u
    return w


def integer_kernel_basis(rows: Sequence[Vec]) -> list[Vec]:
    """Basis of the saturated lattice {z in Z^n : rows . z = 0}.

    Integer column elimination on the (scaled-integer) rows produces a
    unimodular transform whose trailing columns span the kernel lattice.
    """
    if not rows:
        raise ValueError("need at least one row")
    n = len(rows[0])
    work = [[int(x) for x in primitive(r)] for r in rows]
    c = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, k):
        for w in work:
            w[dst] += k * w[src]
        for i in range(n):
            c[i][dst] += k * c[i][src]

    def col_swap(a, b):
        for w in work:
            w[a], w[b] = w[b], w[a]
        for i in range(n):
            c[i][a], c[i][b] = c[i][b], c[i][a]

    pivot_row = 0
    pivot_col = 0
    for pivot_row in range(len(work)):
        r = work[pivot_row]
        if all(r[j] == 0 for j in range(pivot_col, n)):
            continue
        # euclid the tail of this row onto pivot_col
        while True:
            nz = [j for j in range(pivot_col, n) if r[j] != 0]
            if len(nz) == 1:
                if nz[0] != pivot_col:
                    col_swap(nz[0], pivot_col)
                break
            nz.sort(key=lambda j: abs(r[j]))
            small, other = nz[0], nz[1]
            col_addmul(other, small, -(r[other] // r[small]))
        pivot_col += 1
        if pivot_col == n:
            break
    kernel_cols = range(pivot_col, n)
    basis = []
    for j in kernel_cols:
        v = tuple(Fraction(c[i][j]) for i in range(n))
        assert all(dot(row, v) == 0 for row in rows)
        basis.append(v)
    return basis


def alignment_unimodular(lines: Sequence[Vec]) -> Mat:
    """Unimodular U sending the rational subspace span(lines) onto the span
    of the trailing coordinate axes.

    Works through the saturated integer kernel of the subspace's orthogonal
    complement, so U and its inverse are integer matrices.
    """
    if not lines:
        raise ValueError("no lineality directions given")
    n = len(lines[0])
    perp = kernel_basis([list(l) for l in lines], n)
    if not perp:
        raise ValueError("lineality spans the whole space")
    kb = integer_kernel_basis([primitive(p) for p in perp])
    k = len(kb)
    assert k == n - len(perp)
    # complete kb to a basis of Z^n: integer_kernel_basis columns come from a
    # unimodular transform, so completion exists; rebuild it the same way.
    work_rows = [primitive(p) for p in perp]
    c = _full_transform(work_rows, n)
    cmat = tuple(tuple(Fraction(c[i][j]) for j in range(n)) for i in range(n))
    u = inverse(cmat)
    assert all(x.denominator == 1 for r in u for x in r)
    d = det(u)
    assert d in (1, -1)
    # sanity: lines land on trailing axes
    for l in lines:
        img = mat_vec(u, l)
        assert all(img[i] == 0 for i in range(n - k))
    return u


def _full_transform(rows: Sequence[Vec], n: int) -> list[list[int]]:
    """Column transform C (unimodular, integer) with rows.C in echelon form;
    trailing columns of C span the integer kernel of rows."""
    work = [[int(x) for x in r] for r in rows]
    c = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, k):
        for w in work:
            w[dst] += k * w[src]
        for i in range(n):
            c[i][dst] += k * c[i][src]

    def col_swap(a, b):
        for w in work:
            w[a], w[b] = w[b], w[a]
        for i in range(n):
            c[i][a], c[i][b] = c[i][b], c[i][a]

    pivot_col = 0
    for r in work:
        if all(r[j] == 0 for j in range(pivot_col, n)):
            continue
        while True:
            nz = [j for j in range(pivot_col, n) if r[j] != 0]
            if len(nz) == 1:
                if nz[0] != pivot_col:
                    col_swap(nz[0], pivot_col)
                break
            nz.sort(key=lambda j: abs(r[j]))
            col_addmul(nz[1], nz[0], -(r[nz[1]] // r[nz[0]]))
        pivot_col += 1
        if pivot_col == n:
            break
    return c


def format_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str, strict: bool = False) -> Fraction:
    """Parse 'p/q' (or bare 'p' when not strict).  Rejects '1/0' and floats
    always, unreduced forms in strict mode."""
    from .errors import ParseError

    s = s.strip()
    if any(ch in s for ch in ".eE") and not s.lstrip("+-").isdigit():
        raise ParseError(f"not an exact rational literal: {s!r}")
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError as exc:
            raise ParseError(f"bad rational literal: {s!r}") from exc
        if den == 0:
            raise ParseError(f"zero denominator: {s!r}")
        if strict and (den < 0 or math.gcd(num, den) != 1):
            raise ParseError(f"non-canonical rational (want reduced p/q, q >= 1): {s!r}")
        return Fraction(num, den)
    try:
        return Fraction(int(s))
    except ValueError as exc:
        raise ParseError(f"bad rational literal: {s!r}") from exc
