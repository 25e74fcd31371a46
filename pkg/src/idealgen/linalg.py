"""Exact dense linear algebra over any field context.

Rank/solve/nullspace use ordered Gaussian elimination with exact field
arithmetic; determinants over the rationals go through fraction-free
Bareiss elimination on a denominator-cleared integer matrix, which keeps
intermediate entries at minor size instead of letting fractions blow up.
All pivoting is deterministic (first nonzero in scan order) so that
results are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fields import RATIONAL, FieldCtx, FieldElement, FieldMismatchError


class SingularMatrixError(Exception):
    """A square system had no unique solution."""


class Matrix:
    """Row-major matrix of field payloads; construct via from_elements."""

    __slots__ = ("ctx", "nrows", "ncols", "rows")

    def __init__(self, ctx: FieldCtx, nrows: int, ncols: int, rows):
        if nrows < 0 or ncols < 0:
            raise ValueError("dimensions must be >= 0")
        self.ctx = ctx
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_elements(cls, ctx: FieldCtx, rows) -> "Matrix":
        payload_rows = []
        ncols = None
        for row in rows:
            prow = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.ctx != ctx:
                        raise FieldMismatchError("entry from another context")
                    prow.append(x.val)
                else:
                    prow.append(ctx.element(x).val)
            if ncols is None:
                ncols = len(prow)
            elif len(prow) != ncols:
                raise ValueError("ragged rows")
            payload_rows.append(prow)
        if ncols is None:
            ncols = 0
        return cls(ctx, len(payload_rows), ncols, payload_rows)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Matrix":
        rz, ro = ctx.rzero, ctx.rone
        return cls(ctx, n, n, [[ro if i == j else rz for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, self.rows[i][j])

    def transpose(self) -> "Matrix":
        tr = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.ctx, self.ncols, self.nrows, tr)

    def __repr__(self):
        return f"<Matrix {self.nrows}x{self.ncols} over {self.ctx!r}>"


def _reduce_against(v, basis, ctx):
    """Subtract multiples of (lead-normalized) basis rows from v in place.

    basis is a list of (lead_col, row) sorted by lead_col; rows have a 1
    at their lead and zeros before it.  Returns the lead of v or None.
    """
    rzero = ctx.rzero
    for lead, row in basis:
        c = v[lead]
        if c != rzero:
            v[lead] = rzero
            for j in range(lead + 1, len(v)):
                rj = row[j]
                if rj != rzero:
                    v[j] = ctx.rsub(v[j], ctx.rmul(c, rj))
    for j, x in enumerate(v):
        if x != rzero:
            return j
    return None


def rank_profile(M: Matrix):
    """Rank and the lexicographically first maximal independent row subset.

    Rows are scanned top to bottom and kept exactly when independent of
    the rows kept so far, which is what makes greedy basis selection
    reproducible.
    """
    ctx = M.ctx
    basis = []  # (lead_col, normalized row), sorted by lead_col
    pivots = []
    for i in range(M.nrows):
        v = list(M.rows[i])
        lead = _reduce_against(v, basis, ctx)
        if lead is None:
            continue
        inv = ctx.rinv(v[lead])
        v = [ctx.rmul(x, inv) for x in v]
        basis.append((lead, v))
        basis.sort(key=lambda t: t[0])
        pivots.append(i)
    return len(pivots), pivots


def _rref(rows, ncols, ctx):
    """In-place reduced row echelon form; returns list of (row_idx, col) pivots."""
    rzero = ctx.rzero
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if rows[i][c] != rzero:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = ctx.rinv(rows[r][c])
        rows[r] = [ctx.rmul(x, inv) for x in rows[r]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != rzero:
                    pr = rows[r]
                    rows[i] = [ctx.rsub(x, ctx.rmul(f, y)) for x, y in zip(rows[i], pr)]
        pivots.append((r, c))
        r += 1
    return pivots


def det(M: Matrix) -> FieldElement:
    """Exact determinant of a square matrix."""
    if M.nrows != M.ncols:
        raise ValueError("determinant requires a square matrix")
    ctx = M.ctx
    n = M.nrows
    if n == 0:
        return ctx.one()
    if ctx.kind == RATIONAL:
        return FieldElement(ctx, _det_bareiss_rational(M.rows))
    return FieldElement(ctx, _det_gauss(M.rows, ctx))


def _det_bareiss_rational(rows) -> Fraction:
    n = len(rows)
    scale = Fraction(1)
    a = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scale *= den
        a.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, akr = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (pk * ai[j] - aik * akr[j]) // prev
            ai[k] = 0
        prev = pk
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def _det_gauss(rows, ctx):
    a = [list(r) for r in rows]
    n = len(a)
    rzero = ctx.rzero
    acc = ctx.rone
    sign_flip = False
    for c in range(n):
        sel = next((i for i in range(c, n) if a[i][c] != rzero), None)
        if sel is None:
            return rzero
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            sign_flip = not sign_flip
        piv = a[c][c]
        acc = ctx.rmul(acc, piv)
        inv = ctx.rinv(piv)
        for i in range(c + 1, n):
            f = a[i][c]
            if f != rzero:
                f = ctx.rmul(f, inv)
                arow, crow = a[i], a[c]
                for j in range(c, n):
                    arow[j] = ctx.rsub(arow[j], ctx.rmul(f, crow[j]))
    return ctx.rneg(acc) if sign_flip else acc


def solve(M: Matrix, b) -> list[FieldElement]:
    """Unique exact solution of Mx = b for square invertible M."""
    if M.nrows != M.ncols:
        raise ValueError("solve requires a square matrix")
    ctx = M.ctx
    bvals = [x.val if isinstance(x, FieldElement) else ctx.element(x).val for x in b]
    if len(bvals) != M.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = [list(row) + [bv] for row, bv in zip(M.rows, bvals)]
    pivots = _rref(aug, M.ncols, ctx)
    if len(pivots) < M.ncols:
        raise SingularMatrixError("matrix is singular")
    return [FieldElement(ctx, aug[r][M.ncols]) for r, _ in pivots]


def solve_many(M: Matrix, B: "Matrix") -> "Matrix":
    """Solve MX = B column-wise (one elimination for all right-hand sides)."""
    if M.nrows != M.ncols:
        raise ValueError("solve requires a square matrix")
    if B.nrows != M.nrows:
        raise ValueError("dimension mismatch")
    ctx = M.ctx
    aug = [list(row) + list(brow) for row, brow in zip(M.rows, B.rows)]
    pivots = _rref(aug, M.ncols, ctx)
    if len(pivots) < M.ncols:
        raise SingularMatrixError("matrix is singular")
    out = [aug[r][M.ncols:] for r, _ in pivots]
    return Matrix(ctx, M.ncols, B.ncols, out)


def invert(M: Matrix) -> "Matrix":
    return solve_many(M, Matrix.identity(M.ctx, M.nrows))


def nullspace(M: Matrix) -> list[list[FieldElement]]:
    """Deterministic basis of the right kernel from the reduced echelon form.

    One basis vector per free column, in ascending column order, with a 1
    in the free coordinate.
    """
    ctx = M.ctx
    rows = [list(r) for r in M.rows]
    pivots = _rref(rows, M.ncols, ctx)
    pivot_cols = {c: r for r, c in pivots}
    rzero, rone = ctx.rzero, ctx.rone
    basis = []
    for f in range(M.ncols):
        if f in pivot_cols:
            continue
        v = [rzero] * M.ncols
        v[f] = rone
        for c, r in pivot_cols.items():
            v[c] = ctx.rneg(rows[r][f])
        basis.append([FieldElement(ctx, x) for x in v])
    return basis
