"""Dual interpolation certificates: multivariate Vandermonde construction,
greedy unisolvent point search, delta-system solving, and verification.

A certificate is a list of points P_j and polynomials f_i of degree <= d
with f_i(P_j) = 0 for i != j and f_i(P_i) != 0; it witnesses that no
generator can be dropped, since all the others lie in the evaluation
kernel at P_i.  Full certificates have C(n+d, d) entries, which is the
sharp size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .fields import FieldCtx, FieldElement
from .linalg import Matrix, invert, nullspace, rank_profile
from .polys import MultiPoly, Point, iter_monomials, monomial_count


class FieldTooSmallError(ValueError):
    """The field has at most d elements, so the sharp bound hypothesis fails."""

    def __init__(self, q, d):
        super().__init__(f"field of order {q} is too small for degree {d} (need |K| > d)")
        self.q = q
        self.d = d


class BudgetExhaustedError(RuntimeError):
    """Random point search ran out of trials."""

    def __init__(self, message, trials_used):
        super().__init__(message)
        self.trials_used = trials_used


@dataclass
class DualCertificate:
    ctx: FieldCtx
    n: int
    d: int
    points: list
    polys: list
    diagonal: list


@dataclass
class CertificateVerdict:
    valid: bool
    reason: Optional[str] = None
    i: Optional[int] = None
    j: Optional[int] = None

    def describe(self) -> str:
        if self.valid:
            return "valid"
        return f"invalid: {self.reason} at (i={self.i}, j={self.j})"


@dataclass
class PointSearchResult:
    points: list
    random_trials: int
    from_stream: int


def select_minimal_subset(gens, d: int) -> list[int]:
    """Greedy basis among the inputs: indices of the lexicographically first
    maximal linearly independent subset of coefficient vectors.  The
    selected polynomials span all inputs, hence generate the same ideal."""
    gens = list(gens)
    if not gens:
        return []
    ctx = gens[0].ctx
    rows = [g.coefficient_payloads(d) for g in gens]
    M = Matrix(ctx, len(rows), monomial_count(gens[0].n, d), rows)
    _, pivots = rank_profile(M)
    return pivots


def vandermonde_row(point: Point, d: int) -> list:
    """Payload row of all monomial evaluations of the point, degree <= d."""
    ctx = point.ctx
    coords = point.payloads()
    pows = []
    for x in coords:
        row = [ctx.rone]
        for _ in range(d):
            row.append(ctx.rmul(row[-1], x))
        pows.append(row)
    out = []
    for mono in iter_monomials(point.n, d):
        acc = ctx.rone
        for i, e in enumerate(mono):
            if e:
                acc = ctx.rmul(acc, pows[i][e])
        out.append(acc)
    return out


def build_vandermonde(points, d: int) -> Matrix:
    """Rows are monomial evaluations in canonical listing order; the matrix
    is invertible exactly when the points are unisolvent at degree d."""
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    ctx = points[0].ctx
    n = points[0].n
    for p in points:
        if p.ctx != ctx or p.n != n:
            raise ValueError("points must share context and dimension")
    rows = [vandermonde_row(p, d) for p in points]
    return Matrix(ctx, len(rows), monomial_count(n, d), rows)


def _structured_stream(ctx: FieldCtx, n: int, d: int):
    """Deterministic candidate points: the depth-(d+1) simplex of coordinate
    indices mapped through the field's canonical enumeration (the integer
    simplex over Q, the index line/triangle over finite fields; all indices
    are <= d < q, so the map is always defined)."""
    for mono in iter_monomials(n, d):
        yield Point(ctx, [ctx.element_at(i) for i in mono])


def greedy_point_search(ctx: FieldCtx, n: int, d: int, seed: int, budget: int,
                        grid_size: Optional[int] = None,
                        use_structured: bool = True) -> PointSearchResult:
    """Find C(n+d, d) points whose Vandermonde matrix is invertible.

    Greedy rank extension: maintain points with independent rows; each step
    takes a nonzero polynomial h of degree <= d vanishing on the chosen
    points (a nullspace functional) and accepts any candidate with
    h(P) != 0, first from the deterministic structured stream, then from
    uniform draws over the grid S^n with |S| = min(q, d+1).  Every accepted
    point strictly increases the rank, so acceptance of N points is a
    certificate of invertibility.
    """
    if ctx.is_finite() and ctx.order <= d:
        raise FieldTooSmallError(ctx.order, d)
    target = monomial_count(n, d)
    width = target
    gsize = d + 1 if grid_size is None else grid_size
    if ctx.is_finite():
        gsize = min(ctx.order, gsize)
    grid = [ctx.element_at(i) for i in range(gsize)]
    rng = random.Random(seed)

    chosen: list[Point] = []
    rows: list[list] = []
    seen = set()
    h_vec = None  # payload coefficient vector of the step functional

    def current_h():
        if not rows:
            vec = [ctx.rzero] * width
            vec[0] = ctx.rone
            return vec
        M = Matrix(ctx, len(rows), width, [list(r) for r in rows])
        basis = nullspace(M)
        return [x.val for x in basis[0]]

    def try_point(pt: Point) -> bool:
        nonlocal h_vec
        if pt in seen:
            return False
        row = vandermonde_row(pt, d)
        val = ctx.rzero
        for a, b in zip(row, h_vec):
            if a != ctx.rzero and b != ctx.rzero:
                val = ctx.radd(val, ctx.rmul(a, b))
        if val == ctx.rzero:
            return False
        chosen.append(pt)
        seen.add(pt)
        rows.append(row)
        h_vec = current_h() if len(chosen) < target else None
        return True

    h_vec = current_h()
    from_stream = 0
    if use_structured:
        for pt in _structured_stream(ctx, n, d):
            if len(chosen) >= target:
                break
            if try_point(pt):
                from_stream += 1
    trials = 0
    while len(chosen) < target:
        if trials >= budget:
            raise BudgetExhaustedError(
                f"no unisolvent point set after {trials} random trials", trials)
        trials += 1
        pt = Point(ctx, [grid[rng.randrange(gsize)] for _ in range(n)])
        try_point(pt)
    return PointSearchResult(points=chosen, random_trials=trials,
                             from_stream=from_stream)


def solve_certificate(points, d: int) -> DualCertificate:
    """Interpolate the dual system f_i(P_j) = delta_ij; the diagonal is
    normalized to 1.  Raises SingularMatrixError for unusable points."""
    points = list(points)
    ctx = points[0].ctx
    n = points[0].n
    target = monomial_count(n, d)
    if len(points) != target:
        raise ValueError(f"need exactly {target} points, got {len(points)}")
    A = build_vandermonde(points, d)
    A_inv = invert(A)  # column i solves A c = e_i
    polys = []
    for i in range(target):
        vec = [FieldElement(ctx, A_inv.rows[r][i]) for r in range(target)]
        polys.append(MultiPoly.from_coefficient_vector(ctx, n, d, vec))
    diagonal = [ctx.one() for _ in range(target)]
    return DualCertificate(ctx=ctx, n=n, d=d, points=points, polys=polys,
                           diagonal=diagonal)


def verify_certificate(cert: DualCertificate) -> CertificateVerdict:
    """Re-evaluate everything from scratch; independent of certificate origin.

    Checks pairwise-distinct points, degree bounds, the off-diagonal zero
    pattern, and that each stored diagonal value matches f_i(P_i) != 0.
    The first violated pair (i, j) is reported as a witness.
    """
    if len(cert.points) != len(cert.polys) or len(cert.polys) != len(cert.diagonal):
        return CertificateVerdict(False, "length mismatch", None, None)
    seen = {}
    for j, pt in enumerate(cert.points):
        if pt in seen:
            return CertificateVerdict(False, "duplicate points", seen[pt], j)
        seen[pt] = j
    for i, f in enumerate(cert.polys):
        if f.degree > cert.d:
            return CertificateVerdict(False, "degree bound violated", i, None)
    for i, f in enumerate(cert.polys):
        for j, pt in enumerate(cert.points):
            val = f.evaluate(pt)
            if i == j:
                if val.is_zero():
                    return CertificateVerdict(False, "zero diagonal", i, j)
                if val != cert.diagonal[i]:
                    return CertificateVerdict(False, "diagonal mismatch", i, j)
            elif not val.is_zero():
                return CertificateVerdict(False, "nonzero off-diagonal", i, j)
    return CertificateVerdict(True)
