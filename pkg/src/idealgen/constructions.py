"""Explicit certificate families meeting the sharp C(n+d, d) bound:
the characteristic-0 lattice simplex, the one-variable geometric-series
line, and the two-variable power triangle.

Each family produces a full DualCertificate whose polynomials are
products of d linear factors; the factored forms are kept alongside the
expanded polynomials since each factor "peels off" one layer of points.
Diagonals are whatever the construction yields (not normalized to 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import DualCertificate
from .fields import RATIONAL, FieldElement, element_order
from .polys import MultiPoly, Point, iter_monomials

CHAR0_SIMPLEX = "char0-simplex"
Q_ANALOG_LINE = "q-analog-line"
TWO_VAR_TRIANGLE = "two-var-triangle"


class OrderTooSmallError(ValueError):
    """The chosen multiplier has too small a multiplicative order."""


class PowerCollisionError(ValueError):
    """x^m = y^m for some 1 <= m <= d; reports the smallest offending m."""

    def __init__(self, m):
        super().__init__(f"power collision at m={m}: x^{m} = y^{m}")
        self.m = m


@dataclass
class ConstructionResult:
    family: str
    params: dict
    certificate: DualCertificate
    factors: list  # per generator: list of linear MultiPoly factors


def _product(ctx, n, factors):
    acc = MultiPoly.one(ctx, n)
    for f in factors:
        acc = acc * f
    return acc


def _finish(family, params, ctx, n, d, points, factor_lists):
    polys = [_product(ctx, n, fs) for fs in factor_lists]
    diagonal = [f.evaluate(p) for f, p in zip(polys, points)]
    cert = DualCertificate(ctx=ctx, n=n, d=d, points=points, polys=polys,
                           diagonal=diagonal)
    return ConstructionResult(family=family, params=params, certificate=cert,
                              factors=factor_lists)


def char0_simplex(n: int, d: int, ctx) -> ConstructionResult:
    """Evaluation points = lattice simplex {(d_1..d_n) : sum <= d}; the
    polynomial at P peels off the layers below each coordinate and the
    diagonal layers above the point's total degree.  The value at P is
    exactly (-1)^(d-f) (d-f)! * prod d_i! with f = sum d_i, so it is
    nonzero only in characteristic 0."""
    if ctx.kind != RATIONAL:
        raise ValueError("simplex construction requires characteristic 0")
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    xs = [MultiPoly.variable(ctx, n, i) for i in range(n)]
    xsum = MultiPoly.zero(ctx, n)
    for x in xs:
        xsum = xsum + x
    points = []
    factor_lists = []
    for idx in iter_monomials(n, d):
        f = sum(idx)
        points.append(Point(ctx, [ctx.element(c) for c in idx]))
        factors = []
        for i, di in enumerate(idx):
            for j in range(di):
                factors.append(xs[i] - j)
        for i in range(f + 1, d + 1):
            factors.append(xsum - i)
        factor_lists.append(factors)
    return _finish(CHAR0_SIMPLEX, {"n": n, "d": d}, ctx, n, d,
                   points, factor_lists)


def q_analog_line(d: int, zeta: FieldElement) -> ConstructionResult:
    """One-variable family at nodes alpha_i = 1 + zeta + ... + zeta^(i-1)
    (the geometric analog of the integers); the nodes are pairwise distinct
    exactly when zeta has multiplicative order > d."""
    if d < 0:
        raise ValueError("need d >= 0")
    ctx = zeta.ctx
    if zeta == ctx.one():
        raise OrderTooSmallError("zeta = 1 is a degenerate multiplier")
    alphas = []
    acc = ctx.zero()
    power = ctx.one()
    for _ in range(d + 1):
        alphas.append(acc)
        acc = acc + power
        power = power * zeta
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            if alphas[i] == alphas[j]:
                raise OrderTooSmallError(
                    f"nodes collide: alpha_{i} = alpha_{j}; need order(zeta) > {d}")
    x = MultiPoly.variable(ctx, 1, 0)
    points = [Point(ctx, [a]) for a in alphas]
    factor_lists = [[x - aj for j, aj in enumerate(alphas) if j != i]
                    for i in range(d + 1)]
    return _finish(Q_ANALOG_LINE, {"d": d, "zeta": zeta}, ctx, 1, d,
                   points, factor_lists)


def two_var_triangle(d: int, x: FieldElement, y: FieldElement) -> ConstructionResult:
    """Two-variable family at P_ij = ((x^i - y^i)/x^i, (x^j - y^j)/y^j) for
    i + j <= d, admissible when x^m != y^m for all 1 <= m <= d.

    The generator at P_ij is the product of the row lines x^i' X = x^i' - y^i'
    (i' < i), the column lines y^j' Y = x^j' - y^j' (j' < j), and the diagonal
    lines x^k X + y^k Y = x^k - y^k (i + j < k <= d)."""
    if d < 0:
        raise ValueError("need d >= 0")
    ctx = x.ctx
    if y.ctx != ctx:
        raise ValueError("x and y must share a context")
    if x.is_zero() or y.is_zero():
        raise ValueError("x and y must be nonzero")
    for m in range(1, d + 1):
        if x ** m == y ** m:
            raise PowerCollisionError(m)
    xp = [x ** i for i in range(d + 1)]
    yp = [y ** i for i in range(d + 1)]
    X = MultiPoly.variable(ctx, 2, 0)
    Y = MultiPoly.variable(ctx, 2, 1)
    points = []
    factor_lists = []
    for (i, j) in iter_monomials(2, d):
        px = (xp[i] - yp[i]) / xp[i]
        py = (xp[j] - yp[j]) / yp[j]
        points.append(Point(ctx, [px, py]))
        factors = []
        for ip in range(i):
            factors.append(X.scale(xp[ip]) - MultiPoly.constant(ctx, 2, xp[ip] - yp[ip]))
        for jp in range(j):
            factors.append(Y.scale(yp[jp]) - MultiPoly.constant(ctx, 2, xp[jp] - yp[jp]))
        for k in range(i + j + 1, d + 1):
            factors.append(X.scale(xp[k]) + Y.scale(yp[k])
                           - MultiPoly.constant(ctx, 2, xp[k] - yp[k]))
        factor_lists.append(factors)
    params = {"d": d, "x": x, "y": y}
    return _finish(TWO_VAR_TRIANGLE, params, ctx, 2, d, points, factor_lists)


def order_admits_triangle(zeta: FieldElement, d: int) -> bool:
    """Convenience: (1, zeta) is admissible iff order(zeta) > d."""
    if zeta.is_zero():
        return False
    return element_order(zeta) > d
