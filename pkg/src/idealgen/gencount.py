"""Degree profiles and the telescoping generator construction.

For an ideal given by generators of degree <= d, the profile c_k is the
dimension of the space of degree-k leading parts of ideal members of
degree <= k.  The telescoping construction turns the profile into an
explicit generating set of size c_d <= C(n+d-1, d): at each degree step
it keeps the X1-shifts of what it already has and adds lifts for the
missing leading parts.

Computing the ideal's low-degree members exactly is the hard part.  We
span {m * f_j : deg(m * f_j) <= D} at a working degree D (a Macaulay
truncation), which is exact for homogeneous inputs at D = d.  For
inhomogeneous inputs D escalates until the profile stops changing for
two consecutive steps or hits the 2d+2 cap; the `stabilized` flag
records which case occurred, and the reported spaces are always
subspaces of the true ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fields import FieldCtx
from .polys import MultiPoly, grlex_key, iter_monomials, iter_monomials_of_degree


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    d: int
    working_degree: int
    c: tuple
    stabilized: bool


@dataclass
class GeneratorReport:
    generators: list
    profile: DegreeProfile
    claimed_bound: int


def sharp_instance(ctx: FieldCtx, n: int, d: int) -> list:
    """All C(n+d-1, d) monomials of total degree exactly d."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return [MultiPoly._raw(ctx, n, {mono: ctx.rone})
            for mono in iter_monomials_of_degree(n, d)]


def verify_monomial_lower_bound(n: int, d: int, candidate) -> bool:
    """Necessary condition forcing |candidate| >= C(n+d-1, d) for
    generating (X1..Xn)^d with degrees <= d: every member is homogeneous
    of degree exactly d and the members span the full degree-d space."""
    candidate = list(candidate)
    if not candidate:
        return d < 0
    for f in candidate:
        if f.is_zero() or any(sum(m) != d for m in f.terms):
            return False
    ctx = candidate[0].ctx
    monos = list(iter_monomials_of_degree(n, d))
    index = {m: i for i, m in enumerate(monos)}
    basis = _HomogeneousSpan(ctx, len(monos))
    for f in candidate:
        vec = [ctx.rzero] * len(monos)
        for m, v in f.terms.items():
            vec[index[m]] = v
        basis.insert(vec)
    return basis.dim == math.comb(n + d - 1, d)


class _HomogeneousSpan:
    """Incremental echelonized span of payload vectors over one context."""

    def __init__(self, ctx, width):
        self.ctx = ctx
        self.width = width
        self.rows = []  # (lead index, normalized vector), sorted by lead

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        ctx = self.ctx
        rzero = ctx.rzero
        v = list(vec)
        for lead, row in self.rows:
            c = v[lead]
            if c != rzero:
                v[lead] = rzero
                for j in range(lead + 1, self.width):
                    rj = row[j]
                    if rj != rzero:
                        v[j] = ctx.rsub(v[j], ctx.rmul(c, rj))
        lead = next((j for j, x in enumerate(v) if x != rzero), None)
        return lead, v

    def insert(self, vec) -> bool:
        lead, v = self.reduce(vec)
        if lead is None:
            return False
        inv = self.ctx.rinv(v[lead])
        v = [self.ctx.rmul(x, inv) for x in v]
        self.rows.append((lead, v))
        self.rows.sort(key=lambda t: t[0])
        return True


# ---------------------------------------------------------------------------
# Macaulay truncation

def _macaulay_echelon(gens, n, ctx, D):
    """Reduced echelon basis of span{m*f : deg(m*f) <= D}, returned as
    polynomials grouped by degree (= degree of the leading column).

    Columns are the monomials of degree <= D ordered by descending
    degree, so a row's leading column pins its total degree and the rows
    with lead degree <= k span exactly the truncation's members of
    degree <= k.
    """
    cols = list(iter_monomials(n, D))
    cols.reverse()  # degree-descending
    col_index = {m: i for i, m in enumerate(cols)}
    rzero = ctx.rzero
    rsub, rmul, rinv = ctx.rsub, ctx.rmul, ctx.rinv

    pivots: dict[int, dict] = {}  # lead column -> normalized sparse row
    for f in gens:
        df = int(f.degree)
        for mono in iter_monomials(n, D - df):
            row = {}
            for fm, fv in f.terms.items():
                shifted = tuple(a + b for a, b in zip(mono, fm))
                row[col_index[shifted]] = fv
            # reduce the leading entry until it is a fresh pivot or the row dies
            while row:
                lead = min(row)
                piv = pivots.get(lead)
                if piv is None:
                    inv = rinv(row[lead])
                    pivots[lead] = {c: rmul(v, inv) for c, v in row.items()}
                    break
                c = row.pop(lead)
                for col, v in piv.items():
                    if col == lead:
                        continue
                    s = rsub(row.get(col, rzero), rmul(c, v))
                    if s == rzero:
                        row.pop(col, None)
                    else:
                        row[col] = s

    # back-substitution: clear pivot columns from every earlier row
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for col in sorted(c for c in row if c > lead and c in pivots):
            c = row.pop(col, None)
            if c is None:
                continue
            for col2, v in pivots[col].items():
                if col2 == col:
                    continue
                s = rsub(row.get(col2, rzero), rmul(c, v))
                if s == rzero:
                    row.pop(col2, None)
                else:
                    row[col2] = s

    by_degree: dict[int, list] = {}
    for lead, row in pivots.items():
        poly = MultiPoly._raw(ctx, n, {cols[c]: v for c, v in row.items()})
        by_degree.setdefault(sum(cols[lead]), []).append(poly)
    for k in by_degree:
        by_degree[k].sort(key=lambda g: grlex_key(g.leading_monomial()), reverse=True)
    return by_degree


def _profile_and_lifts(gens, n, ctx, d, D):
    """Accumulated profile c_0..c_d plus the lifted generators per degree.

    V_k is accumulated as span(degree-k Macaulay leading parts) + X1 * V_{k-1},
    which keeps c monotone and pins the telescoping output size to c_d.
    """
    by_degree = _macaulay_echelon(gens, n, ctx, D)
    c = []
    emitted = []
    top_basis = []  # homogeneous degree-k payload dicts spanning V_k
    for k in range(d + 1):
        monos = list(iter_monomials_of_degree(n, k))
        index = {m: i for i, m in enumerate(monos)}
        span = _HomogeneousSpan(ctx, len(monos))
        next_top = []
        for vec_terms in top_basis:
            shifted = {(m[0] + 1,) + m[1:]: v for m, v in vec_terms.items()}
            vec = [ctx.rzero] * len(monos)
            for m, v in shifted.items():
                vec[index[m]] = v
            if span.insert(vec):
                next_top.append(shifted)
        for row_poly in by_degree.get(k, ()):
            top = row_poly.degree_part(k)
            vec = [ctx.rzero] * len(monos)
            for m, v in top.terms.items():
                vec[index[m]] = v
            if span.insert(vec):
                next_top.append(dict(top.terms))
                emitted.append((k, row_poly))
        c.append(span.dim)
        top_basis = next_top
    return tuple(c), emitted


def _prepare(gens, d):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return [], None, None
    ctx, n = gens[0].ctx, gens[0].n
    for g in gens:
        if g.ctx != ctx or g.n != n:
            raise ValueError("generators must share context and variable count")
        if g.degree > d:
            raise ValueError(f"generator degree {g.degree} exceeds bound {d}")
    return gens, ctx, n


def _run(gens, d, working_degree):
    """Shared driver: returns (profile, emitted lifts at the final degree)."""
    gens, ctx, n = _prepare(gens, d)
    if not gens:
        return DegreeProfile(n=0, d=d, working_degree=d,
                             c=(0,) * (d + 1), stabilized=True), []
    homogeneous = all(g.is_homogeneous() for g in gens)
    if working_degree != "auto":
        D = int(working_degree)
        if D < d:
            raise ValueError("working degree must be >= d")
        c, emitted = _profile_and_lifts(gens, n, ctx, d, D)
        return DegreeProfile(n=n, d=d, working_degree=D, c=c,
                             stabilized=homogeneous), emitted
    if homogeneous:
        c, emitted = _profile_and_lifts(gens, n, ctx, d, d)
        return DegreeProfile(n=n, d=d, working_degree=d, c=c,
                             stabilized=True), emitted
    cap = 2 * d + 2
    D = d
    prev = None
    unchanged = 0
    while True:
        c, emitted = _profile_and_lifts(gens, n, ctx, d, D)
        if prev is not None and c == prev:
            unchanged += 1
        elif prev is not None:
            unchanged = 0
        if unchanged >= 2 or D >= cap:
            return DegreeProfile(n=n, d=d, working_degree=D, c=c,
                                 stabilized=unchanged >= 2), emitted
        prev = c
        D += 1


def degree_profile(gens, d: int, working_degree="auto") -> DegreeProfile:
    """Profile c_k = dim V_k for k <= d (see module docstring)."""
    profile, _ = _run(gens, d, working_degree)
    return profile


def telescope_generators(gens, d: int, working_degree="auto") -> GeneratorReport:
    """Generating set of size c_d built by the degree-step induction; every
    output polynomial is an explicit combination of monomial shifts of the
    inputs, so the output ideal is contained in the input ideal."""
    gens = list(gens)
    profile, emitted = _run(gens, d, working_degree)
    n = profile.n if profile.n else (gens[0].n if gens else 1)
    generators = [poly for _, poly in emitted]
    claimed = math.comb(n + d - 1, d) if n else 0
    assert len(generators) == profile.c[d] if profile.c else not generators
    return GeneratorReport(generators=generators, profile=profile,
                           claimed_bound=claimed)
