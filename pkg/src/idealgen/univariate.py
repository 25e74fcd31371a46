"""Univariate machinery over F_q: irreducible enumeration with Moebius
cross-checks, the exact extremal size of a bounded-degree minimal
generating set, the product construction realizing it, and gcd-based
minimality verification.

q may be any prime power; coefficients live in the corresponding
FieldCtx.  Polynomials here are dense little-endian payload tuples
(UniPoly), which keeps Euclidean division and gcd cheap at degree a few
hundred.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fields import FieldCtx, FieldElement, field_for_order
from .polys import MultiPoly


class UniPoly:
    """Dense univariate polynomial over a FieldCtx (payload coefficients)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                vals.append(ctx.element(c).val)
            elif isinstance(c, int):
                vals.append(ctx.rfrom_int(c))
            else:
                vals.append(ctx.element(c).val)
        while vals and vals[-1] == ctx.rzero:
            vals.pop()
        self.ctx = ctx
        self.coeffs = tuple(vals)

    @classmethod
    def _raw(cls, ctx, coeffs):
        self = object.__new__(cls)
        self.ctx = ctx
        self.coeffs = coeffs
        return self

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, (ctx.rone,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (internal convention)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.ctx.rone,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.rone

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.is_monic():
            return self
        ctx = self.ctx
        inv = ctx.rinv(self.coeffs[-1])
        return UniPoly._raw(ctx, tuple(ctx.rmul(c, inv) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx._key(), self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(ctx)
        rzero = ctx.rzero
        out = [rzero] * (len(a) + len(b) - 1)
        radd, rmul = ctx.radd, ctx.rmul
        for i, ai in enumerate(a):
            if ai != rzero:
                for j, bj in enumerate(b):
                    if bj != rzero:
                        out[i + j] = radd(out[i + j], rmul(ai, bj))
        return UniPoly._raw(ctx, tuple(out))

    def divmod(self, other):
        if not isinstance(other, UniPoly) or other.is_zero():
            raise ZeroDivisionError("univariate division by zero")
        ctx = self.ctx
        rzero = ctx.rzero
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return UniPoly.zero(ctx), self
        inv = ctx.rinv(b[-1])
        q = [rzero] * (len(a) - db)
        rsub, rmul = ctx.rsub, ctx.rmul
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c != rzero:
                f = rmul(c, inv)
                q[i - db] = f
                for j in range(db + 1):
                    a[i - db + j] = rsub(a[i - db + j], rmul(f, b[j]))
        rem = a[:db]
        while rem and rem[-1] == rzero:
            rem.pop()
        return UniPoly._raw(ctx, tuple(q)), UniPoly._raw(ctx, tuple(rem))

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other) -> "UniPoly":
        """Monic Euclidean gcd."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def divides(self, other) -> bool:
        return not self.is_zero() and (other % self).is_zero()

    def evaluate(self, x) -> FieldElement:
        ctx = self.ctx
        xv = ctx.element(x).val
        acc = ctx.rzero
        for c in reversed(self.coeffs):
            acc = ctx.radd(ctx.rmul(acc, xv), c)
        return FieldElement(ctx, acc)

    def to_multipoly(self) -> MultiPoly:
        return MultiPoly._raw(
            self.ctx, 1,
            {(i,): c for i, c in enumerate(self.coeffs) if c != self.ctx.rzero})

    @classmethod
    def from_multipoly(cls, f: MultiPoly) -> "UniPoly":
        if f.n != 1:
            raise ValueError("expected a univariate polynomial")
        deg = f.degree
        if f.is_zero():
            return cls.zero(f.ctx)
        coeffs = [f.ctx.rzero] * (int(deg) + 1)
        for (e,), v in f.terms.items():
            coeffs[e] = v
        return cls._raw(f.ctx, tuple(coeffs))

    def render(self) -> str:
        return self.to_multipoly().render().replace("X1", "X")

    def __repr__(self):
        return f"<{self.render()} over {self.ctx!r}>"


# ---------------------------------------------------------------------------
# counting

def mobius(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    out = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1
    if n > 1:
        out = -out
    return out


def count_irreducibles(q: int, k: int) -> int:
    """Gauss count of monic irreducibles of degree k over F_q:
    (1/k) * sum over d | k of mu(d) q^(k/d)."""
    field_for_order(q)  # validates q is a prime power
    if k < 1:
        raise ValueError("degree must be >= 1")
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += mobius(d) * q ** (k // d)
    assert total % k == 0
    return total // k


def cumulative_count(q: int, n: int) -> int:
    """Number of monic irreducibles of degree at most n over F_q."""
    if n < 1:
        raise ValueError("degree bound must be >= 1")
    return sum(count_irreducibles(q, k) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class IrreducibleTable:
    """Monic irreducibles over F_q in (degree, lex) order: h_1, h_2, ..."""

    q: int
    ctx: FieldCtx
    entries: list
    counts_by_degree: dict = field(default_factory=dict)


def _iter_irreducibles(ctx: FieldCtx):
    """Yield monic irreducibles in nondecreasing degree, lex within a degree
    (coefficients compared from the top power down), sieving by trial
    division against everything already produced."""
    q = ctx.order
    found: list[UniPoly] = []
    for k in itertools.count(1):
        half = k // 2
        small = [h for h in found if h.degree <= half]
        for top_down in itertools.product(range(q), repeat=k):
            # top_down = (c_{k-1}, ..., c_0); build little-endian payloads
            coeffs = tuple(ctx.element_at(c).val for c in reversed(top_down)) + (ctx.rone,)
            cand = UniPoly._raw(ctx, coeffs)
            if k > 1 and coeffs[0] == ctx.rzero:
                continue  # divisible by X
            if any((cand % h).is_zero() for h in small):
                continue
            found.append(cand)
            yield cand


def enumerate_irreducibles(q: int, need: int) -> IrreducibleTable:
    """First `need` irreducibles h_1..h_need; fully scanned degrees are
    cross-checked against the Moebius formula."""
    if need < 0:
        raise ValueError("need must be >= 0")
    ctx = field_for_order(q)
    entries = list(itertools.islice(_iter_irreducibles(ctx), need))
    counts: dict[int, int] = {}
    for h in entries:
        counts[h.degree] = counts.get(h.degree, 0) + 1
    complete = {}
    for k in sorted(counts):
        expected = count_irreducibles(q, k)
        if counts[k] == expected:
            complete[k] = counts[k]
        elif counts[k] > expected:
            raise AssertionError(
                f"enumeration produced {counts[k]} degree-{k} entries, formula says {expected}")
        else:
            break  # last degree only partially scanned
    return IrreducibleTable(q=q, ctx=ctx, entries=entries, counts_by_degree=complete)


# ---------------------------------------------------------------------------
# extremal construction

@dataclass
class ExtremalReport:
    """The size-maximal product construction at degree bound d."""

    q: int
    d: int
    m: int
    degrees_used: dict
    generators: list
    max_degree: int
    degenerate: bool


def extremal_degrees(q: int, d: int):
    """(m, max_degree, degree multiset) for the extremal construction:
    m is the largest integer with deg h_2 + ... + deg h_m <= d.

    This is the cheap arithmetic core of extremal_set; it does not build
    the generator products.
    """
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    ctx = field_for_order(q)
    degrees = []
    running = 0
    for i, h in enumerate(_iter_irreducibles(ctx), start=1):
        if i == 1:
            degrees.append(h.degree)
            continue
        if running + h.degree > d:
            break
        running += h.degree
        degrees.append(h.degree)
    m = len(degrees)
    counts: dict[int, int] = {}
    for deg in degrees:
        counts[deg] = counts.get(deg, 0) + 1
    return m, running, counts


def extremal_set(q: int, d: int) -> ExtremalReport:
    """Generators f_i = prod_{j != i} h_j over the m lowest-degree
    irreducibles, with m maximal so that every f_i has degree <= d."""
    m, max_degree, counts = extremal_degrees(q, d)
    ctx = field_for_order(q)
    hs = list(itertools.islice(_iter_irreducibles(ctx), m))
    if m == 1:
        return ExtremalReport(q=q, d=d, m=1, degrees_used=counts,
                              generators=[UniPoly.one(ctx)], max_degree=0,
                              degenerate=True)
    # prefix[i] = h_1 ... h_i, suffix[i] = h_i ... h_m
    prefix = [UniPoly.one(ctx)]
    for h in hs:
        prefix.append(prefix[-1] * h)
    suffix = [UniPoly.one(ctx)] * (m + 2)
    for i in range(m, 0, -1):
        suffix[i] = hs[i - 1] * suffix[i + 1]
    gens = [prefix[i - 1] * suffix[i + 1] for i in range(1, m + 1)]
    assert max(g.degree for g in gens) == max_degree <= d
    return ExtremalReport(q=q, d=d, m=m, degrees_used=counts,
                          generators=gens, max_degree=max_degree,
                          degenerate=False)


# ---------------------------------------------------------------------------
# minimality verification

@dataclass
class MinimalityVerdict:
    unit_ideal: bool
    redundant_index: int | None

    @property
    def minimal(self) -> bool:
        return self.unit_ideal and self.redundant_index is None


def verify_univariate_minimality(gens) -> MinimalityVerdict:
    """Check that gens generate (1) and that dropping any one of them does
    not, using Euclidean gcds only (independent of how gens were built)."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ctx = gens[0].ctx
    total = UniPoly.zero(ctx)
    for g in gens:
        total = total.gcd(g)
    if not total.is_one():
        return MinimalityVerdict(unit_ideal=False, redundant_index=None)
    m = len(gens)
    # gcd of all but one via prefix/suffix gcd chains
    pre = [UniPoly.zero(ctx)] * (m + 1)
    for i in range(m):
        pre[i + 1] = pre[i].gcd(gens[i])
    suf = [UniPoly.zero(ctx)] * (m + 2)
    for i in range(m, 0, -1):
        suf[i] = suf[i + 1].gcd(gens[i - 1])
    for i in range(1, m + 1):
        without = pre[i - 1].gcd(suf[i + 1])
        if without.is_one():
            return MinimalityVerdict(unit_ideal=True, redundant_index=i - 1)
    return MinimalityVerdict(unit_ideal=True, redundant_index=None)
