"""Sparse exact multivariate polynomials with a fixed graded monomial order.

Monomials are exponent tuples over variables X1 > X2 > ... > Xn.  The
canonical listing used for coefficient vectors and serialization is
degree-major, with the lexicographically larger exponent tuple first
inside each degree block: 1, X1, X2, X1^2, X1*X2, X2^2, ...  The proper
term order (leading terms, Groebner reduction) is graded lex on the same
variable order.

Coefficients are stored as raw field payloads keyed by monomial; use
``coeff`` / ``iter_terms`` for the FieldElement view.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import EXTENSION, RATIONAL, FieldCtx, FieldElement, FieldMismatchError

NEG_INF = float("-inf")


def iter_monomials_of_degree(n: int, k: int):
    """Exponent tuples of total degree k, lexicographically descending."""
    if n == 1:
        yield (k,)
        return
    for e0 in range(k, -1, -1):
        for rest in iter_monomials_of_degree(n - 1, k - e0):
            yield (e0,) + rest


def iter_monomials(n: int, max_degree: int):
    """All exponent tuples of degree <= max_degree in canonical listing order."""
    for k in range(max_degree + 1):
        yield from iter_monomials_of_degree(n, k)


def monomial_count(n: int, d: int) -> int:
    """Number of monomials of degree <= d in n variables: C(n+d, d)."""
    return math.comb(n + d, d)


def grlex_key(mono):
    """Sort key for the graded lex term order (max = leading term)."""
    return (sum(mono), mono)


def listing_key(mono):
    """Sort key for the canonical listing order (ascending)."""
    return (sum(mono), tuple(-e for e in mono))


class Point:
    """A point of K^n; coordinates are FieldElements sharing one context."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, coords):
        coords = tuple(ctx.element(c) for c in coords)
        self.ctx = ctx
        self.coords = coords

    @property
    def n(self) -> int:
        return len(self.coords)

    def payloads(self) -> tuple:
        return tuple(c.val for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.ctx == other.ctx and self.payloads() == other.payloads()

    def __hash__(self):
        return hash((self.ctx._key(), self.payloads()))

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self.coords) + ")"


class MultiPoly:
    """Sparse polynomial over a FieldCtx; immutable once constructed."""

    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: FieldCtx, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        clean = {}
        if terms:
            rzero = ctx.rzero
            for mono, c in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != n or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono} for n={n}")
                if isinstance(c, FieldElement):
                    if c.ctx != ctx:
                        raise FieldMismatchError("coefficient from another context")
                    v = c.val
                elif isinstance(c, int):
                    v = ctx.rfrom_int(c)
                else:
                    v = ctx.element(c).val
                if v != rzero:
                    clean[mono] = v
        self.ctx = ctx
        self.n = n
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def _raw(cls, ctx, n, payload_terms):
        self = object.__new__(cls)
        self.ctx = ctx
        self.n = n
        self.terms = payload_terms
        return self

    @classmethod
    def zero(cls, ctx, n):
        return cls._raw(ctx, n, {})

    @classmethod
    def one(cls, ctx, n):
        return cls._raw(ctx, n, {(0,) * n: ctx.rone})

    @classmethod
    def constant(cls, ctx, n, c):
        return cls(ctx, n, {(0,) * n: c})

    @classmethod
    def variable(cls, ctx, n, i):
        """The variable X_{i+1} (0-based index i)."""
        if not 0 <= i < n:
            raise ValueError(f"variable index {i} out of range")
        mono = tuple(1 if j == i else 0 for j in range(n))
        return cls._raw(ctx, n, {mono: ctx.rone})

    @classmethod
    def from_coefficient_vector(cls, ctx, n, d, vec):
        monos = list(iter_monomials(n, d))
        if len(vec) != len(monos):
            raise ValueError(f"expected {len(monos)} coefficients, got {len(vec)}")
        terms = {}
        rzero = ctx.rzero
        for mono, c in zip(monos, vec):
            v = c.val if isinstance(c, FieldElement) else ctx.element(c).val
            if v != rzero:
                terms[mono] = v
        return cls._raw(ctx, n, terms)

    # -- basic views ---------------------------------------------------------

    @property
    def degree(self):
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coeff(self, mono) -> FieldElement:
        return FieldElement(self.ctx, self.terms.get(tuple(mono), self.ctx.rzero))

    def iter_terms(self):
        """(monomial, FieldElement) pairs in canonical listing order."""
        for mono in sorted(self.terms, key=listing_key):
            yield mono, FieldElement(self.ctx, self.terms[mono])

    def leading_monomial(self):
        """Graded-lex largest monomial; None for zero."""
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> FieldElement:
        lm = self.leading_monomial()
        if lm is None:
            return self.ctx.zero()
        return FieldElement(self.ctx, self.terms[lm])

    def _check_compatible(self, other):
        if self.ctx != other.ctx:
            raise FieldMismatchError("polynomials over different contexts")
        if self.n != other.n:
            raise ValueError("polynomials in different numbers of variables")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        ctx = self.ctx
        out = dict(self.terms)
        rzero = ctx.rzero
        for mono, v in other.terms.items():
            s = ctx.radd(out.get(mono, rzero), v)
            if s == rzero:
                out.pop(mono, None)
            else:
                out[mono] = s
        return MultiPoly._raw(ctx, self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        ctx = self.ctx
        return MultiPoly._raw(ctx, self.n, {m: ctx.rneg(v) for m, v in self.terms.items()})

    def __mul__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        ctx = self.ctx
        rzero = ctx.rzero
        out = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = ctx.radd(out.get(mono, rzero), ctx.rmul(v1, v2))
                if s == rzero:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return MultiPoly._raw(ctx, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        acc = MultiPoly.one(self.ctx, self.n)
        base = self
        while m:
            if m & 1:
                acc = acc * base
            base = base * base
            m >>= 1
        return acc

    def scale(self, c) -> "MultiPoly":
        cv = self.ctx.element(c).val
        ctx = self.ctx
        if cv == ctx.rzero:
            return MultiPoly.zero(ctx, self.n)
        return MultiPoly._raw(ctx, self.n, {m: ctx.rmul(v, cv) for m, v in self.terms.items()})

    def _as_poly(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.ctx, self.n, self.ctx.element(other))
        if isinstance(other, FieldElement):
            return MultiPoly.constant(self.ctx, self.n, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx._key(), self.n, frozenset(self.terms.items())))

    # -- spec operations -----------------------------------------------------

    def evaluate(self, point: Point) -> FieldElement:
        """Exact value at a point; a ring homomorphism to the field."""
        if point.ctx != self.ctx:
            raise FieldMismatchError("point in a different context")
        if point.n != self.n:
            raise ValueError("point dimension does not match variable count")
        ctx = self.ctx
        coords = point.payloads()
        maxdeg = [0] * self.n
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e > maxdeg[i]:
                    maxdeg[i] = e
        pows = []
        for i, x in enumerate(coords):
            row = [ctx.rone]
            for _ in range(maxdeg[i]):
                row.append(ctx.rmul(row[-1], x))
            pows.append(row)
        acc = ctx.rzero
        for mono, v in self.terms.items():
            t = v
            for i, e in enumerate(mono):
                if e:
                    t = ctx.rmul(t, pows[i][e])
            acc = ctx.radd(acc, t)
        return FieldElement(ctx, acc)

    def degree_part(self, k: int) -> "MultiPoly":
        """Sum of the terms of total degree exactly k."""
        if k < 0:
            raise ValueError("degree must be >= 0")
        return MultiPoly._raw(
            self.ctx, self.n, {m: v for m, v in self.terms.items() if sum(m) == k})

    def coefficient_vector(self, d: int):
        """Coefficients on the canonical listing of monomials of degree <= d."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds bound {d}")
        ctx = self.ctx
        rzero = ctx.rzero
        return [FieldElement(ctx, self.terms.get(m, rzero)) for m in iter_monomials(self.n, d)]

    def coefficient_payloads(self, d: int):
        """Raw-payload version of coefficient_vector (internal plumbing)."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds bound {d}")
        rzero = self.ctx.rzero
        return [self.terms.get(m, rzero) for m in iter_monomials(self.n, d)]

    def galois_apply(self, r: int) -> "MultiPoly":
        """Apply the r-fold Frobenius to every coefficient (extension fields)."""
        ctx = self.ctx
        if ctx.kind != EXTENSION:
            raise ValueError("galois_apply requires an extension-field context")
        if r < 0:
            raise ValueError("Frobenius iteration count must be >= 0")
        q = ctx.p ** (r % ctx.e) if r else 1
        if r % ctx.e == 0:
            return self
        return MultiPoly._raw(ctx, self.n, {m: ctx.rpow(v, q) for m, v in self.terms.items()})

    def map_coefficients(self, fn, new_ctx: FieldCtx) -> "MultiPoly":
        """Rebuild over new_ctx sending each coefficient through fn."""
        terms = {}
        rzero = new_ctx.rzero
        for m, v in self.terms.items():
            w = fn(FieldElement(self.ctx, v))
            wv = w.val if isinstance(w, FieldElement) else new_ctx.element(w).val
            if wv != rzero:
                terms[m] = wv
        return MultiPoly._raw(new_ctx, self.n, terms)

    # -- text form -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, leading term first; parse_poly round-trips it."""
        if not self.terms:
            return "0"
        ctx = self.ctx
        parts = []
        for mono in sorted(self.terms, key=grlex_key, reverse=True):
            v = self.terms[mono]
            vars_txt = "*".join(
                f"X{i + 1}^{e}" if e > 1 else f"X{i + 1}"
                for i, e in enumerate(mono) if e)
            neg = False
            if ctx.kind == RATIONAL and v < 0:
                neg, v = True, -v
            if ctx.kind == EXTENSION:
                coef_txt = "[" + ",".join(str(c) for c in v) + "]"
                is_one = v == ctx.rone
            else:
                coef_txt = str(v)
                is_one = v == ctx.rone
            if vars_txt:
                txt = vars_txt if is_one else f"{coef_txt}*{vars_txt}"
            else:
                txt = coef_txt
            parts.append(("-" if neg else "+", txt))
        sign0, txt0 = parts[0]
        out = ("-" if sign0 == "-" else "") + txt0
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __repr__(self):
        return f"<{self.render()} over {self.ctx!r}>"


# ---------------------------------------------------------------------------
# parsing

class PolyParseError(ValueError):
    """Syntax or coefficient error in polynomial text, with a position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        t = self.text
        i = self.pos
        while i < len(t) and t[i].isspace():
            i += 1
        self.pos = i
        if i >= len(t):
            return None, i
        ch = t[i]
        if ch.isdigit():
            j = i
            while j < len(t) and t[j].isdigit():
                j += 1
            return ("int", int(t[i:j]), j), i
        if ch == "X":
            j = i + 1
            while j < len(t) and t[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError("variable needs an index, e.g. X1", i)
            return ("var", int(t[i + 1:j]), j), i
        if ch in "+-*^()[],/":
            return (ch, ch, i + 1), i
        raise PolyParseError(f"unexpected character {ch!r}", i)

    def next(self):
        tok, _ = self.peek()
        if tok is not None:
            self.pos = tok[2]
        return tok

    def expect(self, kind):
        tok, pos = self.peek()
        if tok is None or tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}", pos)
        self.pos = tok[2]
        return tok


def parse_poly(text: str, n: int, ctx: FieldCtx) -> MultiPoly:
    """Parse the polynomial grammar: X1..Xn, integer or a/b literals,
    bracketed extension coefficients like [0,1], and + - * ^ ( )."""
    tz = _Tokenizer(text)
    poly = _parse_expr(tz, n, ctx)
    tok, pos = tz.peek()
    if tok is not None:
        raise PolyParseError("trailing input", pos)
    return poly


def _parse_expr(tz, n, ctx):
    tok, _ = tz.peek()
    negate = False
    if tok is not None and tok[0] == "-":
        tz.next()
        negate = True
    acc = _parse_term(tz, n, ctx)
    if negate:
        acc = -acc
    while True:
        tok, _ = tz.peek()
        if tok is None or tok[0] not in "+-":
            return acc
        tz.next()
        rhs = _parse_term(tz, n, ctx)
        acc = acc + rhs if tok[0] == "+" else acc - rhs


def _parse_term(tz, n, ctx):
    acc = _parse_power(tz, n, ctx)
    while True:
        tok, _ = tz.peek()
        if tok is None or tok[0] != "*":
            return acc
        tz.next()
        acc = acc * _parse_power(tz, n, ctx)


def _parse_power(tz, n, ctx):
    base = _parse_atom(tz, n, ctx)
    while True:
        tok, _ = tz.peek()
        if tok is None or tok[0] != "^":
            return base
        tz.next()
        etok, pos = tz.peek()
        if etok is None or etok[0] != "int":
            raise PolyParseError("exponent must be a nonnegative integer", pos)
        tz.next()
        base = base ** etok[1]


def _parse_atom(tz, n, ctx):
    tok, pos = tz.peek()
    if tok is None:
        raise PolyParseError("unexpected end of input", pos)
    kind = tok[0]
    if kind == "int":
        tz.next()
        num = tok[1]
        tok2, _ = tz.peek()
        if tok2 is not None and tok2[0] == "/":
            tz.next()
            dtok, dpos = tz.peek()
            if dtok is None or dtok[0] != "int":
                raise PolyParseError("expected denominator after '/'", dpos)
            tz.next()
            den = dtok[1]
            if den == 0:
                raise PolyParseError("zero denominator", dpos)
            return _fraction_constant(num, den, n, ctx, pos)
        return MultiPoly.constant(ctx, n, ctx.element(num))
    if kind == "var":
        tz.next()
        idx = tok[1]
        if not 1 <= idx <= n:
            raise PolyParseError(f"unknown variable X{idx} (n = {n})", pos)
        return MultiPoly.variable(ctx, n, idx - 1)
    if kind == "(":
        tz.next()
        inner = _parse_expr(tz, n, ctx)
        tz.expect(")")
        return inner
    if kind == "[":
        if ctx.kind != EXTENSION:
            raise PolyParseError("bracketed coefficients need an extension field", pos)
        tz.next()
        vals = []
        while True:
            tok2, pos2 = tz.peek()
            if tok2 is None:
                raise PolyParseError("unterminated '['", pos2)
            if tok2[0] == "]":
                tz.next()
                break
            if tok2[0] == "-":
                tz.next()
                itok, ipos = tz.peek()
                if itok is None or itok[0] != "int":
                    raise PolyParseError("expected integer in brackets", ipos)
                tz.next()
                vals.append(-itok[1])
            elif tok2[0] == "int":
                tz.next()
                vals.append(tok2[1])
            elif tok2[0] == ",":
                tz.next()
            else:
                raise PolyParseError("expected integer, ',' or ']'", pos2)
        if len(vals) > ctx.e:
            raise PolyParseError(f"coefficient vector longer than {ctx.e}", pos)
        return MultiPoly.constant(ctx, n, ctx.element(vals))
    if kind == "-":
        tz.next()
        return -_parse_atom(tz, n, ctx)
    raise PolyParseError(f"unexpected token {tok[1]!r}", pos)


def _fraction_constant(num, den, n, ctx, pos):
    if ctx.kind == RATIONAL:
        return MultiPoly.constant(ctx, n, Fraction(num, den))
    if den % ctx.char == 0:
        raise PolyParseError(
            f"coefficient {num}/{den} is not in the field (denominator divisible by {ctx.char})",
            pos)
    c = ctx.element(num) / ctx.element(den)
    return MultiPoly.constant(ctx, n, c)
