"""Exact scalar arithmetic: rationals, prime fields, and extension fields.

A FieldCtx pins down the coefficient domain: Q, F_p, or F_{p^e} with an
explicit monic irreducible modulus over F_p.  FieldElement values carry
their context, and arithmetic between distinct contexts is a hard error
rather than an implicit coercion; moving along a subfield tower is done
explicitly with embed/contract.  Everything is exact.

Element payloads (the ``val`` slot) are plain Python values: a Fraction
for rationals, an int in [0, p) for prime fields, and a tuple of ints of
length e (little-endian coefficients in the polynomial basis) for
extension fields.  The r*-methods on FieldCtx operate directly on
payloads; the heavier numerical layers use them to avoid wrapper churn.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

RATIONAL = "rational"
PRIME = "prime"
EXTENSION = "extension"

_FR_ZERO = Fraction(0)
_FR_ONE = Fraction(1)

_EMBED_CACHE: dict = {}


class FieldMismatchError(ValueError):
    """Elements of two different field contexts were combined."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, s) with q = p**s and p prime; reject other q."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            s, m = 0, q
            while m % p == 0:
                m //= p
                s += 1
            if m != 1:
                raise ValueError(f"not a prime power: {q}")
            return p, s
        p += 1
    return q, 1


# ---------------------------------------------------------------------------
# univariate polynomials over F_p as little-endian int lists (internal; used
# for extension-field arithmetic and modulus selection)

def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], _ptrim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c * inv_lead % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _ptrim(q), _ptrim(a[:db])


def _poly_is_irreducible(coeffs, p) -> bool:
    """Monic little-endian coeffs of degree >= 1; exhaustive trial division."""
    e = len(coeffs) - 1
    if e == 1:
        return True
    if coeffs[0] == 0:
        return False
    for deg in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            _, r = _pdivmod(list(coeffs), list(tail) + [1], p)
            if not r:
                return False
    return True


class FieldCtx:
    """One of Q, F_p, or F_{p^e}; immutable and hashable.

    Two contexts compare equal exactly when kind, p, e and modulus all
    coincide, so certificates produced under one modulus never silently
    mix with another model of the same field.
    """

    __slots__ = ("kind", "p", "e", "modulus", "order")

    def __init__(self, kind, p=None, e=None, modulus=None):
        self.kind = kind
        if kind == RATIONAL:
            self.p = None
            self.e = None
            self.modulus = None
            self.order = None
        elif kind == PRIME:
            if not _is_prime(p):
                raise ValueError(f"p must be prime, got {p}")
            self.p = p
            self.e = 1
            self.modulus = None
            self.order = p
        elif kind == EXTENSION:
            if not _is_prime(p):
                raise ValueError(f"p must be prime, got {p}")
            if e is None or e < 2:
                raise ValueError("extension degree must be >= 2 (use prime() for e = 1)")
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != e + 1 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _poly_is_irreducible(mod, p):
                raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
            self.p = p
            self.e = e
            self.modulus = mod
            self.order = p ** e
        else:
            raise ValueError(f"unknown field kind: {kind!r}")

    @classmethod
    def rational(cls) -> "FieldCtx":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldCtx":
        return cls(PRIME, p=p)

    @classmethod
    def extension(cls, p: int, e: int, modulus) -> "FieldCtx":
        return cls(EXTENSION, p=p, e=e, modulus=modulus)

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.kind, self.p, self.e, self.modulus)

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == RATIONAL:
            return "Q"
        if self.kind == PRIME:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    @property
    def char(self) -> int:
        return 0 if self.kind == RATIONAL else self.p

    def is_finite(self) -> bool:
        return self.kind != RATIONAL

    # -- raw payload arithmetic --------------------------------------------

    @property
    def rzero(self):
        if self.kind == RATIONAL:
            return _FR_ZERO
        if self.kind == PRIME:
            return 0
        return (0,) * self.e

    @property
    def rone(self):
        if self.kind == RATIONAL:
            return _FR_ONE
        if self.kind == PRIME:
            return 1
        return (1,) + (0,) * (self.e - 1)

    def rfrom_int(self, v: int):
        if self.kind == RATIONAL:
            return Fraction(v)
        if self.kind == PRIME:
            return v % self.p
        return (v % self.p,) + (0,) * (self.e - 1)

    def radd(self, x, y):
        if self.kind == RATIONAL:
            return x + y
        if self.kind == PRIME:
            return (x + y) % self.p
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def rsub(self, x, y):
        if self.kind == RATIONAL:
            return x - y
        if self.kind == PRIME:
            return (x - y) % self.p
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def rneg(self, x):
        if self.kind == RATIONAL:
            return -x
        if self.kind == PRIME:
            return (-x) % self.p
        p = self.p
        return tuple((-a) % p for a in x)

    def rmul(self, x, y):
        if self.kind == RATIONAL:
            return x * y
        if self.kind == PRIME:
            return (x * y) % self.p
        return self._ext_mul(x, y)

    def rinv(self, x):
        if self.kind == RATIONAL:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / x
        if self.kind == PRIME:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(x, -1, self.p)
        return self._ext_inv(x)

    def rpow(self, x, m: int):
        if m < 0:
            return self.rpow(self.rinv(x), -m)
        if self.kind == RATIONAL:
            return x ** m
        if self.is_finite() and x != self.rzero and m >= self.order:
            m %= self.order - 1
        if self.kind == PRIME:
            return pow(x, m, self.p)
        acc = self.rone
        base = x
        while m:
            if m & 1:
                acc = self._ext_mul(acc, base)
            base = self._ext_mul(base, base)
            m >>= 1
        return acc

    def _ext_mul(self, x, y):
        p, e, mod = self.p, self.e, self.modulus
        tmp = [0] * (2 * e - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    tmp[i + j] = (tmp[i + j] + a * b) % p
        for i in range(2 * e - 2, e - 1, -1):
            c = tmp[i]
            if c:
                tmp[i] = 0
                for j in range(e):
                    tmp[i - e + j] = (tmp[i - e + j] - c * mod[j]) % p
        return tuple(tmp[:e])

    def _ext_inv(self, x):
        if all(c == 0 for c in x):
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        r0, r1 = list(self.modulus), _ptrim(list(x))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            qs = _pmul(q, s1, p)
            new_s = [0] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                new_s[i] = c
            for i, c in enumerate(qs):
                new_s[i] = (new_s[i] - c) % p
            s0, s1 = s1, _ptrim(new_s)
        c_inv = pow(r0[0], -1, p)
        inv = [c * c_inv % p for c in s0]
        inv += [0] * (self.e - len(inv))
        return tuple(inv[: self.e])

    # -- element constructors and enumeration -------------------------------

    def element(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.ctx != self:
                raise FieldMismatchError(f"element of {v.ctx!r} used in {self!r}")
            return v
        if isinstance(v, bool):
            raise TypeError("bool is not a field value")
        if isinstance(v, int):
            return FieldElement(self, self.rfrom_int(v))
        if self.kind == RATIONAL and isinstance(v, Fraction):
            return FieldElement(self, v)
        if self.kind == EXTENSION and isinstance(v, (list, tuple)):
            if len(v) > self.e:
                raise ValueError(f"coefficient vector longer than degree {self.e}")
            vec = [int(c) % self.p for c in v]
            vec += [0] * (self.e - len(vec))
            return FieldElement(self, tuple(vec))
        raise TypeError(f"cannot build {self!r} element from {v!r}")

    def zero(self) -> "FieldElement":
        return FieldElement(self, self.rzero)

    def one(self) -> "FieldElement":
        return FieldElement(self, self.rone)

    def element_at(self, i: int) -> "FieldElement":
        """The i-th element in the canonical enumeration.

        Rationals enumerate 0, 1, 2, ...; finite fields enumerate by
        little-endian base-p digits in the polynomial basis, so the first
        p elements are the prime subfield in residue order.
        """
        if i < 0:
            raise ValueError("enumeration index must be >= 0")
        if self.kind == RATIONAL:
            return FieldElement(self, Fraction(i))
        if i >= self.order:
            raise ValueError(f"index {i} out of range for field of order {self.order}")
        if self.kind == PRIME:
            return FieldElement(self, i)
        digits = []
        for _ in range(self.e):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(digits))

    def element_index(self, a: "FieldElement") -> int:
        if a.ctx != self:
            raise FieldMismatchError("element from a different context")
        if self.kind == RATIONAL:
            v = a.val
            if v.denominator != 1 or v < 0:
                raise ValueError(f"{v} is not an enumeration value")
            return int(v)
        if self.kind == PRIME:
            return a.val
        idx = 0
        for d in reversed(a.val):
            idx = idx * self.p + d
        return idx

    def elements(self):
        """Iterate over all elements (finite contexts only)."""
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite field")
        for i in range(self.order):
            yield self.element_at(i)


class FieldElement:
    """An immutable value tagged with its FieldCtx.

    Arithmetic accepts another FieldElement of the identical context or a
    plain int (mapped through the prime subfield / the integers); anything
    else is rejected.
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is self.ctx or other.ctx == self.ctx:
                return other.val
            raise FieldMismatchError(
                f"cross-context arithmetic: {self.ctx!r} vs {other.ctx!r}")
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return self.ctx.rfrom_int(other)
        if isinstance(other, Fraction) and self.ctx.kind == RATIONAL:
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.radd(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.val, self.ctx.rinv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(v, self.ctx.rinv(self.val)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.rneg(self.val))

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rpow(self.val, m))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.rinv(self.val))

    def is_zero(self) -> bool:
        return self.val == self.ctx.rzero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.val == other.val
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self.val == self.ctx.rfrom_int(other)
        if isinstance(other, Fraction) and self.ctx.kind == RATIONAL:
            return self.val == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx._key(), self.val))

    def __repr__(self):
        if self.ctx.kind == EXTENSION:
            return f"{list(self.val)}"
        return str(self.val)


# ---------------------------------------------------------------------------
# module-level operations

def make_extension(p: int, e: int) -> FieldCtx:
    """Build F_{p^e} with the lexicographically smallest monic irreducible
    modulus (coefficients compared from the constant term upward); e = 1
    collapses to the prime field."""
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if e == 1:
        return FieldCtx.prime(p)
    for tail in itertools.product(range(p), repeat=e):
        modulus = tail + (1,)
        if _poly_is_irreducible(modulus, p):
            return FieldCtx.extension(p, e, modulus)
    raise AssertionError("no irreducible of degree e found; unreachable")


def field_for_order(q: int) -> FieldCtx:
    """The field with q elements (q a prime power), canonical modulus."""
    p, s = factor_prime_power(q)
    return make_extension(p, s)


def frobenius(a: FieldElement, r: int = 1) -> FieldElement:
    """r-fold absolute Frobenius a -> a^(p^r); identity on prime fields."""
    ctx = a.ctx
    if ctx.kind == RATIONAL:
        raise ValueError("Frobenius is only defined over finite fields")
    if r < 0:
        raise ValueError("Frobenius iteration count must be >= 0")
    if ctx.kind == PRIME or r == 0:
        return a
    return a ** (ctx.p ** r)


def element_order(a: FieldElement) -> int:
    """Least n >= 1 with a^n = 1; requires a nonzero finite-field element."""
    ctx = a.ctx
    if not ctx.is_finite():
        raise ValueError("multiplicative order requires a finite field")
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    n = ctx.order - 1
    for t in sorted(_divisors(n)):
        if ctx.rpow(a.val, t) == ctx.rone:
            return t
    raise AssertionError("order must divide q - 1; unreachable")


def _divisors(n: int) -> list[int]:
    out = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            if f != n // f:
                out.append(n // f)
        f += 1
    return out


# ---------------------------------------------------------------------------
# subfield embeddings

def _embedding_powers(small: FieldCtx, big: FieldCtx):
    """Payload images of 1, tau, ..., tau^(s-1) in big, tau = small generator.

    The image of tau is the smallest-index root of small's modulus in big,
    which makes the tower deterministic.
    """
    key = (small._key(), big._key())
    cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached
    s = small.e
    mod = small.modulus
    root = None
    for cand in big.elements():
        acc = big.rzero
        x = cand.val
        for c in reversed(mod):
            acc = big.radd(big.rmul(acc, x), big.rfrom_int(c))
        if acc == big.rzero:
            root = x
            break
    if root is None:
        raise ValueError(f"{small!r} does not embed into {big!r}")
    powers = [big.rone]
    for _ in range(1, s):
        powers.append(big.rmul(powers[-1], root))
    _EMBED_CACHE[key] = powers
    return powers


def embed(a: FieldElement, big: FieldCtx) -> FieldElement:
    """Map a into the larger field big along the canonical tower."""
    small = a.ctx
    if small == big:
        return a
    if small.kind == RATIONAL or big.kind == RATIONAL:
        raise ValueError("no embedding between Q and finite fields")
    if small.p != big.p:
        raise ValueError("characteristics differ; no embedding")
    if big.e % small.e != 0:
        raise ValueError(f"{small!r} is not a subfield of {big!r}")
    if small.kind == PRIME:
        return FieldElement(big, big.rfrom_int(a.val))
    powers = _embedding_powers(small, big)
    acc = big.rzero
    for c, pw in zip(a.val, powers):
        if c:
            acc = big.radd(acc, tuple(c * x % big.p for x in pw))
    return FieldElement(big, acc)


def contract(a: FieldElement, small: FieldCtx) -> FieldElement:
    """Inverse of embed; fails if a does not lie in the subfield image."""
    big = a.ctx
    if big == small:
        return a
    if small.kind == RATIONAL or big.kind == RATIONAL:
        raise ValueError("no embedding between Q and finite fields")
    if small.p != big.p or big.e % small.e != 0:
        raise ValueError(f"{small!r} is not a subfield of {big!r}")
    if small.kind == PRIME:
        vec = a.val
        if any(c != 0 for c in vec[1:]):
            raise ValueError(f"{a!r} is not in the prime subfield")
        return FieldElement(small, vec[0])
    powers = _embedding_powers(small, big)
    # solve sum_j c_j * powers[j] = a over F_p, unknown c_j in [0, p)
    p = big.p
    e, s = big.e, small.e
    rows = [[powers[j][i] for j in range(s)] + [a.val[i]] for i in range(e)]
    sol = _solve_mod_p(rows, s, p)
    if sol is None:
        raise ValueError(f"{a!r} is not in the subfield of degree {s}")
    return FieldElement(small, tuple(sol))


def _solve_mod_p(rows, ncols, p):
    """Gaussian elimination mod p on [A | b] rows; unique solution or None."""
    rows = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] % p:
            return None
    if len(piv) < ncols:
        return None
    sol = [0] * ncols
    for i, c in enumerate(piv):
        sol[c] = rows[i][ncols]
    return sol
