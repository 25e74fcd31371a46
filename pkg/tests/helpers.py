"""Independent oracles and generators shared by the test modules.

Everything here is deliberately written from scratch (integer lists,
product formulas, brute-force sieves) so that library results are checked
against a second route, not against themselves.
"""

import random
from fractions import Fraction

from idealgen.fields import FieldCtx
from idealgen.polys import MultiPoly, iter_monomials


def vandermonde_det_1var(xs):
    """Classical product formula: prod_{i<j} (x_j - x_i)."""
    det = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            det *= Fraction(xs[j]) - Fraction(xs[i])
    return det


def lagrange_coeffs(xs, i):
    """Coefficients (ascending) of the i-th Lagrange basis polynomial over Q,
    computed by direct expansion of the product formula."""
    coeffs = [Fraction(1)]
    denom = Fraction(1)
    for j, xj in enumerate(xs):
        if j == i:
            continue
        denom *= Fraction(xs[i]) - Fraction(xj)
        new = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k] -= c * Fraction(xj)
            new[k + 1] += c
        coeffs = new
    return [c / denom for c in coeffs]


# -- independent univariate arithmetic over F_p (int lists, little-endian) --

def ipoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def ipoly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return ipoly_trim(out)


def ipoly_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c * inv % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return ipoly_trim(a[:db])


def brute_force_irreducibles(p, max_degree):
    """All monic irreducibles over F_p of degree <= max_degree, by sieving
    every monic polynomial against every lower-degree product split."""
    irr = []
    for k in range(1, max_degree + 1):
        for idx in range(p ** k):
            coeffs = []
            m = idx
            for _ in range(k):
                coeffs.append(m % p)
                m //= p
            coeffs.append(1)
            if k > 1 and coeffs[0] == 0:
                continue
            if any(len(h) - 1 <= k // 2 and not ipoly_mod(coeffs, h, p)
                   for h in irr):
                continue
            irr.append(coeffs)
    return irr


# -- random instances --------------------------------------------------------

def random_element(rng: random.Random, ctx: FieldCtx):
    if ctx.kind == "rational":
        return ctx.element(Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)))
    return ctx.element_at(rng.randrange(ctx.order))


def random_nonzero(rng, ctx):
    while True:
        a = random_element(rng, ctx)
        if not a.is_zero():
            return a


def random_poly(rng: random.Random, ctx: FieldCtx, n: int, d: int,
                max_terms: int = 4, homogeneous: bool = False) -> MultiPoly:
    monos = [m for m in iter_monomials(n, d) if not homogeneous or sum(m) == d]
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        terms[rng.choice(monos)] = random_nonzero(rng, ctx)
    return MultiPoly(ctx, n, terms)
