"""Small-scale ground truth: Buchberger's algorithm, normal forms, ideal
membership and ideal equality under the graded lex order.

This is an oracle for tests and verification paths, not a production
Groebner engine; hard size caps make accidental use on big instances
impossible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polys import MultiPoly, grlex_key

MAX_VARS = 3
DEFAULT_TERM_CAP = 200
_BASIS_SAFETY_CAP = 500


class OracleCapError(Exception):
    """Instance exceeds the oracle's size guard."""


@dataclass
class GroebnerBasis:
    ctx: object
    n: int
    basis: list  # reduced, monic, sorted by leading monomial (grlex ascending)


def _monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f: MultiPoly, basis) -> MultiPoly:
    """Full remainder of f under multivariate division by basis (in order)."""
    ctx = f.ctx
    h = f
    remainder = MultiPoly.zero(ctx, f.n)
    while not h.is_zero():
        lm = h.leading_monomial()
        lc = h.leading_coeff()
        for g in basis:
            glm = g.leading_monomial()
            if _monomial_divides(glm, lm):
                factor = MultiPoly._raw(
                    ctx, f.n, {_monomial_quot(lm, glm): (lc / g.leading_coeff()).val})
                h = h - factor * g
                break
        else:
            lt = MultiPoly._raw(ctx, f.n, {lm: lc.val})
            remainder = remainder + lt
            h = h - lt
    return remainder


def _s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ctx = f.ctx
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    l = _monomial_lcm(lmf, lmg)
    mf = MultiPoly._raw(ctx, f.n, {_monomial_quot(l, lmf): ctx.rinv(f.terms[lmf])})
    mg = MultiPoly._raw(ctx, f.n, {_monomial_quot(l, lmg): ctx.rinv(g.terms[lmg])})
    return mf * f - mg * g


def _check_caps(gens, term_cap):
    polys = [g for g in gens if not g.is_zero()]
    if polys and polys[0].n > MAX_VARS:
        raise OracleCapError(f"oracle limited to {MAX_VARS} variables")
    total_terms = sum(len(g.terms) for g in polys)
    if total_terms > term_cap:
        raise OracleCapError(f"{total_terms} input terms exceed the cap {term_cap}")
    return polys


def buchberger(gens, term_cap: int = DEFAULT_TERM_CAP) -> GroebnerBasis:
    """Reduced Groebner basis under graded lex; deterministic."""
    gens = list(gens)
    if not gens:
        raise ValueError("need the context; pass at least one polynomial (may be zero)")
    ctx, n = gens[0].ctx, gens[0].n
    polys = _check_caps(gens, term_cap)
    basis = []
    for g in polys:
        basis.append(g.scale(g.leading_coeff().inverse()))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        # normal selection: smallest lcm of leading monomials, then pair order
        pairs.sort(key=lambda ij: (grlex_key(_monomial_lcm(
            basis[ij[0]].leading_monomial(), basis[ij[1]].leading_monomial())), ij))
        i, j = pairs.pop(0)
        lmi, lmj = basis[i].leading_monomial(), basis[j].leading_monomial()
        if _monomial_lcm(lmi, lmj) == tuple(a + b for a, b in zip(lmi, lmj)):
            continue  # coprime leading monomials: S-poly reduces to zero
        s = normal_form(_s_polynomial(basis[i], basis[j]), basis)
        if s.is_zero():
            continue
        s = s.scale(s.leading_coeff().inverse())
        basis.append(s)
        if len(basis) > _BASIS_SAFETY_CAP:
            raise OracleCapError("basis grew past the safety cap")
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))
    basis = _autoreduce(basis, ctx, n)
    return GroebnerBasis(ctx=ctx, n=n, basis=basis)


def _autoreduce(basis, ctx, n):
    # drop polynomials whose leading monomial is divisible by a kept one's
    # (a divisor never sorts after its multiple under graded lex)
    basis = sorted(basis, key=lambda g: grlex_key(g.leading_monomial()))
    kept = []
    for g in basis:
        lm = g.leading_monomial()
        if any(_monomial_divides(h.leading_monomial(), lm) for h in kept):
            continue
        kept.append(g)
    # fully reduce each against the others
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = normal_form(g, others) if others else g
        if not r.is_zero():
            out.append(r.scale(r.leading_coeff().inverse()))
    out.sort(key=lambda g: grlex_key(g.leading_monomial()))
    return out


def membership(f: MultiPoly, gb: GroebnerBasis) -> bool:
    """True iff f lies in the ideal (normal form is zero)."""
    if f.is_zero():
        return True
    if not gb.basis:
        return False
    return normal_form(f, gb.basis).is_zero()


def ideal_equal(gens_a, gens_b, term_cap: int = DEFAULT_TERM_CAP) -> bool:
    """Mutual membership of each side's generators in the other's basis."""
    gens_a, gens_b = list(gens_a), list(gens_b)
    nz_a = [g for g in gens_a if not g.is_zero()]
    nz_b = [g for g in gens_b if not g.is_zero()]
    if not nz_a or not nz_b:
        return not nz_a and not nz_b
    gb_a = buchberger(gens_a, term_cap)
    gb_b = buchberger(gens_b, term_cap)
    return (all(membership(g, gb_b) for g in nz_a)
            and all(membership(g, gb_a) for g in nz_b))
