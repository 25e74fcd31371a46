"""Canonical JSON encoding for every artifact type.

One fixed layout per type, collections in canonical order, keys sorted at
dump time: identical objects serialize to identical bytes.  Rationals are
"a/b" strings with positive reduced denominator, prime-field elements are
residues, extension elements are little-endian coefficient arrays, and
every certificate-bearing file embeds the full field context including
the modulus.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certificates import DualCertificate
from .fields import EXTENSION, PRIME, RATIONAL, FieldCtx, FieldElement
from .polys import MultiPoly, Point, listing_key


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- field contexts ----------------------------------------------------------

def field_to_json(ctx: FieldCtx) -> dict:
    if ctx.kind == RATIONAL:
        return {"kind": "rational"}
    if ctx.kind == PRIME:
        return {"kind": "prime", "p": ctx.p}
    return {"kind": "extension", "p": ctx.p, "e": ctx.e,
            "modulus": list(ctx.modulus)}


def field_from_json(obj: dict) -> FieldCtx:
    kind = obj.get("kind")
    if kind == "rational":
        return FieldCtx.rational()
    if kind == "prime":
        return FieldCtx.prime(int(obj["p"]))
    if kind == "extension":
        return FieldCtx.extension(int(obj["p"]), int(obj["e"]), obj["modulus"])
    raise ValueError(f"unknown field kind in JSON: {kind!r}")


# -- elements ----------------------------------------------------------------

def element_to_json(a: FieldElement):
    ctx = a.ctx
    if ctx.kind == RATIONAL:
        return f"{a.val.numerator}/{a.val.denominator}"
    if ctx.kind == PRIME:
        return a.val
    return list(a.val)


def element_from_json(ctx: FieldCtx, obj) -> FieldElement:
    if ctx.kind == RATIONAL:
        if isinstance(obj, str):
            num, _, den = obj.partition("/")
            return ctx.element(Fraction(int(num), int(den) if den else 1))
        if isinstance(obj, int):
            return ctx.element(obj)
        raise ValueError(f"bad rational encoding: {obj!r}")
    if ctx.kind == PRIME:
        if not isinstance(obj, int):
            raise ValueError(f"bad prime-field encoding: {obj!r}")
        return ctx.element(obj)
    if isinstance(obj, int):
        return ctx.element(obj)
    if isinstance(obj, list):
        return ctx.element(obj)
    raise ValueError(f"bad extension-field encoding: {obj!r}")


# -- polynomials and points --------------------------------------------------

def poly_to_json(f: MultiPoly) -> list:
    out = []
    for mono in sorted(f.terms, key=listing_key):
        out.append({"exps": list(mono),
                    "coef": element_to_json(FieldElement(f.ctx, f.terms[mono]))})
    return out


def poly_from_json(ctx: FieldCtx, n: int, obj) -> MultiPoly:
    if isinstance(obj, str):
        from .polys import parse_poly
        return parse_poly(obj, n, ctx)
    terms = {}
    for item in obj:
        mono = tuple(int(e) for e in item["exps"])
        terms[mono] = element_from_json(ctx, item["coef"])
    return MultiPoly(ctx, n, terms)


def point_to_json(p: Point) -> list:
    return [element_to_json(c) for c in p.coords]


def point_from_json(ctx: FieldCtx, obj) -> Point:
    return Point(ctx, [element_from_json(ctx, c) for c in obj])


# -- certificates ------------------------------------------------------------

def certificate_to_json(cert: DualCertificate) -> dict:
    return {
        "field": field_to_json(cert.ctx),
        "n": cert.n,
        "d": cert.d,
        "points": [point_to_json(p) for p in cert.points],
        "polys": [poly_to_json(f) for f in cert.polys],
        "diagonal": [element_to_json(v) for v in cert.diagonal],
    }


def certificate_from_json(obj: dict) -> DualCertificate:
    ctx = field_from_json(obj["field"])
    n = int(obj["n"])
    d = int(obj["d"])
    points = [point_from_json(ctx, p) for p in obj["points"]]
    polys = [poly_from_json(ctx, n, f) for f in obj["polys"]]
    diagonal = [element_from_json(ctx, v) for v in obj["diagonal"]]
    return DualCertificate(ctx=ctx, n=n, d=d, points=points, polys=polys,
                           diagonal=diagonal)


# -- generator files ---------------------------------------------------------

def gens_file_to_json(ctx: FieldCtx, n: int, gens) -> dict:
    return {"field": field_to_json(ctx), "n": n,
            "gens": [poly_to_json(g) for g in gens]}


def gens_file_from_json(obj: dict):
    ctx = field_from_json(obj["field"])
    n = int(obj["n"])
    gens = [poly_from_json(ctx, n, g) for g in obj["gens"]]
    return ctx, n, gens
