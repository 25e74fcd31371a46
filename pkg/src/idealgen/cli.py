"""Command line interface: JSON in and out, explicit seeds, manifests.

Every command writes a single JSON document to stdout whose "manifest"
field pins the full parameter set (field spec with modulus, seed,
version); identical manifests reproduce identical bytes.  Diagnostics go
to stderr.  Exit codes: 0 success, 1 usage or precondition errors,
2 certificate verification failure, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import __version__
from .certificates import (BudgetExhaustedError, FieldTooSmallError,
                           greedy_point_search, solve_certificate,
                           verify_certificate)
from .constructions import (OrderTooSmallError, PowerCollisionError,
                            char0_simplex, q_analog_line, two_var_triangle)
from .fields import FieldCtx, FieldMismatchError, field_for_order, make_extension
from .gencount import telescope_generators
from .groebner import OracleCapError, buchberger, membership
from .jsonio import (certificate_from_json, certificate_to_json,
                     dumps_canonical, element_to_json, field_to_json,
                     gens_file_from_json, poly_from_json, poly_to_json)
from .normlift import build_conjecture_instance, conjecture_params, probe
from .polys import PolyParseError, parse_poly
from .univariate import (count_irreducibles, cumulative_count,
                         extremal_degrees, extremal_set,
                         verify_univariate_minimality)

DEFAULT_BUDGET = int(os.environ.get("IDEALGEN_BUDGET", "10000"))

_FIELD_RE = re.compile(r"^gf:(\d+)(?:\^(\d+))?$")


def parse_field(spec: str) -> FieldCtx:
    """Field mini-grammar: `q` for the rationals, `gf:p`, `gf:p^e`."""
    s = spec.strip().lower()
    if s in ("q", "rational", "rationals"):
        return FieldCtx.rational()
    m = _FIELD_RE.match(s)
    if not m:
        raise ValueError(f"bad field spec {spec!r}; use q, gf:p, or gf:p^e")
    p = int(m.group(1))
    e = int(m.group(2)) if m.group(2) else 1
    if e == 1:
        try:
            return FieldCtx.prime(p)
        except ValueError:
            return field_for_order(p)  # allow gf:q for prime powers
    return make_extension(p, e)


def _parse_scalar(text: str, ctx: FieldCtx):
    """An element literal: integer, a/b, or [c0,c1,...]."""
    f = parse_poly(text, 1, ctx)
    if f.degree > 0:
        raise ValueError(f"expected a constant, got {text!r}")
    return f.coeff((0,))


def _manifest(command: str, params: dict) -> dict:
    return {"tool": "idealgen", "version": __version__,
            "command": command, "params": params}


def _emit(manifest: dict, payload: dict) -> None:
    doc = {"manifest": manifest}
    doc.update(payload)
    sys.stdout.write(dumps_canonical(doc))


# ---------------------------------------------------------------------------
# command handlers

def _cmd_mu_bound(args) -> int:
    with open(args.gens) as fh:
        ctx, n, gens = gens_file_from_json(json.load(fh))
    if n != args.nvars:
        raise ValueError(f"--nvars {args.nvars} does not match gens file (n={n})")
    wd = args.working_degree
    wd = "auto" if wd in (None, "auto") else int(wd)
    report = telescope_generators(gens, args.degree, working_degree=wd)
    prof = report.profile
    _emit(_manifest("mu-bound", {
        "field": field_to_json(ctx), "nvars": args.nvars, "degree": args.degree,
        "gens": args.gens, "working_degree": str(wd)}), {
        "profile": {"n": prof.n, "d": prof.d, "c": list(prof.c),
                    "working_degree": prof.working_degree,
                    "stabilized": prof.stabilized},
        "claimed_bound": report.claimed_bound,
        "count": len(report.generators),
        "generators": [poly_to_json(g) for g in report.generators],
    })
    return 0


def _cmd_certificate_search(args) -> int:
    ctx = parse_field(args.field)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    found = greedy_point_search(ctx, args.n, args.d, seed=args.seed,
                                budget=budget, grid_size=args.grid_size)
    cert = solve_certificate(found.points, args.d)
    verdict = verify_certificate(cert)
    if not verdict.valid:
        raise AssertionError(f"solver output failed verification: {verdict.describe()}")
    _emit(_manifest("certificate search", {
        "field": field_to_json(ctx), "n": args.n, "d": args.d,
        "seed": args.seed, "budget": budget, "grid_size": args.grid_size}), {
        "certificate": certificate_to_json(cert),
        "search": {"random_trials": found.random_trials,
                   "from_stream": found.from_stream},
    })
    return 0


def _cmd_certificate_verify(args) -> int:
    with open(args.file) as fh:
        doc = json.load(fh)
    cert = certificate_from_json(doc.get("certificate", doc))
    verdict = verify_certificate(cert)
    _emit(_manifest("certificate verify", {"file": args.file}), {
        "valid": verdict.valid,
        "reason": verdict.reason,
        "witness": None if verdict.valid else {"i": verdict.i, "j": verdict.j},
    })
    return 0 if verdict.valid else 2


def _cmd_univariate_extremal(args) -> int:
    manifest = _manifest("univariate extremal",
                         {"q": args.q, "d": args.d, "light": args.light})
    if args.light:
        m, max_degree, counts = extremal_degrees(args.q, args.d)
        _emit(manifest, {"q": args.q, "d": args.d, "m": m,
                         "max_degree": max_degree,
                         "degrees_used": {str(k): v for k, v in sorted(counts.items())}})
        return 0
    report = extremal_set(args.q, args.d)
    verdict = verify_univariate_minimality(report.generators)
    _emit(manifest, {
        "q": report.q, "d": report.d, "m": report.m,
        "max_degree": report.max_degree,
        "degenerate": report.degenerate,
        "degrees_used": {str(k): v for k, v in sorted(report.degrees_used.items())},
        "generators": [poly_to_json(g.to_multipoly()) for g in report.generators],
        "minimal": verdict.minimal,
    })
    return 0


def _cmd_univariate_count(args) -> int:
    rows = []
    for k in range(1, args.max_degree + 1):
        rows.append({"k": k, "p_q": count_irreducibles(args.q, k),
                     "P_q": cumulative_count(args.q, k)})
    _emit(_manifest("univariate count",
                    {"q": args.q, "max_degree": args.max_degree}),
          {"q": args.q, "rows": rows})
    if sys.stderr.isatty():
        for r in rows:
            print(f"  k={r['k']:3d}  p_q={r['p_q']:10d}  P_q={r['P_q']:10d}",
                  file=sys.stderr)
    return 0


def _cmd_conjecture_probe(args) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    manifest = _manifest("conjecture probe", {
        "q": args.q, "d": args.d, "n": args.n, "seed": args.seed,
        "budget": budget, "attempts": args.attempts})
    if args.attempts is not None:
        stats = probe(args.q, args.d, args.n, seed=args.seed,
                      attempts=args.attempts, budget=budget)
        _emit(manifest, {"statistics": stats})
        return 0
    inst = build_conjecture_instance(args.q, args.d, args.n,
                                     seed=args.seed, budget=budget)
    _emit(manifest, {
        "params": {"q": inst.params.q, "d": inst.params.d, "n": inst.params.n,
                   "k": inst.params.k, "d_prime": inst.params.d_prime,
                   "target_size": inst.params.target_size},
        "extension": field_to_json(inst.extension),
        "points": [[element_to_json(c) for c in p.coords] for p in inst.points],
        "lifted_g": [poly_to_json(g) for g in inst.lifted_g],
        "descended_f": [poly_to_json(f) for f in inst.descended_f],
        "galois_ok": inst.galois_ok,
        "stats": inst.stats,
    })
    return 0


def _cmd_construct(args) -> int:
    ctx = parse_field(args.field)
    if args.family == "simplex":
        result = char0_simplex(args.n, args.d, ctx)
        params = {"n": args.n, "d": args.d}
    elif args.family == "qline":
        zeta = _parse_scalar(args.zeta, ctx)
        result = q_analog_line(args.d, zeta)
        params = {"d": args.d, "zeta": args.zeta}
    else:
        x = _parse_scalar(args.x, ctx)
        y = _parse_scalar(args.y, ctx)
        result = two_var_triangle(args.d, x, y)
        params = {"d": args.d, "x": args.x, "y": args.y}
    verdict = verify_certificate(result.certificate)
    if not verdict.valid:
        raise AssertionError(f"construction failed verification: {verdict.describe()}")
    _emit(_manifest(f"construct {args.family}",
                    {"field": field_to_json(ctx), **params}), {
        "family": result.family,
        "certificate": certificate_to_json(result.certificate),
        "factors": [[poly_to_json(f) for f in fs] for fs in result.factors],
    })
    return 0


def _cmd_oracle_gb(args) -> int:
    with open(args.gens) as fh:
        ctx, n, gens = gens_file_from_json(json.load(fh))
    gb = buchberger(gens)
    _emit(_manifest("oracle gb", {"gens": args.gens}), {
        "field": field_to_json(ctx), "n": n,
        "basis": [poly_to_json(g) for g in gb.basis],
    })
    return 0


def _cmd_oracle_member(args) -> int:
    with open(args.gens) as fh:
        ctx, n, gens = gens_file_from_json(json.load(fh))
    f = poly_from_json(ctx, n, args.f)
    gb = buchberger(gens)
    _emit(_manifest("oracle member", {"f": args.f, "gens": args.gens}),
          {"member": membership(f, gb)})
    return 0


# ---------------------------------------------------------------------------
# batch

_BATCH_COMMANDS = {}


def _batch_univariate_extremal(params):
    m, max_degree, _ = extremal_degrees(int(params["q"]), int(params["d"]))
    return {"m": m, "max_degree": max_degree}


def _batch_univariate_count(params):
    q, k = int(params["q"]), int(params["k"])
    return {"p_q": count_irreducibles(q, k), "P_q": cumulative_count(q, k)}


def _batch_conjecture_probe(params):
    return probe(int(params["q"]), int(params["d"]), int(params["n"]),
                 seed=int(params["seed"]), attempts=int(params["attempts"]),
                 budget=int(params.get("budget", DEFAULT_BUDGET)))


def _batch_certificate_search(params):
    ctx = parse_field(params["field"])
    n, d = int(params["n"]), int(params["d"])
    found = greedy_point_search(ctx, n, d, seed=int(params["seed"]),
                                budget=int(params.get("budget", DEFAULT_BUDGET)))
    cert = solve_certificate(found.points, d)
    verdict = verify_certificate(cert)
    return {"size": len(cert.points), "valid": verdict.valid,
            "random_trials": found.random_trials}


_BATCH_COMMANDS.update({
    "univariate-extremal": _batch_univariate_extremal,
    "univariate-count": _batch_univariate_count,
    "conjecture-probe": _batch_conjecture_probe,
    "certificate-search": _batch_certificate_search,
})


def _expand_grid(entry):
    params = dict(entry.get("params", {}))
    grid = entry.get("grid")
    if not grid:
        yield params
        return
    keys = sorted(grid)
    def values(spec):
        if isinstance(spec, list):
            return spec
        if isinstance(spec, dict) and "from" in spec and "to" in spec:
            return list(range(int(spec["from"]), int(spec["to"]) + 1))
        raise ValueError(f"bad grid spec {spec!r}")
    def rec(i, acc):
        if i == len(keys):
            yield dict(acc)
            return
        for v in values(grid[keys[i]]):
            acc[keys[i]] = v
            yield from rec(i + 1, acc)
    for cell in rec(0, dict(params)):
        yield cell


def _cmd_batch(args) -> int:
    with open(args.spec) as fh:
        spec = json.load(fh)
    rows = []
    idx = 0
    for entry in spec.get("cells", []):
        command = entry.get("command")
        handler = _BATCH_COMMANDS.get(command)
        for params in _expand_grid(entry):
            row = {"cell": idx, "command": command, "params": params}
            if handler is None:
                row["error"] = f"unknown batch command {command!r}"
            else:
                try:
                    row["result"] = handler(params)
                except Exception as exc:  # per-cell failure, batch continues
                    row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
            idx += 1
    _emit(_manifest("batch", {"spec": args.spec}), {"rows": rows})
    if sys.stderr.isatty():
        for row in rows:
            status = "error" if "error" in row else "ok"
            print(f"  cell {row['cell']:3d} {row['command']}: {status}",
                  file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="idealgen",
        description="Exact extremal generating sets of bounded-degree polynomial ideals")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu-bound", help="degree profile and telescoped generators")
    p.add_argument("--field", help="(informational; the gens file pins the field)")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gens", required=True, help="JSON generators file")
    p.add_argument("--working-degree", default="auto")
    p.set_defaults(func=_cmd_mu_bound)

    cert = sub.add_parser("certificate", help="dual certificates")
    certsub = cert.add_subparsers(dest="subcommand", required=True)
    p = certsub.add_parser("search")
    p.add_argument("--field", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--grid-size", type=int)
    p.set_defaults(func=_cmd_certificate_search)
    p = certsub.add_parser("verify")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certificate_verify)

    uni = sub.add_parser("univariate", help="irreducible counts and extremal sets")
    unisub = uni.add_subparsers(dest="subcommand", required=True)
    p = unisub.add_parser("extremal")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--light", action="store_true",
                   help="sizes only, skip building the generator products")
    p.set_defaults(func=_cmd_univariate_extremal)
    p = unisub.add_parser("count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=_cmd_univariate_count)

    conj = sub.add_parser("conjecture", help="Galois norm descent probes")
    conjsub = conj.add_subparsers(dest="subcommand", required=True)
    p = conjsub.add_parser("probe")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--attempts", type=int,
                   help="statistics mode: independent single-shot attempts")
    p.set_defaults(func=_cmd_conjecture_probe)

    cons = sub.add_parser("construct", help="explicit certificate families")
    conssub = cons.add_subparsers(dest="family", required=True)
    p = conssub.add_parser("simplex")
    p.add_argument("--field", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=_cmd_construct)
    p = conssub.add_parser("qline")
    p.add_argument("--field", required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--zeta", required=True)
    p.set_defaults(func=_cmd_construct)
    p = conssub.add_parser("triangle")
    p.add_argument("--field", required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=_cmd_construct)

    orc = sub.add_parser("oracle", help="Groebner ground truth (small instances)")
    orcsub = orc.add_subparsers(dest="subcommand", required=True)
    p = orcsub.add_parser("gb")
    p.add_argument("--gens", required=True)
    p.set_defaults(func=_cmd_oracle_gb)
    p = orcsub.add_parser("member")
    p.add_argument("--f", required=True, help="polynomial text")
    p.add_argument("--gens", required=True)
    p.set_defaults(func=_cmd_oracle_member)

    p = sub.add_parser("batch", help="run a grid of cells from a JSON spec")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_batch)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (FieldTooSmallError, OrderTooSmallError, PowerCollisionError,
            PolyParseError, FieldMismatchError, OracleCapError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
