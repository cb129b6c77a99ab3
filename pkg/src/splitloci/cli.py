"""Command-line front end.

Exit codes: 0 success, 1 domain error (or a failing check), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brill_noether import BNContext, maximal_strata_bruteforce, rho, rho_k, wrd_decomposition
from .degeneration_lab import nullity_case_table
from .errors import SplitLociError
from .splitting_core import parse_type
from .strat_poset import SCHEMA, build_poset, export_dot, poset_to_json
from .theta_calc import dual_class, extreme_summand_class, stored_class, STORED_CLASSES

VALUE_CAP = 10**6


def _capped_int(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if abs(val) > VALUE_CAP:
        raise argparse.ArgumentTypeError(f"|{val}| exceeds {VALUE_CAP}")
    return val


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]
    fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])] + [fmt(r) for r in cells]
    return "\n".join(lines) + "\n"


def _json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2) + "\n"


def _ctx(args) -> BNContext:
    return BNContext(args.g, args.k, args.d)


def _dim_text(dim) -> str:
    return "empty" if dim is None else str(dim)


def cmd_strata_enumerate(args) -> str:
    p = build_poset(_ctx(args), args.include_empty, args.node_cap)
    g = p.ctx.g
    if args.format == "json":
        data = poset_to_json(p)
        return _json({"g": g, "k": p.ctx.k, "d": p.ctx.d, "strata": data["nodes"]})
    rows = [[str(e), cod, _dim_text(g - cod if cod <= g else None)] for e, cod in p.nodes]
    return _table(["type", "u", "dim"], rows)


def cmd_strata_poset(args) -> str:
    p = build_poset(_ctx(args), args.include_empty, args.node_cap)
    if args.format == "dot":
        return export_dot(p)
    if args.format == "json":
        return json.dumps(poset_to_json(p), sort_keys=True, indent=2) + "\n"
    rows = [[str(lo), str(hi)] for lo, hi in p.cover_pairs()]
    return _table(["lower", "upper"], rows)


def cmd_bn_wrd(args) -> str:
    ctx = _ctx(args)
    reports = wrd_decomposition(ctx, args.r, include_nonmaximal=args.all)
    check = None
    if args.check and not reports[0].whole_picard:
        predicted = sorted(rep.stratum for rep in reports if rep.maximal)
        found = maximal_strata_bruteforce(ctx.k, ctx.d_prime, args.r, args.window)
        check = predicted == found
    if args.format == "json":
        payload = {"g": ctx.g, "k": ctx.k, "d": ctx.d, "r": args.r, "strata": [rep.to_json() for rep in reports]}
        if check is not None:
            payload["bruteforce_agrees"] = check
        return _json(payload)
    rows = [
        ["-" if rep.ell is None else rep.ell, str(rep.stratum), rep.codim, _dim_text(rep.dim), "yes" if rep.maximal else "no"]
        for rep in reports
    ]
    out = _table(["ell", "type", "u", "dim", "maximal"], rows)
    if reports[0].whole_picard:
        out += "W^r_d is all of Pic^d\n"
    if check is not None:
        out += f"brute-force maximal types agree: {'yes' if check else 'NO'}\n"
    return out


def cmd_bn_rhok(args) -> str:
    ctx = _ctx(args)
    val = rho_k(ctx, args.r)
    classical = rho(ctx.g, args.r, ctx.d)
    if args.format == "json":
        return _json({"g": ctx.g, "k": ctx.k, "d": ctx.d, "r": args.r, "rho": classical, "rho_k": val})
    return _table(["g", "k", "d", "r", "rho", "rho_k"], [[ctx.g, ctx.k, ctx.d, args.r, classical, val]])


def cmd_classes(args) -> str:
    if args.type is not None:
        e = parse_type(args.type)
        if (args.g, e.parts) in STORED_CLASSES:
            res = stored_class(e, args.g)
        else:
            res = dual_class(e, args.g)
    else:
        missing = [f for f in ("k", "degree", "n") if getattr(args, f) is None]
        if missing:
            raise SplitLociError("classes needs --type or all of --k --degree --n")
        res = extreme_summand_class(args.k, args.degree, args.n, args.g)
    if args.format == "json":
        return _json(res.to_json())
    line = f"{res.stratum}: {res.format()}"
    if res.point_count is not None:
        line += f"  ({res.point_count} points)"
    return line + "\n"


def cmd_degen_verify(args) -> str:
    rows = nullity_case_table(args.kmax)
    failed = [r for r in rows if not r["pass"]]
    args._failed = bool(failed)
    if args.format == "json":
        return _json({"kmax": args.kmax, "cases": rows, "all_pass": not failed})
    table_rows = [
        [r["k"], r["a"], r["case"] + ("(" + ",".join(map(str, r["special"])) + ")" if r["special"] else ""),
         r["dim_Wp"], r["dim_Wq"], r["dim_WpWq"], r["diag_rank"], r["kernel_dim"], "PASS" if r["pass"] else "FAIL"]
        for r in rows
    ]
    out = _table(["k", "a", "case", "dim Wp", "dim Wq", "dim Wp∩Wq", "diag rank", "ker", "result"], table_rows)
    return out + f"{len(rows) - len(failed)}/{len(rows)} cases pass\n"


def cmd_fixtures(args) -> str:
    from .fixtures import run_fixtures

    results = run_fixtures()
    args._failed = not all(ok for _, ok, _ in results)
    if args.format == "json":
        return _json({"fixtures": [{"name": n, "pass": ok, "note": note} for n, ok, note in results]})
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{note}]" if note else "") for name, ok, note in results]
    passed = sum(ok for _, ok, _ in results)
    lines.append(f"{passed}/{len(results)} fixtures pass")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitloci", description="Splitting-type stratifications of Picard varieties of k-gonal curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")

    def gkd(p):
        p.add_argument("--g", type=_capped_int, required=True)
        p.add_argument("--k", type=_capped_int, required=True)
        p.add_argument("--d", type=_capped_int, required=True)

    for name, fn, formats in [
        ("strata-enumerate", cmd_strata_enumerate, ["table", "json"]),
        ("strata-poset", cmd_strata_poset, ["dot", "json", "table"]),
    ]:
        p = sub.add_parser(name)
        gkd(p)
        p.add_argument("--include-empty", type=_capped_int, default=0, metavar="EXTRA",
                       help="also keep types with g < u <= g + EXTRA")
        p.add_argument("--node-cap", type=_capped_int, default=None, help="overrides SPLITLOCI_NODE_CAP")
        common(p, formats, formats[0])
        p.set_defaults(func=fn)

    p = sub.add_parser("bn-wrd")
    gkd(p)
    p.add_argument("--r", type=_capped_int, required=True)
    p.add_argument("--all", action="store_true", help="also list dominated 'balanced plus balanced' types")
    p.add_argument("--check", action="store_true", help="compare with the brute-force maximality oracle")
    p.add_argument("--window", type=_capped_int, default=None, help="part bound for --check")
    common(p, ["table", "json"], "table")
    p.set_defaults(func=cmd_bn_wrd)

    p = sub.add_parser("bn-rhok")
    gkd(p)
    p.add_argument("--r", type=_capped_int, required=True)
    common(p, ["table", "json"], "table")
    p.set_defaults(func=cmd_bn_rhok)

    p = sub.add_parser("classes")
    p.add_argument("--k", type=_capped_int)
    p.add_argument("--degree", type=_capped_int, help="total degree of the splitting type")
    p.add_argument("--n", type=_capped_int)
    p.add_argument("--g", type=_capped_int, required=True)
    p.add_argument("--type", default=None, help="splitting type, e.g. --type=-2,-2,1")
    common(p, ["table", "json"], "table")
    p.set_defaults(func=cmd_classes)

    for name in ("degen-verify", "degen"):
        p = sub.add_parser(name)
        if name == "degen":
            p.add_argument("action", choices=["verify"])
        p.add_argument("--kmax", type=_capped_int, default=8)
        common(p, ["table", "json"], "table")
        p.set_defaults(func=cmd_degen_verify)

    p = sub.add_parser("fixtures")
    common(p, ["table", "json"], "table")
    p.set_defaults(func=cmd_fixtures)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._failed = False
    try:
        text = args.func(args)
    except SplitLociError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 1 if args._failed else 0


def main() -> None:
    sys.exit(run())
