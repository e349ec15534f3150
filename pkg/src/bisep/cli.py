"""Command-line front end.

Subcommands: check, catalog list|emit, search, verify-paper.  Reports
are deterministic JSON (timings removable with --no-timing).  Exit
codes: 0 success, 1 suite/expectation failure, 2 input error, 3 budget
exhausted with --strict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from . import deciders as dec
from . import search as searchmod
from . import serialize as ser
from . import verify as verifymod
from .algebra import AlgebraError
from .fields import ExtField, PrimeField, QQ
from .modules import Bimodule, Extension, ModuleError


class InputError(Exception):
    pass


def _fail_input(kind, detail):
    print(json.dumps({"error": kind, "detail": str(detail)}, sort_keys=True))
    return 2


def _default_budget():
    raw = os.environ.get("BISEP_BUDGET")
    if raw is None:
        return dec.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError("BISEP_BUDGET must be an integer, got %r" % raw)


def _parse_field(text):
    t = text.lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("f"):
        try:
            n = int(t[1:])
        except ValueError:
            raise InputError("bad field spec %r" % text)
        if n < 2:
            raise InputError("bad field spec %r" % text)
        for p in range(2, n + 1):
            if n % p == 0:
                k = 0
                m = n
                while m % p == 0:
                    m //= p
                    k += 1
                if m != 1:
                    raise InputError("field size %d is not a prime power" % n)
                return PrimeField(p) if k == 1 else ExtField(p, k)
    raise InputError("bad field spec %r (use q, f2, f3, f4, ...)" % text)


def _parse_param(text):
    if "=" not in text:
        raise InputError("catalog params look like key=value, got %r" % text)
    key, raw = text.split("=", 1)
    if "," in raw:
        try:
            return key, tuple(int(x) for x in raw.split(","))
        except ValueError:
            raise InputError("bad tuple value in %r" % text)
    try:
        return key, int(raw)
    except ValueError:
        return key, raw


def _load_subject(args):
    if bool(args.input) == bool(args.catalog):
        raise InputError("give exactly one of --input or --catalog")
    if args.input:
        return ser.load_subject(args.input)
    params = dict(_parse_param(p) for p in args.param or [])
    return cat.build(args.catalog, **params)


def _emit(obj, args):
    if getattr(args, "format", "json") == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        _emit_text(obj)


def _emit_text(report):
    if "properties" in report:
        dims = [k for k in ("dim_T", "dim_R", "dim_S", "dim_M") if k in report]
        print("%s  %s" % (report["subject"],
                          "  ".join("%s=%d" % (k, report[k]) for k in dims)))
        for p in sorted(report["properties"]):
            entry = report["properties"][p]
            line = "  %-22s %s" % (p, entry["verdict"])
            if "ms" in entry:
                line += "  (%d ms)" % entry["ms"]
            print(line)
        for v in report["implication_violations"]:
            print("  VIOLATED: %s" % v)
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


def cmd_check(args):
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        subject = _load_subject(args)
    except (ser.SerializationError, AlgebraError, ModuleError, OSError,
            json.JSONDecodeError, cat.UnknownEntry, cat.BadParams) as exc:
        return _fail_input(type(exc).__name__, exc)
    props = args.props.split(",") if args.props else None
    try:
        if isinstance(subject, Extension):
            report = dec.property_report(
                subject, props, budget, witnesses=args.witnesses,
                timing=not args.no_timing)
        elif isinstance(subject, Bimodule):
            report = dec.bimodule_report(
                subject, props, budget, witnesses=args.witnesses,
                timing=not args.no_timing)
        else:
            return _fail_input("UnknownSubject", "unsupported subject type")
    except ValueError as exc:
        return _fail_input("BadProperty", exc)
    _emit(report, args)
    unknowns = [
        p for p, e in report["properties"].items() if e["verdict"] == dec.UNKNOWN
    ]
    if args.strict and unknowns:
        return 3
    return 0


def cmd_catalog(args):
    if args.action == "list":
        rows = []
        for name in cat.names():
            entry = cat.get(name)
            rows.append({
                "name": name,
                "kind": entry.kind,
                "anchor": entry.anchor,
                "defaults": {k: list(v) if isinstance(v, tuple) else v
                             for k, v in sorted(entry.defaults.items())},
                "description": entry.description,
            })
        if args.format == "json":
            print(json.dumps(rows, indent=2, sort_keys=True))
        else:
            for row in rows:
                print("%-26s %-10s %s" % (row["name"], row["kind"], row["anchor"]))
                print("    %s" % row["description"])
        return 0
    # emit
    if not args.name:
        return _fail_input("MissingName", "catalog emit needs an entry name")
    try:
        params = dict(_parse_param(p) for p in args.param or [])
        entry = cat.get(args.name)
        obj = entry.build(**params)
    except (cat.UnknownEntry, cat.BadParams, InputError, AlgebraError,
            ModuleError, TypeError) as exc:
        return _fail_input(type(exc).__name__, exc)
    if entry.kind == "extension":
        print(json.dumps(ser.extension_to_json(obj), indent=2, sort_keys=True))
    else:
        print(json.dumps(ser.bimodule_to_json(obj), indent=2, sort_keys=True))
    return 0


def cmd_search(args):
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        field = _parse_field(args.field)
        mode = {"enumerate": "enumerate_subalgebras",
                "random": "random_structure"}[args.mode]
        config = searchmod.SearchConfig(
            field,
            max_dim_r=args.max_dim_r,
            max_dim_s=args.max_dim_s,
            mode=mode,
            filter_props=args.filter.split(","),
            expect=args.expect,
            seed=args.seed,
            budget=budget,
            jobs=args.jobs,
            random_trials=args.random_trials,
        )
    except (InputError, ValueError, KeyError) as exc:
        return _fail_input(type(exc).__name__, exc)
    report = searchmod.run_search(config)
    if args.no_timing:
        report.pop("wall_ms", None)
    if args.plots:
        from . import plots

        report["plots"] = plots.render_search(report, args.plots)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("candidates   %d" % report["candidates"])
        print("filter hits  %d" % report["filter_hits"])
        print("unknowns     %d" % report["unknowns"])
        print("violations   %d" % len(report["violations"]))
        for v in report["violations"]:
            print("  %s" % v["label"])
    if args.strict and (report["budget_exhausted"] or report["unknowns"]):
        return 3
    if report["violations"]:
        return 1
    return 0


def cmd_verify_paper(args):
    results = []

    def progress(r):
        if not args.json:
            print("%s  %-40s %6d ms  %s" % (
                "PASS" if r["pass"] else "FAIL", r["name"], r["ms"], r["detail"]))
            sys.stdout.flush()

    results = verifymod.run_all(progress=progress)
    ok = all(r["pass"] for r in results)
    if args.plots:
        from . import plots

        plots.render_verify(results, args.plots)
    if args.json:
        print(json.dumps({"pass": ok, "results": results}, indent=2, sort_keys=True))
    else:
        print("%d/%d criteria passed" % (sum(r["pass"] for r in results), len(results)))
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="bisep",
        description="Decide separability, splitness and Frobenius-type "
                    "properties of finite-dimensional ring extensions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=None,
                       help="state budget (default: BISEP_BUDGET or 10^6)")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--no-timing", action="store_true",
                       help="omit timings for byte-identical reports")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 when the budget forces an unknown")

    pc = sub.add_parser("check", help="decide properties of one extension/bimodule")
    pc.add_argument("--input", help="path to an extension/bimodule JSON file")
    pc.add_argument("--catalog", help="catalog entry name")
    pc.add_argument("--param", action="append",
                    help="catalog parameter key=value (repeatable)")
    pc.add_argument("--props", help="comma-separated property list")
    pc.add_argument("--witnesses", action="store_true")
    common(pc)
    pc.set_defaults(func=cmd_check)

    pg = sub.add_parser("catalog", help="list catalog entries or emit one as JSON")
    pg.add_argument("action", choices=["list", "emit"])
    pg.add_argument("name", nargs="?")
    pg.add_argument("--param", action="append")
    pg.add_argument("--format", choices=["json", "text"], default="text")
    pg.set_defaults(func=cmd_catalog)

    ps = sub.add_parser("search", help="counterexample search over small extensions")
    ps.add_argument("--field", default="f2", help="q, f2, f3, f4, ...")
    ps.add_argument("--max-dim-r", type=int, default=4)
    ps.add_argument("--max-dim-s", type=int, default=None)
    ps.add_argument("--mode", choices=["enumerate", "random"], default="enumerate")
    ps.add_argument("--filter", default="biseparable",
                    help="comma-separated property conjunction")
    ps.add_argument("--expect", default="frobenius")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--random-trials", type=int, default=200)
    ps.add_argument("--plots", metavar="DIR",
                    help="write matplotlib summary figures into DIR")
    common(ps)
    ps.set_defaults(func=cmd_search)

    pv = sub.add_parser("verify-paper", help="run the full verification suite")
    pv.add_argument("--json", action="store_true")
    pv.add_argument("--plots", metavar="DIR",
                    help="write matplotlib summary figures into DIR")
    pv.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail_input("InputError", exc)


if __name__ == "__main__":
    sys.exit(main())
