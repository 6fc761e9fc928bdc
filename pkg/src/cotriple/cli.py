"""Command line interface: property suite runs and one-off computations.

Exit codes: 0 all checks passed, 1 at least one failure, 2 configuration
error, 3 unknown verdicts present with --strict-unknown.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (AlgebraLoadError, ConfigError, ContractViolation,
                     TripleConstructionError, UnknownModuleName)
from .registry import build_registry, lookup
from .report import build_report, dump_report, environment_block
from .suites import (CHECK_IDS, SuiteConfig, load_algebra, load_triple,
                     run_suite)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_UNKNOWN = 3


def _add_common(parser):
    parser.add_argument("--algebra", default="builtin:A1",
                        help="builtin:<A1|A2|A3> or a path to a JSON algebra spec")
    parser.add_argument("--triple", default="gorenstein",
                        help="trivial, gorenstein, or a path to a JSON triple spec")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--bound", type=int, default=10,
                        help="search bound for homological dimensions")
    parser.add_argument("--imax", type=int, default=4,
                        help="highest Ext degree exercised")
    parser.add_argument("--out", default=None, help="write the JSON report here")
    parser.add_argument("--no-timestamps", action="store_true",
                        help="drop timestamps and timings for byte-identical reruns")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ctl",
        description="Exact-arithmetic verification of cotorsion-triple "
                    "constructions over finite-dimensional algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="run property suites and emit a report")
    _add_common(runp)
    runp.add_argument("--suite", default="all",
                      help="comma-separated check ids, or 'all' "
                           f"(known: {', '.join(CHECK_IDS)})")
    runp.add_argument("--jobs", type=int, default=1,
                      help="number of checks to run concurrently")
    runp.add_argument("--strict-unknown", action="store_true",
                      help="exit 3 when any check reports unknown")

    comp = sub.add_parser("compute", help="one-off computations")
    _add_common(comp)
    comp.add_argument("what", choices=["ext-table", "z-pd", "z-id",
                                       "ho-hom", "stable-eq"])
    comp.add_argument("modules", nargs="+",
                      help="registry module names (see list-modules)")

    lst = sub.add_parser("list-modules", help="list the registry of a testbed")
    _add_common(lst)
    return ap


def _compute(args) -> dict:
    algebra = load_algebra(args.algebra)
    triple = load_triple(algebra, args.triple, bound=args.bound)
    registry = build_registry(algebra)
    names = args.modules
    want_two = args.what in ("ext-table", "ho-hom", "stable-eq")
    if want_two and len(names) != 2:
        raise ConfigError(f"{args.what} takes exactly two module names")
    if not want_two and len(names) != 1:
        raise ConfigError(f"{args.what} takes exactly one module name")
    mods = [lookup(registry, nm) for nm in names]

    if args.what == "ext-table":
        from .relhom import ext_xy
        table = ext_xy(triple, mods[0], mods[1], args.imax).to_dict()
        record = {"check": "compute:ext-table", "anchor": "Def 4.3",
                  "status": "pass", "details": table}
    elif args.what in ("z-pd", "z-id"):
        from .relhom import z_pd, z_id, _dim_str
        fn = z_pd if args.what == "z-pd" else z_id
        val = fn(triple, mods[0], args.bound, registry=registry)
        record = {"check": f"compute:{args.what}", "anchor": "Thm 4.6/4.7",
                  "status": "pass",
                  "details": {"module": mods[0].name, "value": _dim_str(val)}}
    elif args.what == "ho-hom":
        from .homotopy import ho_hom
        r = ho_hom(triple, mods[0], mods[1])
        details = {k: r[k] for k in ("dim", "dim_via_injective_formula",
                                     "dim_via_projective_formula")}
        details["pair"] = [mods[0].name, mods[1].name]
        record = {"check": "compute:ho-hom", "anchor": "Prop 3.3",
                  "status": "pass", "details": details}
    else:
        from .homotopy import stable_equivalent
        r = stable_equivalent(triple, mods[0], mods[1], seed=args.seed)
        details = {"pair": [mods[0].name, mods[1].name],
                   "verdict": r["verdict"], "side": r["side"],
                   "complete_search": r["complete_search"],
                   "classes_searched": r["classes_searched"]}
        status = "pass" if r["verdict"] != "unknown" else "unknown"
        record = {"check": "compute:stable-eq", "anchor": "Prop 3.4",
                  "status": status, "details": details}

    return build_report("compute", environment_block(algebra, triple, args.seed),
                        [record], timestamps=not args.no_timestamps,
                        timings=False)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-modules":
            algebra = load_algebra(args.algebra)
            registry = build_registry(algebra)
            for name, mod in registry.items():
                print(f"{name}\tdim {mod.dim}")
            return EXIT_OK
        if args.command == "compute":
            report = _compute(args)
        else:
            suite = tuple(s for s in args.suite.replace(",", " ").split() if s)
            config = SuiteConfig(
                algebra=args.algebra, triple=args.triple, seed=args.seed,
                bound=args.bound, imax=args.imax, suite=suite, jobs=args.jobs,
                timestamps=not args.no_timestamps)
            report = run_suite(config)
    except (ConfigError, AlgebraLoadError, TripleConstructionError,
            UnknownModuleName, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    text = dump_report(report, args.out)
    if args.out:
        summary = report["summary"]
        print(f"{summary['pass']} pass, {summary['fail']} fail, "
              f"{summary['unknown']} unknown -> {args.out}")
    else:
        sys.stdout.write(text)
    if report["summary"]["fail"]:
        return EXIT_FAIL
    if report["summary"]["unknown"] and getattr(args, "strict_unknown", False):
        return EXIT_UNKNOWN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
