"""Command-line front end for lattice-valued and scalar inclusion.

Sets files are JSON: ``{"universe": ["1", "2"], "sets": {"A": ["0.2", 1], ...}}``.
Partition files are JSON: ``{"blocks": [["1", "2"], ["3", "4"]]}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import relations as R
from .aggregation import aggregate_incl, load_partition
from .audit import engine
from .audit import report
from .lattice import CrispSet, format_grade, load_collection
from .scalar import eval_scalar, resolve_measure

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


def _emit(args, text_out: str, doc) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text_out + "\n")


def _grade(x, args) -> str:
    return format_grade(x, decimal=args.decimal)


def _load_pair(args):
    coll = load_collection(args.sets)
    return coll, coll.get(args.lhs), coll.get(args.rhs)


def cmd_compute(args) -> int:
    _, A, B = _load_pair(args)
    value = R.RELATIONS[args.relation](A, B)
    doc = {
        "relation": args.relation,
        "lhs": args.lhs,
        "rhs": args.rhs,
        "bits": R.to_bitstring(value),
        "value": R.to_bitlist(value),
    }
    _emit(args, doc["bits"], doc)
    return EXIT_OK


def cmd_scalar(args) -> int:
    _, A, B = _load_pair(args)
    m = resolve_measure(args.measure)
    v = eval_scalar(m, A, B)
    doc = {
        "measure": m,
        "lhs": args.lhs,
        "rhs": args.rhs,
        "value": _grade(v.value, args),
        "degenerate": v.degenerate,
        "clamped": v.clamped,
    }
    flags = "".join(f" ({f})" for f in ("degenerate", "clamped") if doc[f])
    _emit(args, doc["value"] + flags, doc)
    return EXIT_OK


def cmd_aggregate(args) -> int:
    coll, A, B = _load_pair(args)
    part = load_partition(args.partition, coll.universe)
    agg = aggregate_incl(A, B, part, args.measure)
    values = [_grade(v.value, args) for v in agg.values]
    doc = {
        "measure": agg.measure,
        "blocks": [list(b) for b in part.blocks],
        "value": values,
    }
    _emit(args, "[" + ", ".join(values) + "]", doc)
    return EXIT_OK


def cmd_between(args) -> int:
    coll = load_collection(args.sets)
    A, B, C = (coll.get(x) for x in args.names)
    doc = {
        "sets": list(args.names),
        "order_between": R.order_between(A, B, C),
        "metric_between": R.metric_between(A, B, C),
    }
    _emit(args, f"order_between={doc['order_between']} metric_between={doc['metric_between']}", doc)
    return EXIT_OK


def cmd_cut(args) -> int:
    coll, A, B = _load_pair(args)
    try:
        theta = CrispSet.from_bits(coll.universe, args.theta)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"--theta: {exc}") from exc
    holds = R.cut_leq(A, B, theta)
    doc = {"lhs": args.lhs, "rhs": args.rhs, "theta": str(theta), "incl": R.to_bitstring(R.incl(A, B)), "holds": holds}
    _emit(args, str(holds), doc)
    return EXIT_OK


def _config(args) -> engine.SearchConfig:
    return engine.SearchConfig(
        universe_size=args.n,
        grid_levels=args.g,
        mode=args.mode,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )


def _grid(args) -> int:
    grid = engine.scalar_axiom_grid(_config(args))
    fmt = args.format or "csv"
    if fmt == "csv":
        sys.stdout.write(report.grid_csv(grid))
    elif fmt == "json":
        sys.stdout.write(report.grid_json(grid, args.decimal))
    else:
        sys.stdout.write(report.grid_text(grid))
    return EXIT_REFUTED if any(r.theorem_refuted for r in grid.results()) else EXIT_OK


def cmd_grid(args) -> int:
    return _grid(args)


def cmd_audit(args) -> int:
    cfg = _config(args)
    if args.suite in ("scalar-grid", "scalar_grid"):
        return _grid(args)
    if args.suite == "transitivity":
        measures = [resolve_measure(args.measure)] if args.measure else list(range(1, 13))
        results = [engine.find_transitivity_counterexample(m, cfg) for m in measures]
    elif args.suite == "all":
        names = list(engine.SUITES)
        for name in names:
            engine.ensure_feasible(engine.SUITES[name], cfg)
        results = [r for name in names for r in engine.run_suite(name, cfg)]
    else:
        results = engine.run_suite(args.suite, cfg)
    if args.format == "json":
        sys.stdout.write(report.results_json(results, args.decimal))
    else:
        sys.stdout.write(report.results_text(results, args.decimal))
    return EXIT_REFUTED if any(r.theorem_refuted for r in results) else EXIT_OK


def _add_format(p, choices=("text", "json"), default="text"):
    p.add_argument("--format", choices=choices, default=default)
    p.add_argument("--decimal", action="store_true", help="print grades as rounded decimals (display only)")


def _add_search(p):
    p.add_argument("--n", type=int, default=3, help="universe size")
    p.add_argument("--g", type=int, default=4, help="grid levels: grades k/g")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfuzzy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="lattice-valued relation between two sets")
    p.add_argument("relation", choices=sorted(R.RELATIONS))
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--sets", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("scalar", help="scalar inclusion measure")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--sets", required=True)
    p.add_argument("--measure", required=True, help="1-12, m1-m12, kosko or kundu")
    _add_format(p)
    p.set_defaults(func=cmd_scalar)

    p = sub.add_parser("aggregate", help="scalar inclusion per partition block")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--sets", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--measure", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("between", help="order and metric betweenness of B between A and C")
    p.add_argument("names", nargs=3, metavar="SET")
    p.add_argument("--sets", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_between)

    p = sub.add_parser("cut", help="threshold order: incl(lhs, rhs) >= theta")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--sets", required=True)
    p.add_argument("--theta", required=True, help='bit string such as "1110"')
    _add_format(p)
    p.set_defaults(func=cmd_cut)

    suites = sorted(engine.SUITES) + sorted(engine.SUITE_ALIASES) + ["all", "scalar-grid", "transitivity"]
    p = sub.add_parser("audit", help="verify a property suite on a finite grid")
    p.add_argument("suite", choices=suites, metavar="SUITE", help=", ".join(suites))
    p.add_argument("--measure", help="restrict the transitivity search to one measure")
    _add_search(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default=None)
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("grid", help="scalar measures against the inclusion axioms")
    _add_search(p)
    p.add_argument("--format", choices=("csv", "text", "json"), default="csv")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_grid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "audit" and args.format == "csv" and args.suite not in ("scalar-grid", "scalar_grid"):
        parser.error("--format csv is only available for scalar-grid")
    try:
        return args.func(args)
    except engine.SearchTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
