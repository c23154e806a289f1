"""Command-line front end.

Subcommands: paths, reg, nu3, verify, search. Exit codes are a stable
contract: 0 success, 1 verification failure, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .betti import CAP_ENV_VAR, DEFAULT_CAP, FieldSpec, betti_hochster
from .errors import CapacityError, InputError, PathIdealsError
from .graphs import Graph, load_graph
from .harness import (
    BatchSpec,
    WHICH_CHOICES,
    classify_defects,
    reports_to_csv,
    reports_to_jsonl,
    run_batch,
    verify_graph,
    write_exemplars,
)
from .ideals import path_ideal
from .matching import nu3

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise InputError(f"bad range {text!r} (use A..B)") from exc


def _path_token(graph: Graph, path) -> str:
    return "-".join(graph.vertex_token(v) for v in path)


def cmd_paths(args) -> int:
    graph = load_graph(args.input)
    paths = graph.t_paths(args.t)
    ideal = path_ideal(graph, args.t)
    if args.format == "json":
        obj = {
            "t": args.t,
            "paths": [list(p) for p in paths],
            "generators": len(ideal.gens),
        }
        print(json.dumps(obj, sort_keys=True))
    else:
        for p in paths:
            print(_path_token(graph, p))
        print(f"{len(paths)} path(s) on {args.t} vertices; {len(ideal.gens)} ideal generator(s)")
    return EXIT_OK


def cmd_reg(args) -> int:
    graph = load_graph(args.input)
    field_ = FieldSpec.parse(args.field)
    table = betti_hochster(path_ideal(graph, 3), field_, cap=args.cap)
    if args.format == "json":
        print(json.dumps(table.to_json_obj(field_), sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(table.csv_text())
    else:
        print(table.pretty())
        print(f"reg(R/I3) = {table.regularity()}    pd = {table.projective_dimension()}")
    return EXIT_OK


def cmd_nu3(args) -> int:
    graph = load_graph(args.input)
    value, cert = nu3(graph)
    if args.format == "json":
        print(json.dumps(cert.to_json_obj(), sort_keys=True))
    else:
        print(f"nu3 = {value}")
        for p in cert.paths:
            print("  " + _path_token(graph, p))
    return EXIT_OK


def _emit_reports(reports, args) -> int:
    text = reports_to_csv(reports) if args.format == "csv" else reports_to_jsonl(reports)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in reports if not r.passed]
    errored = [r for r in reports if r.error is not None]
    for r in errored:
        print(f"error: {r.source}: {r.error}", file=sys.stderr)
    if failed:
        print(f"{len(failed)} of {len(reports)} checks failed", file=sys.stderr)
    if failed or errored:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    field_ = FieldSpec.parse(args.field)
    if (args.input is None) == (args.family is None):
        raise InputError("give exactly one input: a graph file or --family")
    if args.input is not None:
        graph = load_graph(args.input)
        reports = verify_graph(graph, args.which, field_, args.cap, source=args.input)
        return _emit_reports(reports, args)
    n_lo, n_hi = _parse_range(args.n)
    which = args.which if args.which != "all" else "family"
    spec = BatchSpec(
        family=args.family,
        n_lo=n_lo,
        n_hi=n_hi,
        count=args.count,
        seed=args.seed,
        field_=field_,
        which=which,
        cap=args.cap,
    )
    reports = run_batch(spec, jobs=args.jobs)
    return _emit_reports(reports, args)


def cmd_search(args) -> int:
    field_ = FieldSpec.parse(args.field)
    n_lo, n_hi = _parse_range(args.n)
    spec = BatchSpec(
        family=args.family,
        n_lo=n_lo,
        n_hi=n_hi,
        count=args.count,
        seed=args.seed,
        field_=field_,
        cap=args.cap,
    )
    summary = classify_defects(spec, jobs=args.jobs)
    os.makedirs(args.out, exist_ok=True)
    batch_header = {
        "family": args.family,
        "n": f"{n_lo}..{n_hi}",
        "count": args.count,
        "seed": args.seed,
        "field": field_.token,
    }
    with open(os.path.join(args.out, "batch.json"), "w", encoding="utf-8") as fh:
        fh.write(json.dumps(batch_header, sort_keys=True) + "\n")
    histogram_path = os.path.join(args.out, "histogram.csv")
    with open(histogram_path, "w", encoding="utf-8") as fh:
        fh.write(summary.histogram_csv())
    reports_path = os.path.join(args.out, "reports.jsonl")
    with open(reports_path, "w", encoding="utf-8") as fh:
        fh.write(reports_to_jsonl(summary.reports))
    write_exemplars(summary, args.out)
    sys.stdout.write(summary.histogram_csv())
    errored = [r for r in summary.reports if r.error is not None]
    for r in errored:
        print(f"error: {r.source}: {r.error}", file=sys.stderr)
    failed = [r for r in summary.reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(summary.reports)} checks failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathideals",
        description="Exact 3-path ideal invariants of graphs: regularity, Betti tables, nu3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_field=True):
        if with_field:
            p.add_argument("--field", default="gf2", help="coefficient field: q, gf2, gf3, ... (default gf2)")
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help=f"override the exhaustive-enumeration vertex cap (default {DEFAULT_CAP}, env {CAP_ENV_VAR})",
        )

    p_paths = sub.add_parser("paths", help="enumerate t-vertex paths and ideal generators")
    p_paths.add_argument("input", help="graph file (edge list or JSON)")
    p_paths.add_argument("--t", type=int, default=3, choices=(2, 3))
    p_paths.add_argument("--format", default="text", choices=("text", "json"))
    p_paths.set_defaults(func=cmd_paths)

    p_reg = sub.add_parser("reg", help="regularity and Betti table of R/I3")
    p_reg.add_argument("input")
    p_reg.add_argument("--format", default="text", choices=("text", "json", "csv"))
    add_common(p_reg)
    p_reg.set_defaults(func=cmd_reg)

    p_nu3 = sub.add_parser("nu3", help="3-path induced matching number with certificate")
    p_nu3.add_argument("input")
    p_nu3.add_argument("--format", default="text", choices=("text", "json"))
    p_nu3.set_defaults(func=cmd_nu3)

    p_verify = sub.add_parser("verify", help="run the bound/identity checks")
    p_verify.add_argument("input", nargs="?", default=None, help="graph file; omit when using --family")
    p_verify.add_argument("--which", default="all", choices=WHICH_CHOICES)
    p_verify.add_argument("--family", default=None, choices=("tree", "unicyclic", "random"))
    p_verify.add_argument("--n", default="4..10", help="vertex range A..B for --family")
    p_verify.add_argument("--count", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", default="jsonl", choices=("jsonl", "csv"))
    p_verify.add_argument("--output", default=None, help="write the report here instead of stdout")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="defect histogram over a random family")
    p_search.add_argument("--family", required=True, choices=("tree", "unicyclic", "random"))
    p_search.add_argument("--n", required=True, help="vertex range A..B")
    p_search.add_argument("--count", type=int, default=100)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--jobs", type=int, default=1)
    p_search.add_argument("--out", default="search-out", help="output directory")
    add_common(p_search)
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is None and hasattr(args, "cap"):
            args.cap = _default_cap()
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PathIdealsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
