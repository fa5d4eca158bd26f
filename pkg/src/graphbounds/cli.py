"""Command-line front end.

Exit codes: 0 success, 1 verification violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence, TextIO

from . import bounds as B
from .families import FamilyError, FamilySpec, enumerate_nonisomorphic, make_family
from .graph import GraphError
from .graph6 import HEADER, encode_graph6, parse_graph6
from .report import build_report, format_report_table
from .search import Constraint, InfeasibleSearch, search
from .verify import verify_up_to

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _emit(report, fmt: str, out: TextIO) -> None:
    if fmt == "table":
        out.write(format_report_table(report) + "\n")
    else:
        out.write(report.to_json() + "\n")


def cmd_report(args, out: TextIO, err: TextIO) -> int:
    try:
        chosen = B.parse_bound_list(args.bounds)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    name = args.input or "-"
    stream = sys.stdin.buffer if name == "-" else open(name, "rb")
    status = EXIT_OK
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line == HEADER:
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                err.write(f"{name}:{lineno}: {exc}\n")
                status = EXIT_USAGE
                continue
            _emit(build_report(g, f"{name}:{lineno}", chosen), args.format, out)
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()
    return status


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    if not 1 <= args.max_n <= 8:
        err.write(f"error: --max-n must be between 1 and 8, got {args.max_n}\n")
        return EXIT_USAGE
    try:
        chosen = B.parse_bound_list(args.bounds)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    started = time.perf_counter()
    summary = verify_up_to(
        args.max_n,
        chosen,
        known_exceptions=args.known_exceptions,
        stop_on_violation=not args.keep_going,
        mohar_all_subsets_max_n=args.mohar_all_subsets,
        jobs=args.jobs,
    )
    elapsed = time.perf_counter() - started
    if args.format == "table":
        out.write(f"graphs checked: {summary.graphs_checked} (n <= {args.max_n}) in {elapsed:.1f}s\n")
        out.write(f"{'bound':<14}{'checked':>9}{'tight':>8}{'strict':>9}{'n/a':>8}\n")
        for b in chosen:
            t = summary.tallies.get(b)
            if t:
                out.write(f"{b:<14}{t.checked:>9}{t.tight:>8}{t.strict:>9}{t.inapplicable:>8}\n")
        for x in summary.known_exceptions:
            out.write(f"known exception  {x.bound_id:<12} {x.graph6}  {x.message}\n")
        for key, codes in summary.observations.items():
            out.write(f"observation {key}: {len(codes)} graph(s)\n")
    else:
        payload = summary.to_dict()
        payload["seconds"] = round(elapsed, 3)
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    for x in summary.violations:
        err.write(f"VIOLATION {x.kind} {x.bound_id} {x.graph6}: {x.message}\n")
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_family(args, out: TextIO, err: TextIO) -> int:
    try:
        spec = FamilySpec.parse(" ".join(args.spec))
        g = make_family(spec)
        chosen = B.parse_bound_list(args.bounds)
    except (FamilyError, GraphError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.write(encode_graph6(g).decode() + "\n")
    _emit(build_report(g, str(spec), chosen), args.format, out)
    return EXIT_OK


def cmd_search(args, out: TextIO, err: TextIO) -> int:
    constraint = Constraint("gamma", args.gamma) if args.constraint == "gamma" else Constraint("girth5")
    try:
        result = search(args.n, args.objective, constraint, restarts=args.restarts,
                        steps=args.budget, seed=args.seed)
    except InfeasibleSearch as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    source = f"search:n={args.n}:{args.objective}:{constraint}:seed={args.seed}"
    _emit(build_report(result.graph, source), args.format, out)
    return EXIT_OK


def cmd_enumerate(args, out: TextIO, err: TextIO) -> int:
    try:
        graphs = list(enumerate_nonisomorphic(args.n))
    except GraphError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if args.header:
        out.write(HEADER.decode() + "\n")
    for g in graphs:
        out.write(encode_graph6(g).decode() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphbounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bounds=True):
        p.add_argument("--format", choices=("json", "table"), default="json")
        if bounds:
            p.add_argument("--bounds", default="all", help="comma list of bound ids or 'all'")

    p = sub.add_parser("report", help="report on graph6 lines from a file or stdin")
    p.add_argument("input", nargs="?", help="graph6 file ('-' or omitted for stdin)")
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="check every bound on all graphs up to --max-n")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--mohar-all-subsets", type=int, default=6, metavar="N",
                   help="test Mohar on every subset for n <= N, on minimum dominating sets above")
    p.add_argument("--known-exceptions", action="store_true",
                   help="tally theorem2/theorem3 failures on edgeless graphs separately instead of failing")
    p.add_argument("--keep-going", action="store_true", help="do not stop at the first violating graph")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="build a named graph, e.g. 'moore 7' or 'star 5'")
    p.add_argument("spec", nargs="+")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="local search for extremal graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", choices=("max-mu", "min-lambda-max"), default="max-mu")
    p.add_argument("--constraint", choices=("girth5", "gamma"), default="girth5")
    p.add_argument("--gamma", type=int, help="domination number for --constraint gamma")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=2000, help="toggle steps per restart")
    p.add_argument("--restarts", type=int, default=4)
    common(p, bounds=False)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", help="write one graph6 line per isomorphism class of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--header", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
