"""Command-line interface.

Exit codes: 0 success, 1 validation failure (bad input, capacity, a bound
violation), 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import bound
from .enumeration import EnumAlgorithm, count_mis, enumerate_mis
from .errors import BoundViolation, MisboundError
from .formats import encode_graph6, format_edge_list, read_graphs
from .graph import Graph, bits, complete_graph, cycle_graph, empty_graph, moon_moser, path_graph
from .verification import sweep_all_graphs

FAMILIES = {
    "moon-moser": moon_moser,
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "empty": empty_graph,
}
ALGOS = [a.value for a in EnumAlgorithm]


class UsageError(Exception):
    pass


def _read_input(args) -> list[Graph]:
    if args.input is not None and args.graph6 is not None:
        raise UsageError("give either an input file or --graph6, not both")
    if args.graph6 is not None:
        text = args.graph6
    elif args.input not in (None, "-"):
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if not text.strip():
        raise UsageError("no graph on input")
    return read_graphs(text, args.format, strict=not args.lenient)


def cmd_bound(args, out) -> int:
    if args.n is None and args.table is None and not args.check:
        raise UsageError("bound needs n, --table or --check")
    if args.n is not None:
        print(bound.g(args.n), file=out)
    if args.table is not None:
        for k in range(args.table + 1):
            print(k, bound.g(k), file=out)
    if args.check:
        top = bound.GUARD
        checks = {
            "sandwich": all(bound.sandwich_check(k) for k in range(4, top + 1)),
            "nondecreasing": bound.g_is_nondecreasing(top),
            "product-partition": all(
                bound.max_product_partition(k) == bound.g(k) for k in range(2, top + 1)
            ),
            "proof-cases": all(all(bound.proof_cases(k).values()) for k in range(top + 1)),
        }
        for name, ok in checks.items():
            print(f"{name}\t{'PASS' if ok else 'FAIL'}", file=out)
        if not all(checks.values()):
            return 1
    return 0


def cmd_generate(args, out) -> int:
    g = FAMILIES[args.family](args.n)
    if args.format == "edgelist":
        out.write(format_edge_list(g))
    else:
        print(encode_graph6(g), file=out)
    return 0


def cmd_count(args, out) -> int:
    for g in _read_input(args):
        if args.stats:
            report = enumerate_mis(g, args.algo)
            print(report.count, file=out)
            s = report.stats
            print(f"candidates_generated: {s.candidates_generated}", file=out)
            print(f"recursive_calls: {s.recursive_calls}", file=out)
            print(f"max_depth: {s.max_depth}", file=out)
        else:
            print(count_mis(g, args.algo), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    for i, g in enumerate(_read_input(args)):
        if i:
            print(file=out)
        for s in enumerate_mis(g, args.algo).sets:
            print(" ".join(map(str, bits(s))), file=out)
    return 0


def cmd_verify(args, out) -> int:
    cert = sweep_all_graphs(args.n, args.algo, args.jobs, long_run=args.long_run)
    print(f"algo: {args.algo}", file=out)
    out.write(cert.to_text())
    if args.witnesses:
        with open(args.witnesses, "w") as fh:
            fh.write(cert.witnesses_graph6())
    return 0


def cmd_bench(args, out) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min must not exceed --n-max")
    step = args.step or (3 if args.family == "moon-moser" else 1)
    build = FAMILIES[args.family]
    print("n\tcount\tseconds\tratio", file=out)
    times: dict[int, float] = {}
    for n in range(args.n_min, args.n_max + 1, step):
        g = build(n)
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            count = count_mis(g, args.algo)
            best = min(best, time.perf_counter() - t0)
        times[n] = best
        ratio = f"{best / times[n - 3]:.3f}" if n - 3 in times else "-"
        print(f"{n}\t{count}\t{best:.6f}\t{ratio}", file=out)
    return 0


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (graph6 or edge list); '-' or omitted reads stdin")
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--format", choices=["graph6", "edgelist"], help="override format detection")
    p.add_argument("--lenient", action="store_true", help="ignore nonzero graph6 pad bits")
    p.add_argument("--algo", choices=ALGOS, default="pivot")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="misbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print g(n)")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--table", type=int, metavar="N_MAX", help="print 'n g(n)' for n = 0..N_MAX")
    p.add_argument("--check", action="store_true", help="check the inequalities g satisfies")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="count maximal independent sets")
    _add_input(p)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list maximal independent sets")
    _add_input(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the bound on every labelled graph of order n")
    p.add_argument("n", type=int)
    p.add_argument("--algo", choices=ALGOS, default="oracle")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    p.add_argument("--witnesses", metavar="OUT_G6", help="write extremal classes as graph6")
    p.add_argument("--long-run", action="store_true", help="allow n=8 (2^28 graphs)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time counting across a graph family (TSV)")
    p.add_argument("--family", choices=sorted(FAMILIES), default="moon-moser")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--step", type=int, default=None, help="default 3 for moon-moser, else 1")
    p.add_argument("--repeat", type=int, default=1, help="keep the fastest of this many runs")
    p.add_argument("--algo", choices=ALGOS, default="pivot")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"misbound: error: {exc}", file=sys.stderr)
        return 2
    except BoundViolation as exc:
        print(f"misbound: {exc}", file=sys.stderr)
        return 1
    except (MisboundError, OSError) as exc:
        print(f"misbound: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
