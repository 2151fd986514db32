"""Command-line workbench.

Subcommands
-----------
partition   partition a co-chordal graph file
verify      check a partition file against a graph file
bounds      print lower/upper bounds on bp (optionally the exact value)
sweep       generate instances, run both heuristics, emit CSV
gen         write a generated graph file

Exit codes: 0 ok, 1 parse/usage error, 2 not co-chordal, 3 verification failed.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .exact import DEFAULT_MAX_EDGES, OracleTooLarge, bounds_report, exact_bp
from .fileio import FormatError, format_graph, format_partition, read_graph, read_partition
from .generators import KINDS, GenSpec, gen
from .graph import complement
from .heuristics import METHODS, EdgeChoiceStrategy, NotCoChordalError, partition_auto
from .partition import verify_partition

EXIT_OK, EXIT_PARSE, EXIT_NOT_COCHORDAL, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _strategy(text: str) -> EdgeChoiceStrategy:
    try:
        return EdgeChoiceStrategy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def cmd_partition(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    try:
        p, mc_c = partition_auto(g, args.method, args.strategy)
    except NotCoChordalError as exc:
        print(str(exc))
        return EXIT_NOT_COCHORDAL
    verdict = verify_partition(g, p)
    _emit(format_partition(p), args.out)
    print(f"parts={len(p)} mc={mc_c} verified={str(bool(verdict)).lower()}")
    return EXIT_OK if verdict else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    p = read_partition(args.partition)
    verdict = verify_partition(g, p)
    print("PASS" if verdict else f"FAIL: {verdict.message}")
    return EXIT_OK if verdict else EXIT_VERIFY


def cmd_bounds(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    try:
        report = bounds_report(g, run_oracle=args.exact, budget=args.budget,
                               max_edges=args.max_edges)
    except OracleTooLarge as exc:
        report = bounds_report(g)
        print("\n".join(report.lines()))
        print(f"exact=skipped ({exc})")
        return EXIT_OK
    print("\n".join(report.lines()))
    return EXIT_OK


def _spec_from(args: argparse.Namespace, seed: int | None) -> GenSpec:
    return GenSpec(args.kind, args.n, args.density, seed, args.clique_size)


SWEEP_COLUMNS = ["index", "seed", "n", "m", "m_complement", "mc", "parts_clique_tree",
                 "parts_lexbfs", "agreement", "verified", "ms_clique_tree", "ms_lexbfs",
                 "exact_bp"]


def cmd_sweep(args: argparse.Namespace) -> int:
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for i in range(args.count):
            seed = (args.seed + i) % (1 << 64)
            g = gen(_spec_from(args, seed))
            if args.kind == "chordal":
                g = complement(g)
            sizes, times, verified = {}, {}, True
            try:
                for method in METHODS:
                    t0 = time.perf_counter()
                    p, mc_c = partition_auto(g, method, args.strategy)
                    times[method] = (time.perf_counter() - t0) * 1000.0
                    sizes[method] = len(p)
                    verified = verified and bool(verify_partition(g, p))
            except NotCoChordalError as exc:
                return _fail(f"instance {i} (seed {seed}): {exc}", EXIT_NOT_COCHORDAL)
            agree = sizes["clique-tree"] == sizes["lexbfs"] == mc_c - 1
            exact = ""
            if args.exact and g.m <= args.max_edges:
                res = exact_bp(g, budget=args.budget, max_edges=args.max_edges)
                exact = str(res.count) if res.complete else f"incomplete:{res.count}"
            writer.writerow([i, seed, g.n, g.m, g.n * (g.n - 1) // 2 - g.m, mc_c,
                             sizes["clique-tree"], sizes["lexbfs"], str(agree).lower(),
                             str(verified).lower(), f"{times['clique-tree']:.3f}",
                             f"{times['lexbfs']:.3f}", exact])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = gen(_spec_from(args, args.seed))
    if args.complement:
        g = complement(g)
    _emit(format_graph(g), args.out)
    return EXIT_OK


def _add_gen_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=KINDS, default="chordal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--clique-size", type=int, default=None,
                   help="clique side size for --kind split (default n//2)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bicliq", description="Biclique partitions of co-chordal graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partition", help="partition a co-chordal graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="lexbfs")
    p.add_argument("--strategy", type=_strategy, default=EdgeChoiceStrategy(),
                   help="clique-tree edge choice: first | random:<seed>")
    p.add_argument("--out", help="partition file to write (default: stdout)")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="verify a partition file")
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="report bounds on bp")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="also run the exact oracle")
    p.add_argument("--budget", type=int, default=None,
                   help="oracle node budget (default: $BICLIQ_BUDGET or 2000000)")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="batch run over generated instances (CSV)")
    _add_gen_args(p)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--strategy", type=_strategy, default=EdgeChoiceStrategy())
    p.add_argument("--exact", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--out", help="CSV file to write (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="write a generated graph file")
    _add_gen_args(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--complement", action="store_true", help="write the complement instead")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        return _fail(f"error: {exc}", EXIT_PARSE)
    except ValueError as exc:
        # invalid generator specs and similar argument problems
        return _fail(f"error: {exc}", EXIT_PARSE)


if __name__ == "__main__":
    sys.exit(main())
