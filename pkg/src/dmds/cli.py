"""Command-line entry point.

    dmds run [options] FILE...     seeded DmDS runs, Min/Avg table, optional CSV
    dmds exact [options] FILE...   exact optimum for small graphs (n <= 26)

Timing is wall clock per run, started after the instance is parsed. Each run
is single threaded, so wall clock stands in for CPU seconds.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .bench import AggregateReport, InstanceError, emit_csv, format_solutions, format_table, run_instance
from .construct import construct_both
from .graph import GraphFormatError, read_edge_list
from .oracle import OracleError, exact_min_dominating_set
from .reductions import apply_reductions
from .search import SearchConfig

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_USAGE = 2


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("files", nargs="+", help="edge-list instance files")
    p.add_argument("--one-indexed", action="store_true", help="vertex ids in the files start at 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmds", description="Minimum dominating set by dual-mode local search.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the local search", description=__doc__,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_input_args(run)
    run.add_argument("--cutoff", type=float, default=1000.0, help="wall-clock seconds per run (default 1000)")
    run.add_argument("--max-iters", type=int, default=0, help="iteration cap per run, 0 = none")
    run.add_argument("--runs", type=int, default=10, help="runs per instance (default 10)")
    run.add_argument("--seed", type=int, default=1, help="seed of the first run; run i uses seed+i-1")
    run.add_argument("--alpha", type=float, default=0.5, help="probability of the second removal")
    run.add_argument("--bms-min", type=int, default=45)
    run.add_argument("--bms-max", type=int, default=55)
    run.add_argument("--bms-per-run", action="store_true", help="draw the BMS sample size once per run")
    run.add_argument("--target", type=int, default=None, help="stop a run once this size is reached")
    run.add_argument("--jobs", type=int, default=1, help="parallel runs per instance")
    run.add_argument("--csv", type=Path, help="write per-run CSV here ('-' for stdout)")
    run.add_argument("--no-timing", action="store_true", help="leave the time column of the CSV empty")
    run.add_argument("--print-solution", type=Path, metavar="PATH", help="write best solutions here")
    run.add_argument("--init-only", action="store_true", help="only report both constructions")
    run.add_argument("--reductions-report", action="store_true", help="report reduction rule results")
    run.add_argument("--exact", action="store_true", help="solve with the exact oracle instead")

    exact = sub.add_parser("exact", help="exact optimum for small graphs")
    _add_input_args(exact)
    exact.add_argument("--node-limit", type=int, default=10_000_000)
    return parser


def _load(path, one_indexed):
    t0 = time.perf_counter()
    g = read_edge_list(path, one_indexed=one_indexed)
    return g, time.perf_counter() - t0


def cmd_exact(files, one_indexed: bool, node_limit: int, out) -> int:
    failed = 0
    for path in files:
        name = Path(path).name
        try:
            g, _ = _load(path, one_indexed)
            d = exact_min_dominating_set(g, node_limit=node_limit)
        except (OSError, GraphFormatError, OracleError) as exc:
            print(f"{name}: ERROR: {exc}", file=sys.stderr)
            failed += 1
            continue
        shift = 1 if one_indexed else 0
        print(f"{name}\tn={g.n}\tm={g.m}\toptimum={len(d)}\t"
              + " ".join(str(v + shift) for v in sorted(d)), file=out)
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_run(args, out) -> int:
    try:
        cfg = SearchConfig(
            alpha=args.alpha,
            bms_t_min=args.bms_min,
            bms_t_max=args.bms_max,
            cutoff=args.cutoff,
            max_iters=args.max_iters,
            seed=args.seed,
            bms_per_run=args.bms_per_run,
            target_size=args.target,
        )
    except ValueError as exc:
        print(f"dmds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.runs < 1 or args.jobs < 1:
        print("dmds: error: --runs and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE

    results: list[AggregateReport | InstanceError] = []
    for path in args.files:
        name = Path(path).name
        try:
            g, parse_s = _load(path, args.one_indexed)
        except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
            results.append(InstanceError(name, str(exc)))
            print(f"{name}: ERROR: {exc}", file=sys.stderr)
            continue
        print(f"# {name}: n={g.n} m={g.m} parsed in {parse_s:.3f}s", file=out)

        if args.reductions_report or args.init_only:
            red = apply_reductions(g)
            if args.reductions_report:
                print(f"# reductions: fixed={len(red.fixed)} excluded={len(red.excluded)} "
                      f"residual={red.residual_size(g.n)}", file=out)
            if args.init_only:
                c = construct_both(g, red)
                print(f"# init: greedy={c.greedy.size} ({c.greedy_seconds:.3f}s) "
                      f"perturbation={c.perturbation.size} ({c.perturbation_seconds:.3f}s) "
                      f"chosen={c.chosen_name} size={c.chosen.size}", file=out)
                continue

        if args.exact:
            try:
                d = exact_min_dominating_set(g)
            except OracleError as exc:
                results.append(InstanceError(name, str(exc)))
                print(f"{name}: ERROR: {exc}", file=sys.stderr)
                continue
            print(f"# exact optimum: {len(d)}", file=out)
            continue

        results.append(run_instance(g, name, cfg, args.runs, args.jobs))

    reports = [r for r in results if isinstance(r, AggregateReport)]
    if reports:
        print(format_table(results), file=out)
    if args.csv is not None:
        text = emit_csv(reports, timing=not args.no_timing)
        if str(args.csv) == "-":
            out.write(text)
        else:
            args.csv.write_text(text, encoding="utf-8")
    if args.print_solution is not None:
        args.print_solution.write_text(
            format_solutions(reports, offset=1 if args.one_indexed else 0), encoding="utf-8"
        )
    failed = any(isinstance(r, InstanceError) for r in results)
    return EXIT_PARTIAL if failed else EXIT_OK


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "exact":
        return cmd_exact(args.files, args.one_indexed, args.node_limit, out)
    return cmd_run(args, out)


if __name__ == "__main__":
    sys.exit(main())
