"""Seeded repetitions over instance files, aggregation and CSV output."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from statistics import fmean
from typing import Sequence

from .graph import Graph, GraphFormatError, read_edge_list
from .search import RunReport, SearchConfig, solve

CSV_HEADER = ["instance", "n", "m", "run", "seed", "best_size", "time_to_best_s", "iterations", "feasible"]


@dataclass
class AggregateReport:
    instance: str
    n: int
    m: int
    runs: list[RunReport] = field(default_factory=list)

    @property
    def min_size(self) -> int:
        return min(r.best_size for r in self.runs)

    @property
    def max_size(self) -> int:
        return max(r.best_size for r in self.runs)

    @property
    def avg_size(self) -> float:
        return fmean(r.best_size for r in self.runs)

    @property
    def mean_time_to_best(self) -> float:
        return fmean(r.time_to_best for r in self.runs)


@dataclass
class InstanceError:
    instance: str
    message: str


def _run_one(args: tuple[Graph, SearchConfig]) -> RunReport:
    g, cfg = args
    return solve(g, cfg)


def run_instance(g: Graph, name: str, cfg: SearchConfig, runs: int, jobs: int = 1) -> AggregateReport:
    """``runs`` independent solves with seeds ``cfg.seed``, ``cfg.seed + 1``, ..."""
    cfgs = [replace(cfg, seed=cfg.seed + i) for i in range(runs)]
    if jobs > 1 and runs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, runs)) as pool:
            reports = list(pool.map(_run_one, [(g, c) for c in cfgs]))
    else:
        reports = [solve(g, c) for c in cfgs]
    return AggregateReport(name, g.n, g.m, reports)


def run_benchmark(
    paths: Sequence[str | os.PathLike],
    cfg: SearchConfig,
    runs: int,
    jobs: int = 1,
    one_indexed: bool = False,
) -> list[AggregateReport | InstanceError]:
    """Results in input order; unreadable instances yield an ``InstanceError``."""
    results: list[AggregateReport | InstanceError] = []
    for path in paths:
        name = Path(path).name
        try:
            g = read_edge_list(path, one_indexed=one_indexed)
        except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
            results.append(InstanceError(name, str(exc)))
            continue
        results.append(run_instance(g, name, cfg, runs, jobs))
    return results


def emit_csv(reports: Sequence[AggregateReport], timing: bool = True) -> str:
    """One row per run. With ``timing=False`` the wall-clock column is left
    blank so that iteration-capped runs produce byte-identical files."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rep in reports:
        for i, r in enumerate(rep.runs, start=1):
            writer.writerow([
                rep.instance,
                rep.n,
                rep.m,
                i,
                r.seed,
                r.best_size,
                f"{r.time_to_best:.3f}" if timing else "",
                r.iterations,
                "true" if r.feasible_verified else "false",
            ])
    return buf.getvalue()


def format_table(results: Sequence[AggregateReport | InstanceError]) -> str:
    lines = [f"{'instance':<28} {'n':>8} {'m':>9} {'min':>7} {'avg':>9} {'ttb(s)':>9}"]
    for rep in results:
        if isinstance(rep, InstanceError):
            lines.append(f"{rep.instance:<28} ERROR: {rep.message}")
            continue
        lines.append(
            f"{rep.instance:<28} {rep.n:>8} {rep.m:>9} {rep.min_size:>7} "
            f"{rep.avg_size:>9.2f} {rep.mean_time_to_best:>9.3f}"
        )
    return "\n".join(lines)


def format_solutions(reports: Sequence[AggregateReport], offset: int = 0) -> str:
    """Tab-separated ``instance run seed size vertices`` lines; ids shifted by ``offset``."""
    lines = []
    for rep in reports:
        for i, r in enumerate(rep.runs, start=1):
            verts = " ".join(str(v + offset) for v in sorted(r.best_solution))
            lines.append(f"{rep.instance}\t{i}\t{r.seed}\t{r.best_size}\t{verts}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_solutions(text: str, offset: int = 0) -> list[tuple[str, int, int, int, frozenset[int]]]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        inst, run, seed, size, verts = line.split("\t")
        vs = frozenset(int(t) - offset for t in verts.split())
        out.append((inst, int(run), int(seed), int(size), vs))
    return out
