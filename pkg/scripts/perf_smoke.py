"""Search throughput on a large sparse random graph.

    python scripts/perf_smoke.py --n 100000 --m 300000 --seconds 10
"""

import argparse
import random
import time

from dmds.construct import construct_both
from dmds.graph import gnm_random_graph
from dmds.reductions import apply_reductions
from dmds.search import DmdsSearch, SearchConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--m", type=int, default=300_000)
    ap.add_argument("--seconds", type=float, default=10.0)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    g = gnm_random_graph(args.n, args.m, random.Random(args.seed))
    print(f"graph n={g.n} m={g.m} built in {time.perf_counter() - t0:.2f}s")

    t0 = time.perf_counter()
    red = apply_reductions(g)
    print(f"reductions: fixed={len(red.fixed)} excluded={len(red.excluded)} "
          f"({time.perf_counter() - t0:.2f}s)")
    c = construct_both(g, red)
    print(f"greedy={c.greedy.size} ({c.greedy_seconds:.2f}s) "
          f"perturbation={c.perturbation.size} ({c.perturbation_seconds:.2f}s)")

    init_size = c.chosen.size
    search = DmdsSearch(c.chosen, SearchConfig(seed=args.seed))
    start = time.perf_counter()
    passes = 0
    while time.perf_counter() - start < args.seconds:
        search.step()
        passes += 1
    elapsed = time.perf_counter() - start
    search.finish()
    print(f"{passes} passes in {elapsed:.2f}s -> {passes / elapsed:.0f} passes/s; "
          f"best {search.best_size} (from {init_size})")


if __name__ == "__main__":
    main()
