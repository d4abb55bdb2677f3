"""Effect of the second-removal probability on random graphs.

Writes one CSV row per (alpha, graph, seed). Example:

    python scripts/alpha_sweep.py --graphs 5 --n 2000 --avg-degree 6 --cutoff 10 --out alpha.csv
"""

import argparse
import csv
import random
import sys
from statistics import fmean, pstdev

from dmds.graph import gnm_random_graph
from dmds.reductions import apply_reductions
from dmds.search import SearchConfig, solve


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0])
    ap.add_argument("--graphs", type=int, default=3)
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--avg-degree", type=float, default=6.0)
    ap.add_argument("--runs", type=int, default=3)
    ap.add_argument("--cutoff", type=float, default=5.0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rng = random.Random(2024)
    instances = [
        gnm_random_graph(args.n, int(args.n * args.avg_degree / 2), rng) for _ in range(args.graphs)
    ]
    reds = [apply_reductions(g) for g in instances]

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(fh)
    writer.writerow(["alpha", "graph", "seed", "best_size", "init_size", "iterations"])
    summary = {}
    for alpha in args.alphas:
        sizes = []
        for gi, (g, red) in enumerate(zip(instances, reds)):
            for seed in range(1, args.runs + 1):
                r = solve(g, SearchConfig(alpha=alpha, cutoff=args.cutoff, seed=seed), red)
                writer.writerow([alpha, gi, seed, r.best_size, r.init_size, r.iterations])
                sizes.append(r.best_size)
        summary[alpha] = (fmean(sizes), pstdev(sizes))
    if fh is not sys.stdout:
        fh.close()
    for alpha, (mean, sd) in summary.items():
        print(f"alpha={alpha:.2f}  mean best={mean:.2f}  sd={sd:.2f}", file=sys.stderr)


if __name__ == "__main__":
    main()
