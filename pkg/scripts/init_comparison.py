"""Greedy vs perturbation construction: size and time per instance file.

    python scripts/init_comparison.py graphs/*.txt [--one-indexed]
"""

import argparse

from dmds.construct import construct_both
from dmds.graph import read_edge_list
from dmds.reductions import apply_reductions


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("files", nargs="+")
    ap.add_argument("--one-indexed", action="store_true")
    args = ap.parse_args()

    print(f"{'instance':<30} {'n':>9} {'greedy':>8} {'t(s)':>7} {'perturb':>8} {'t(s)':>7}")
    for path in args.files:
        g = read_edge_list(path, one_indexed=args.one_indexed)
        c = construct_both(g, apply_reductions(g))
        print(f"{path:<30} {g.n:>9} {c.greedy.size:>8} {c.greedy_seconds:>7.2f} "
              f"{c.perturbation.size:>8} {c.perturbation_seconds:>7.2f}")


if __name__ == "__main__":
    main()
