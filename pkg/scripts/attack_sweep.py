#!/usr/bin/env python3
"""Sweep attack difficulty across tuple lengths and word lengths.

Runs seeded attacks over a small grid and prints the tab-separated report,
including wall-time medians.  Useful for eyeballing how the explored search
set shrinks or grows with the number of simultaneously conjugated entries;
rows are reported as measured, no trend is asserted.

    python scripts/attack_sweep.py --n 4 --trials 10 --entry-len 6 --conj-len 4
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from braidmscp.harness import GenParams, batch_stats, format_report


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4, help="strand count")
    parser.add_argument("--r-values", default="1,2,3", help="comma list of tuple lengths")
    parser.add_argument("--entry-len", type=int, default=6)
    parser.add_argument("--conj-len", type=int, default=4)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap", type=int, default=10**6)
    parser.add_argument("--jobs", type=int, default=1)
    return parser.parse_args()


def main():
    args = parse_args()
    points = [
        GenParams(
            n=args.n,
            r=r,
            entry_length=args.entry_len,
            conjugator_length=args.conj_len,
            seed=args.seed,
        )
        for r in (int(tok) for tok in args.r_values.split(","))
    ]
    rows = batch_stats(points, trials=args.trials, node_cap=args.cap, jobs=args.jobs)
    print(format_report(rows, include_time=True), end="")


if __name__ == "__main__":
    main()
