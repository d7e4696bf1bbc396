"""Scoring-variant ablation.

Compares the four candidate scoring statistics (max, mean, min, random pair)
on the same synthetic datasets and prints their mean F1 and HGMSE. The feature
dimension is deliberately modest so the variants actually separate; at high
dimension every statistic saturates and the comparison says nothing.

Usage:
    python scripts/run_ablation.py
    python scripts/run_ablation.py --dim 64 --reps 10 --out ablation.csv
"""

import argparse
import csv
import sys

from hyperinfer import run_sweep
from hyperinfer.experiments import SWEEP_COLUMNS
from hyperinfer.smoothness import VARIANT_KINDS


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=100)
    parser.add_argument("--edges", type=int, default=12)
    parser.add_argument("--size", type=int, default=8)
    parser.add_argument("--overlap", type=float, default=0.3)
    parser.add_argument("--reps", type=int, default=10)
    parser.add_argument("--dim", type=int, default=64)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="also write the long-format rows to this CSV")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    rows = run_sweep(
        "variant",
        list(VARIANT_KINDS),
        args.reps,
        n=args.nodes,
        edge_spec={args.size: args.edges},
        overlap=args.overlap,
        dim=args.dim,
        seed=args.seed,
        normalize=True,
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
            writer.writeheader()
            for row in rows:
                writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    print(
        f"n={args.nodes}, overlap {args.overlap}, d={args.dim}, {args.reps} seeds per variant"
    )
    print(f"{'variant':>8} {'mean F1':>9} {'std':>7} {'mean HGMSE':>11}")
    for row in rows:
        if row["seed"] != "summary":
            continue
        print(
            f"{row['value']:>8} {row['f1']:>9.4f} {row['f1_std']:>7.4f} {row['hgmse']:>11.4f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
