#!/usr/bin/env python3
"""Record mean-square ratios over the standard desk-scale grid.

Writes one JSON report per (x, y, Q, weight kind) into --out-dir; these are
the inputs the large_sieve_ratios figure consumes.
"""

import argparse
from pathlib import Path

from smoothchar import large_sieve_terms, ones, random_unit, sieve_smooth
from smoothchar.reports import write_large_sieve_json


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--x", type=int, default=100_000)
    ap.add_argument("--ys", type=int, nargs="+", default=[100, 1000])
    ap.add_argument("--qs", type=int, nargs="+", default=[2, 5, 10, 20])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=Path("reports"))
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for y in args.ys:
        smooth = sieve_smooth(args.x, y)
        for Q in args.qs:
            for w in (ones(), random_unit(args.seed)):
                lhs, rhs = large_sieve_terms(Q, smooth, w)
                ratio = lhs / rhs if rhs else 0.0
                name = f"large_sieve_x{args.x}_y{y}_Q{Q}_{w.kind}.json"
                write_large_sieve_json(Q, args.x, y, w.label, lhs, rhs, ratio, args.out_dir / name)
                print(f"{name}: ratio={ratio:.6g}")


if __name__ == "__main__":
    main()
