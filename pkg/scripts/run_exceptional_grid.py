#!/usr/bin/env python3
"""Track measured exceptional counts E(delta) against the constant-free
bound shape delta^-2 (log(1/delta))^2 log x on the desk-scale grid.

One JSON report per (Q, delta); these are the inputs of the
exceptional_vs_delta figure.
"""

import argparse
from pathlib import Path

from smoothchar import count_exceptional, ones, sieve_smooth
from smoothchar.reports import write_exceptional_json


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--x", type=int, default=1_000_000)
    ap.add_argument("--y", type=int, default=1000)
    ap.add_argument("--z", type=int, default=10_000)
    ap.add_argument("--qs", type=int, nargs="+", default=[10, 20, 40])
    ap.add_argument("--deltas", type=float, nargs="+", default=[0.02, 0.05, 0.1, 0.2])
    ap.add_argument("--c", type=float, default=1.0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=Path("reports"))
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    smooth = sieve_smooth(args.x, args.y)
    for Q in args.qs:
        for delta in args.deltas:
            rep = count_exceptional(smooth, Q, args.z, delta, args.c, ones(), threads=args.threads)
            name = f"exceptional_Q{Q}_d{delta}.json"
            write_exceptional_json(rep, args.out_dir / name)
            print(f"{name}: E={rep.E}/{rep.total_pairs} bound={rep.bound_value:.4g}")


if __name__ == "__main__":
    main()
