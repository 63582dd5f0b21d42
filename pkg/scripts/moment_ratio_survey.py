#!/usr/bin/env python3
"""Bound ratios of the Weil moment and the spaced-family statistic over a prime range.

U = ceil(p^(1/(2r))) for r in {1, 2, 3}; c = 1 for the moment. Ratios are
reported only: the reference bounds carry no effective constants.
"""
import argparse
from pathlib import Path

from modhyp.sweep import SweepConfig, emit, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-min", type=int, default=100)
    ap.add_argument("--p-max", type=int, default=5000)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for mode in ("moment", "shao"):
        recs = []
        for r in (1, 2, 3):
            recs += run_sweep(SweepConfig(args.p_min, args.p_max, mode=mode, c="1", r=r,
                                          threads=args.threads))
        path = outdir / f"{mode}_ratios.csv"
        emit(recs, "csv", path, mode)
        for r in (1, 2, 3):
            ratios = [x["ratio"] for x in recs if x["r"] == r]
            print(f"{mode:6s} r={r}: {len(ratios)} primes, ratio min {min(ratios):.4g} "
                  f"max {max(ratios):.4g}")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
