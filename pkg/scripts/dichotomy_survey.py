#!/usr/bin/env python3
"""Evaluate both threshold branches for every prime in a range and fit max h_star against p."""
import argparse
from pathlib import Path

from modhyp.sweep import SweepConfig, emit, fit_exponent, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-min", type=int, default=5)
    ap.add_argument("--p-max", type=int, default=2000)
    ap.add_argument("--epsilon", type=float, default=0.1)
    ap.add_argument("--C", type=float, default=2.0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="results/dichotomy.csv")
    args = ap.parse_args()

    recs = run_sweep(SweepConfig(args.p_min, args.p_max, mode="dichotomy",
                                 epsilon=args.epsilon, C=args.C, threads=args.threads))
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    emit(recs, "csv", args.out, "dichotomy")

    n = len(recs)
    a = sum(r["branch_A"] for r in recs)
    b = sum(r["branch_B"] for r in recs)
    either = sum(r["branch_A"] or r["branch_B"] for r in recs)
    print(f"{n} primes: branch_A {a}, branch_B {b}, either {either} ({either / n:.4f})")
    for field in ("max_h_star", "n_p"):
        fit = fit_exponent(recs, field)
        print(f"{field}: alpha = {fit.alpha:.4f} (beta {fit.beta:.4f}); "
              f"(compare 0.25 and {1 / 6:.4f})")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
