#!/usr/bin/env python3
"""Regenerate tests/golden/minbox_5_23.csv from the exhaustive pair scan.

The sweep itself goes through the fast Legendre search, so pinning the
oracle's output keeps the golden file independent of the code it checks.
"""
from pathlib import Path

from modhyp.hyperbola import HyperbolaInstance, min_box_oracle
from modhyp.modarith import primes_between
from modhyp.sweep import emit

OUT = Path(__file__).resolve().parents[1] / "tests" / "golden" / "minbox_5_23.csv"


def main():
    rows = []
    for p in primes_between(5, 23):
        for c in range(1, p):
            r = min_box_oracle(HyperbolaInstance(p, c))
            P, Q = r.witness
            rows.append({"p": p, "c": c, "h_star": r.h_star, "x1": P.x, "y1": P.y,
                         "x2": Q.x, "y2": Q.y, "a": r.offset.a,
                         "b_sign": r.offset.b_sign, "b": r.offset.b_magnitude})
    emit(rows, "csv", OUT, "minbox")
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
