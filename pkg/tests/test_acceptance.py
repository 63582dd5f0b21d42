"""Exit criteria, one test per criterion. A PASS/FAIL line per criterion is printed in the summary."""

import math
import random
from pathlib import Path

import numpy as np
import pytest

from modhyp.charsum import (
    SpacedFamily,
    build_table,
    char_sum,
    inverse_family,
    min_circular_gap,
    shao_statistic,
    weil_moment,
)
from modhyp.hyperbola import HyperbolaInstance, criterion_decide, min_box_fast, min_box_oracle
from modhyp.modarith import euler_criterion, is_prime, legendre, primes_between
from modhyp.nqr import least_nonresidue, smooth_count, vinogradov_lower_bound
from modhyp.sweep import SCHEMAS, SweepConfig, emit, render, run_sweep

GOLDEN = Path(__file__).parent / "golden" / "minbox_5_23.csv"


@pytest.fixture(scope="module")
def oracle_h300():
    """Exhaustive-scan h_star for every prime 5 <= p <= 300 and every c."""
    return {
        (p, c): min_box_oracle(HyperbolaInstance(p, c)).h_star
        for p in primes_between(5, 300)
        for c in range(1, p)
    }


def test_c01_criterion_oracle_equivalence(oracle_h300, record_property):
    """criterion 1: criterion_decide == (oracle h_star <= H), all p <= 300, c, H"""
    checked = mismatches = 0
    for (p, c), h in oracle_h300.items():
        inst = HyperbolaInstance(p, c)
        for H in range(2, p + 1):
            checked += 1
            if criterion_decide(inst, H)[0] != (h <= H):
                mismatches += 1
    record_property("detail", f"{checked} triples, {mismatches} mismatches")
    assert mismatches == 0


def test_c02_fast_path(record_property):
    """criterion 2: min_box_fast == oracle for p <= 1000 x 20 seeded c; p=7 vector (2,2,3,3,2,2)"""
    n = bad = 0
    for p in primes_between(5, 1000):
        rng = random.Random(20261018 + p)
        for c in rng.sample(range(1, p), min(20, p - 1)):
            inst = HyperbolaInstance(p, c)
            n += 1
            if min_box_fast(inst).h_star != min_box_oracle(inst).h_star:
                bad += 1
    vec = tuple(min_box_fast(HyperbolaInstance(7, c)).h_star for c in range(1, 7))
    record_property("detail", f"{n} instances, {bad} mismatches, p=7 {vec}")
    assert bad == 0
    assert vec == (2, 2, 3, 3, 2, 2)


def test_c03_legendre(record_property):
    """criterion 3: legendre == Euler for all p <= 1000, a in [0,p); (p-1)/2 residues"""
    primes = primes_between(3, 1000)
    for p in primes:
        vals = [legendre(a, p) for a in range(p)]
        assert vals == [euler_criterion(a, p) for a in range(p)], p
        assert vals.count(1) == (p - 1) // 2
    record_property("detail", f"{len(primes)} primes")


def test_c04_char_sums_and_polya_vinogradov(record_property):
    """criterion 4: table S(N;h) == naive on 10^4 samples (p <= 2000); |S| <= sqrt(p) ln p; prefix[p-1] = 0"""
    primes = primes_between(3, 2000)
    tables = {}
    rng = random.Random(4)
    worst = 0.0
    for _ in range(10_000):
        p = rng.choice(primes)
        t = tables.get(p) or tables.setdefault(p, build_table(p))
        N = rng.randrange(0, p - 1)
        h = rng.randint(1, p - 1 - N)
        s = char_sum(t, N, h)
        assert s == sum(euler_criterion(n, p) for n in range(N + 1, N + h + 1))
        assert abs(s) <= math.sqrt(p) * math.log(p)
        worst = max(worst, abs(s) / (math.sqrt(p) * math.log(p)))
    for p in primes:
        t = tables.get(p) or build_table(p)
        assert t.prefix[p - 1] == 0
        # every window at once: max |S(N;h)| = max(prefix) - min(prefix)
        span = int(t.prefix.max() - t.prefix.min())
        assert span <= math.sqrt(p) * math.log(p)
        worst = max(worst, span / (math.sqrt(p) * math.log(p)))
    record_property("detail", f"max |S|/(sqrt(p) ln p) = {worst:.4f}")


def test_c05_vinogradov_inequality(record_property):
    """criterion 5: S(0;x) >= 2 Psi(x,y) - x for p <= 5000, y < n_p, x in {p//4, p//2, p-1}"""
    checks = 0
    for p in primes_between(3, 5000):
        t = build_table(p)
        n_p = least_nonresidue(p).n_p
        for x in sorted({max(1, p // 4), p // 2, p - 1}):
            s = char_sum(t, 0, x)
            for y in range(1, n_p):
                assert s >= 2 * smooth_count(x, y).psi - x, (p, x, y)
                checks += 1
    assert vinogradov_lower_bound(7, 6, 2) == 0 == char_sum(build_table(7), 0, 6)
    record_property("detail", f"{checks} (p,x,y) checks; equality at (7,6,2)")


def test_c06_least_nonresidue_survey(record_property):
    """criterion 6: n_p matches a definition scan for p <= 10^5; n_p prime; n_3=2, n_7=3, n_23=5"""
    primes = primes_between(3, 100_000)
    largest = 0
    for p in primes:
        squares = np.zeros(p, dtype=bool)
        k = np.arange(1, p, dtype=np.int64)
        squares[k * k % p] = True
        expected = 2 + int(np.argmin(squares[2:]))
        n = least_nonresidue(p).n_p
        assert n == expected, p
        assert is_prime(n)
        largest = max(largest, n)
    assert [least_nonresidue(p).n_p for p in (3, 7, 23)] == [2, 3, 5]
    record_property("detail", f"{len(primes)} primes, max n_p = {largest}")


def test_c07_linking_invariant(oracle_h300, record_property):
    """criterion 7: min_circular_gap(inverse_family) <= H implies oracle h_star <= H + 1 (p <= 300)"""
    triggered = violations = 0
    for (p, c), h in oracle_h300.items():
        inst = HyperbolaInstance(p, c)
        for H in range(2, p // 2 + 1):
            fam = inverse_family(inst, H)
            if fam.J < 2:
                continue  # no pair, vacuous
            if min_circular_gap(fam) <= H:
                triggered += 1
                if h > H + 1:
                    violations += 1
    record_property("detail", f"{triggered} triggered, {violations} violations")
    assert violations == 0


def test_c08_moment_statistics(tmp_path, record_property):
    """criterion 8: Weil naive == accelerated (p <= 500); (7,1,1,1) -> 5; Shao (7,{0},2,1) -> 4; ratio sweep 100..5000"""
    rng = random.Random(8)
    small = primes_between(3, 500)
    for _ in range(150):
        p = rng.choice(small)
        c, U, r = rng.randrange(1, p), rng.randrange(1, p), rng.randint(1, 3)
        assert weil_moment(p, c, U, r, naive=True) == weil_moment(p, c, U, r)
    assert weil_moment(7, 1, 1, 1).value == 5
    assert shao_statistic(build_table(7), SpacedFamily(7, (0,)), 2, 1).value == 4

    rows = {"moment": [], "shao": []}
    for r in (1, 2, 3):
        rows["moment"] += run_sweep(SweepConfig(100, 5000, mode="moment", c="1", r=r))
        rows["shao"] += run_sweep(SweepConfig(100, 5000, mode="shao", r=r))
    for mode, recs in rows.items():
        emit(recs, "csv", tmp_path / f"{mode}_ratios.csv", mode)
        assert len(recs) == 3 * len(primes_between(100, 5000))
        for rec in recs:
            assert math.isfinite(rec["ratio"]) and rec["ratio"] > 0
            assert rec["U" if mode == "moment" else "H"] ** (2 * rec["r"]) >= rec["p"]
    spans = {
        mode: (min(x["ratio"] for x in recs), max(x["ratio"] for x in recs))
        for mode, recs in rows.items()
    }
    record_property("detail", ", ".join(f"{m} ratio in [{a:.3g}, {b:.3g}]" for m, (a, b) in spans.items()))


def test_c09_dichotomy_survey(oracle_h300, record_property):
    """criterion 9: dichotomy sweep 5 <= p <= 2000 (eps=0.1, C=2) consistent; p=7 record matches"""
    recs = run_sweep(SweepConfig(5, 2000, mode="dichotomy", epsilon=0.1, C=2.0))
    assert len(recs) == len(primes_between(5, 2000))
    for rec in recs:
        assert rec["threshold_A"] > 0 and rec["threshold_B"] > 0
        assert rec["branch_A"] == (rec["n_p"] <= rec["threshold_A"])
        assert rec["branch_B"] == (rec["max_h_star"] <= rec["threshold_B"])
        assert rec["n_p"] == least_nonresidue(rec["p"]).n_p
        if rec["p"] <= 300:
            worst = max(oracle_h300[(rec["p"], c)] for c in range(1, rec["p"]))
            assert rec["max_h_star"] == worst
    p7 = recs[1]
    assert p7["p"] == 7 and p7["n_p"] == 3 and p7["max_h_star"] == 3
    assert p7["branch_A"] is False and p7["branch_B"] is True
    frac = sum(r["branch_A"] or r["branch_B"] for r in recs) / len(recs)
    record_property("detail", f"{len(recs)} primes, branch_A or branch_B in {frac:.4f}")


def test_c10_determinism(record_property):
    """criterion 10: sweeps byte-identical across --threads; golden p <= 23 minbox CSV"""
    for mode in ("minbox", "dichotomy", "moment", "nqr"):
        base = SweepConfig(3, 400, mode=mode, c="sample:6", seed=11)
        outs = {
            render(run_sweep(SweepConfig(**{**vars(base), "threads": n})), "csv", SCHEMAS[mode])
            for n in (1, 2, 4)
        }
        assert len(outs) == 1, mode
    golden = render(run_sweep(SweepConfig(5, 23, mode="minbox")), "csv", SCHEMAS["minbox"])
    assert golden.encode() == GOLDEN.read_bytes()
    record_property("detail", "threads 1/2/4 identical for 4 modes; golden matches")
