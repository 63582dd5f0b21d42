import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from modhyp.charsum import build_table, char_sum
from modhyp.hyperbola import HyperbolaInstance, min_box_oracle
from modhyp.modarith import is_prime, legendre, primes_between
from modhyp.nqr import (
    EXP_A,
    dichotomy_check,
    largest_prime_factors,
    least_nonresidue,
    smooth_count,
    vinogradov_lower_bound,
)


def brute_psi(x, y):
    def smooth(n):
        for q in range(2, y + 1):
            while n % q == 0:
                n //= q
        return n == 1
    return sum(1 for n in range(1, x + 1) if smooth(n))


def test_least_nonresidue_examples():
    assert least_nonresidue(3).n_p == 2
    assert least_nonresidue(7).n_p == 3
    assert least_nonresidue(23).n_p == 5
    assert least_nonresidue(5).n_p == 2


@pytest.mark.parametrize("p", primes_between(3, 3000))
def test_least_nonresidue_definition(p):
    n = least_nonresidue(p).n_p
    assert legendre(n, p) == -1
    assert all(legendre(q, p) == 1 for q in range(2, n))
    assert is_prime(n)


def test_smooth_count_examples():
    assert smooth_count(10, 2).psi == 4
    assert smooth_count(6, 2).psi == 3
    assert smooth_count(22, 3).psi == 10
    assert smooth_count(17, 17).psi == 17
    assert smooth_count(17, 40).psi == 17
    assert smooth_count(1, 1).psi == 1
    assert smooth_count(50, 1).psi == 1


def test_smooth_count_errors():
    with pytest.raises(ValueError):
        smooth_count(0, 2)
    with pytest.raises(ValueError):
        smooth_count(5, 0)


def test_largest_prime_factors():
    lpf = largest_prime_factors(30)
    assert lpf[12] == 3 and lpf[30] == 5 and lpf[29] == 29 and lpf[1] == 1


@settings(max_examples=150)
@given(st.integers(1, 600), st.integers(1, 60))
def test_smooth_count_matches_brute(x, y):
    sc = smooth_count(x, y)
    assert sc.psi == brute_psi(x, y)
    assert 1 <= sc.psi <= x


@settings(max_examples=100)
@given(st.integers(1, 500), st.integers(1, 40))
def test_psi_monotone(x, y):
    a = smooth_count(x, y).psi
    assert smooth_count(x + 1, y).psi >= a
    assert smooth_count(x, y + 1).psi >= a


def test_vinogradov_examples():
    assert vinogradov_lower_bound(7, 6, 2) == 0
    assert char_sum(build_table(7), 0, 6) == 0
    assert vinogradov_lower_bound(23, 22, 3) == -2
    assert char_sum(build_table(23), 0, 22) == 0
    assert vinogradov_lower_bound(101, 40, 50) == 40


def test_vinogradov_errors():
    with pytest.raises(ValueError):
        vinogradov_lower_bound(7, 7, 2)
    with pytest.raises(ValueError):
        vinogradov_lower_bound(7, 0, 2)
    with pytest.raises(ValueError):
        vinogradov_lower_bound(7, 3, 0)


@pytest.mark.parametrize("p", primes_between(3, 600))
def test_vinogradov_inequality(p):
    t = build_table(p)
    n = least_nonresidue(p).n_p
    for x in range(1, p):
        for y in range(1, n):
            assert char_sum(t, 0, x) >= vinogradov_lower_bound(p, x, y)


def test_dichotomy_p7():
    rec = dichotomy_check(7, 0.1, 2)
    assert rec.n_p == 3 and rec.max_h_star == 3
    assert rec.threshold_A == pytest.approx(2.958, abs=5e-4)
    assert rec.threshold_B == pytest.approx(3.36, abs=5e-3)
    assert not rec.branch_A and rec.branch_B
    assert rec.consistent()


def test_dichotomy_p23():
    rec = dichotomy_check(23, 0.1, 2)
    assert rec.n_p == 5
    assert rec.max_h_star == max(min_box_oracle(HyperbolaInstance(23, c)).h_star for c in range(1, 23)) == 3
    assert rec.consistent()


@pytest.mark.parametrize("p", [5, 7, 11, 101, 499])
def test_dichotomy_large_constant(p):
    rec = dichotomy_check(p, 0.1, float(p))
    assert rec.branch_A and rec.branch_B


def test_dichotomy_errors():
    for args in [(3, 0.1, 2), (7, 0, 2), (7, 0.1, -1)]:
        with pytest.raises(ValueError):
            dichotomy_check(*args)


def test_exponent_constant():
    assert EXP_A == pytest.approx(0.101088, abs=1e-6)
    assert EXP_A == pytest.approx(1 / (6 * math.exp(0.5)))
