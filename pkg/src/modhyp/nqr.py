"""Least quadratic nonresidue, smooth-number counts and the two-branch threshold check.

The finite form of Vinogradov's trick used here: if y < n_p then every
y-smooth n <= x < p is a product of residues, so chi(n) = +1 and

    S(0; x) >= Psi(x, y) - (x - Psi(x, y)) = 2 Psi(x, y) - x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hyperbola import max_min_box
from .modarith import Modulus, as_prime, legendre

# 1 / (6 sqrt(e)) ~ 0.101088
EXP_A = 1 / (6 * math.sqrt(math.e))
EXP_B = 1 / 6


@dataclass(frozen=True)
class NqrResult:
    p: int
    n_p: int


@dataclass(frozen=True)
class SmoothCount:
    x: int
    y: int
    psi: int


@dataclass(frozen=True)
class DichotomyRecord:
    p: int
    n_p: int
    epsilon: float
    C: float
    threshold_A: float
    branch_A: bool
    max_h_star: int
    threshold_B: float
    branch_B: bool

    def consistent(self) -> bool:
        return (
            self.threshold_A > 0
            and self.threshold_B > 0
            and self.branch_A == (self.n_p <= self.threshold_A)
            and self.branch_B == (self.max_h_star <= self.threshold_B)
        )


def least_nonresidue(p: Modulus | int) -> NqrResult:
    p = as_prime(p)
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return NqrResult(p, n)


def largest_prime_factors(x: int) -> np.ndarray:
    """lpf[n] = largest prime factor of n for 2 <= n <= x; lpf[0] = lpf[1] = 1."""
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(x) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    lpf = np.ones(x + 1, dtype=np.int64)
    # ascending primes: larger ones overwrite
    for q in np.flatnonzero(sieve):
        lpf[q::q] = q
    return lpf


def smooth_count(x: int, y: int) -> SmoothCount:
    if x < 1 or y < 1:
        raise ValueError(f"x and y must be positive, got x={x}, y={y}")
    if y >= x:
        return SmoothCount(x, y, x)
    lpf = largest_prime_factors(x)
    return SmoothCount(x, y, int(np.count_nonzero(lpf[1:] <= y)))


def vinogradov_lower_bound(p: Modulus | int, x: int, y: int) -> int:
    """2 Psi(x, y) - x; a lower bound for S(0; x) whenever y < n_p."""
    p = as_prime(p)
    if not 1 <= x <= p - 1:
        raise ValueError(f"x must lie in [1, p-1], got {x}")
    if y < 1:
        raise ValueError(f"y must be positive, got {y}")
    return 2 * smooth_count(x, y).psi - x


def dichotomy_check(p: Modulus | int, epsilon: float = 0.1, C: float = 2.0) -> DichotomyRecord:
    p = as_prime(p)
    if p < 5:
        raise ValueError(f"dichotomy check needs p >= 5, got {p}")
    if epsilon <= 0 or C <= 0:
        raise ValueError("epsilon and C must be positive")
    n_p = least_nonresidue(p).n_p
    h, _ = max_min_box(p)
    ta = C * p ** (EXP_A + epsilon)
    tb = C * p ** (EXP_B + epsilon)
    return DichotomyRecord(p, n_p, epsilon, C, ta, n_p <= ta, h, tb, h <= tb)
