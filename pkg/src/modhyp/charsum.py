"""Short sums of the quadratic character mod p and the moment statistics built on them.

S(N; h) is the sum of chi(n) over N < n <= N + h, with the window kept inside
one period (N + h <= p - 1).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .hyperbola import HyperbolaInstance, circ_dist
from .modarith import Modulus, as_prime, invert, legendre


@dataclass(frozen=True)
class CharSumTable:
    p: int
    prefix: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.prefix.setflags(write=False)

    @property
    def chi(self) -> np.ndarray:
        return np.diff(self.prefix, prepend=0)


@dataclass(frozen=True)
class SpacedFamily:
    p: int
    points: tuple[int, ...]

    def __post_init__(self):
        pts = self.points
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValueError("family points must be strictly increasing")
        if pts and not (0 <= pts[0] and pts[-1] < self.p):
            raise ValueError(f"family points must lie in [0, {self.p - 1}]")

    @property
    def J(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class MomentReport:
    r: int
    window: int
    value: int
    bound: float
    ratio: float
    partner: int | None = None


def character_values(p: int) -> np.ndarray:
    """chi(n) for n = 0..p-1 as int64, from the squares mod p."""
    chi = np.full(p, -1, dtype=np.int64)
    k = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    chi[k * k % p] = 1
    chi[0] = 0
    return chi


def build_table(p: Modulus | int) -> CharSumTable:
    p = as_prime(p)
    chi = character_values(p)
    return CharSumTable(p, np.cumsum(chi[: p]))


def _check_window(table: CharSumTable, N: int, h: int):
    if N < 0 or h < 1 or N + h > table.p - 1:
        raise ValueError(
            f"window N={N}, h={h} must satisfy N >= 0, h >= 1, N + h <= p - 1 = {table.p - 1}"
        )


def char_sum(table: CharSumTable, N: int, h: int) -> int:
    _check_window(table, N, h)
    return int(table.prefix[N + h] - table.prefix[N])


def max_partial(table: CharSumTable, N: int, H: int) -> int:
    """max over 1 <= h <= H of |S(N; h)|."""
    _check_window(table, N, H)
    run = table.prefix[N + 1 : N + H + 1] - table.prefix[N]
    return int(np.abs(run).max())


def shao_bound(p: int, H: int, r: int) -> float:
    return float(H) ** (2 * r - 2) * float(p) ** (0.5 + 1 / (2 * r))


def shao_statistic(table: CharSumTable, family: SpacedFamily, H: int, r: int) -> MomentReport:
    """Sum over the family of max_{h<=H} |S(N_j; h)|^(2r), against H^(2r-2) p^(1/2 + 1/(2r))."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if family.p != table.p:
        raise ValueError("family and table use different moduli")
    pts = family.points
    for a, b in zip(pts, pts[1:]):
        if b - a < H:
            raise ValueError(f"family gap {b - a} between {a} and {b} is below H={H}")
    value = sum(max_partial(table, N, H) ** (2 * r) for N in pts)
    bound = shao_bound(table.p, H, r)
    return MomentReport(r, H, value, bound, value / bound)


def tiling_family(p: int, H: int) -> SpacedFamily:
    """0, H, 2H, ... while N + H <= p - 1: the densest family with linear gaps H."""
    return SpacedFamily(p, tuple(range(0, p - H, H)))


def weil_bound(p: int, U: int, r: int) -> float:
    return float(U) ** r * p + float(U) ** (2 * r) * math.sqrt(p)


def _check_moment_args(p: int, c: int, U: int, r: int):
    if not 1 <= U < p:
        raise ValueError(f"U must lie in [1, p-1], got {U}")
    if c % p == 0:
        raise ValueError("c must be prime to p")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")


def weil_inner_naive(p: int, c: int, U: int) -> list[int]:
    """Inner sums sum_{u<=U} (u/p)((un - 4c)/p) for n = 1..p-1, by direct Legendre evaluation."""
    return [
        sum(legendre(u, p) * legendre(u * n - 4 * c, p) for u in range(1, U + 1))
        for n in range(1, p)
    ]


def weil_inner_table(p: int, c: int, U: int) -> np.ndarray:
    chi = character_values(p)
    n = np.arange(1, p, dtype=np.int64)
    inner = np.zeros(p - 1, dtype=np.int64)
    for u in range(1, U + 1):
        if chi[u] == 0:
            continue
        inner += chi[u] * chi[(u * n - 4 * c) % p]
    return inner


def _power_sum(inner, r: int) -> int:
    counts = Counter(abs(int(v)) for v in inner)
    return sum(k * v ** (2 * r) for v, k in counts.items())


def weil_moment(p: Modulus | int, c: int, U: int, r: int, naive: bool = False,
                partner: int | None = None) -> MomentReport:
    """Sum over n = 1..p-1 of |sum_{u<=U} (u/p)((un - 4c)/p)|^(2r), against U^r p + U^(2r) sqrt(p).

    ``naive=True`` runs the plain double loop through ``legendre``; the default
    path reuses one character table and vectorizes over n.
    """
    p = as_prime(p)
    _check_moment_args(p, c, U, r)
    inner = weil_inner_naive(p, c, U) if naive else weil_inner_table(p, c, U)
    value = _power_sum(inner, r)
    bound = weil_bound(p, U, r)
    return MomentReport(r, U, value, bound, value / bound, partner)


def inverse_family(inst: HyperbolaInstance, H: int) -> SpacedFamily:
    """The shifts -c / b' mod p for 1 <= b' <= H // 2, sorted."""
    p, c = inst.prime, inst.c
    if not 2 <= H <= p:
        raise ValueError(f"H must lie in [2, p], got H={H}")
    return SpacedFamily(p, tuple(sorted(-c * invert(b, p) % p for b in range(1, H // 2 + 1))))


def min_circular_gap(family: SpacedFamily) -> int:
    pts = family.points
    if len(pts) < 2:
        raise ValueError("need at least two points")
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(family.p - pts[-1] + pts[0])
    return min(min(g, family.p - g) for g in gaps)


def min_circular_gap_pairs(family: SpacedFamily) -> int:
    """Same quantity by checking every pair; used as a cross-check."""
    pts = family.points
    if len(pts) < 2:
        raise ValueError("need at least two points")
    return min(
        circ_dist(a, b, family.p) for i, a in enumerate(pts) for b in pts[i + 1 :]
    )
