"""Points of the modular hyperbola xy = c (mod p) and the smallest box holding two of them.

Boxes are cyclic squares {X+1..X+H} x {Y+1..Y+H} in the residue plane. Two
distinct points fit in a box of side H iff both cyclic coordinate distances
are at most H - 1.

Two routes compute the minimal side:

* ``min_box_oracle`` scans every pair of points.
* ``min_box_fast`` never looks at pairs. Points (x, y) and (x + a, y + s*b)
  both lie on the curve iff ``s*b*x^2 + a*s*b*x + a*c = 0`` has a root, i.e.
  iff ``ab'(ab' - 4c)`` is a square or zero mod p with ``b' = s*b``. The
  search walks H upward testing offsets 1 <= a, b <= H - 1 and both signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .modarith import (
    _TABLE_LIMIT,
    Modulus,
    character_table,
    invert,
    jacobi,
    sqrt_mod,
)

# Rows per block in the pair scan; bounds oracle memory at ~BLOCK * p entries.
_ORACLE_BLOCK = 512


@dataclass(frozen=True)
class HyperbolaInstance:
    p: Modulus
    c: int

    def __post_init__(self):
        if not isinstance(self.p, Modulus):
            object.__setattr__(self, "p", Modulus(self.p))
        if not 1 <= self.c <= self.p.p - 1:
            raise ValueError(f"c must lie in [1, p-1], got c={self.c}, p={self.p.p}")

    @property
    def prime(self) -> int:
        return self.p.p

    def contains(self, pt: Point) -> bool:
        p = self.prime
        return 0 < pt.x < p and 0 < pt.y < p and pt.x * pt.y % p == self.c


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True)
class BoxSpec:
    X: int
    Y: int
    H: int

    def __post_init__(self):
        if self.H < 1:
            raise ValueError(f"box side must be positive, got {self.H}")
        if self.X < 0 or self.Y < 0:
            raise ValueError("box corner must be nonnegative")


@dataclass(frozen=True)
class OffsetWitness:
    """Coordinate difference between two curve points: dx = a, dy = b_sign * b_magnitude."""

    a: int
    b_magnitude: int
    b_sign: int

    def __post_init__(self):
        if self.b_sign not in (1, -1):
            raise ValueError(f"b_sign must be +1 or -1, got {self.b_sign}")
        if self.a < 1 or self.b_magnitude < 1:
            raise ValueError("offsets must be positive")


@dataclass(frozen=True)
class MinBoxResult:
    h_star: int
    witness: tuple[Point, Point]
    offset: OffsetWitness


def _symbol(p: int) -> Callable[[int], int]:
    if p < _TABLE_LIMIT:
        table = character_table(p)
        return lambda n: table[n % p]
    return lambda n: jacobi(n, p)


def enumerate_points(inst: HyperbolaInstance) -> list[Point]:
    p, c = inst.prime, inst.c
    return [Point(x, c * invert(x, p) % p) for x in range(1, p)]


def circ_dist(u: int, v: int, p: Modulus | int) -> int:
    if isinstance(p, Modulus):
        p = p.p
    d = abs(u - v) % p
    return min(d, p - d)


def chebyshev(p: int, P: Point, Q: Point) -> int:
    return max(circ_dist(P.x, Q.x, p), circ_dist(P.y, Q.y, p))


def box_count(inst: HyperbolaInstance, box: BoxSpec) -> int:
    p = inst.prime
    if box.H > p:
        raise ValueError(f"box side {box.H} exceeds p={p}")
    if box.X >= p or box.Y >= p:
        raise ValueError("box corner must be reduced mod p")
    return sum(
        1
        for pt in enumerate_points(inst)
        if (pt.x - box.X - 1) % p < box.H and (pt.y - box.Y - 1) % p < box.H
    )


def offset_between(p: int, P: Point, Q: Point) -> OffsetWitness:
    """Orient a pair so the x-offset is the short way round, and report it."""
    dx = (Q.x - P.x) % p
    if dx > p - dx:
        P, Q = Q, P
        dx = p - dx
    dy = (Q.y - P.y) % p
    if dy <= p - dy:
        return OffsetWitness(dx, dy, 1)
    return OffsetWitness(dx, p - dy, -1)


def witness_box(inst: HyperbolaInstance, result: MinBoxResult) -> BoxSpec:
    """The box of side h_star whose lower corner sits on the witness pair."""
    p = inst.prime
    P, Q = result.witness
    if circ_dist(P.x, Q.x, p) == (Q.x - P.x) % p:
        lo_x = P.x
    else:
        lo_x = Q.x
    if circ_dist(P.y, Q.y, p) == (Q.y - P.y) % p:
        lo_y = P.y
    else:
        lo_y = Q.y
    return BoxSpec((lo_x - 1) % p, (lo_y - 1) % p, result.h_star)


def _result(p: int, P: Point, Q: Point) -> MinBoxResult:
    if Q < P:
        P, Q = Q, P
    return MinBoxResult(chebyshev(p, P, Q) + 1, (P, Q), offset_between(p, P, Q))


def min_box_oracle(inst: HyperbolaInstance) -> MinBoxResult:
    """Exhaustive scan over all unordered point pairs.

    Ties go to the lexicographically smallest (x1, x2) with x1 < x2.
    """
    p, c = inst.prime, inst.c
    if p < 5:
        raise ValueError(f"min_box needs p >= 5, got {p}")
    xs = np.arange(1, p, dtype=np.int64)
    ys = np.array([c * invert(int(x), p) % p for x in xs], dtype=np.int64)
    n = p - 1
    best, best_pair = p + 1, None
    for lo in range(0, n, _ORACLE_BLOCK):
        hi = min(lo + _ORACLE_BLOCK, n)
        dx = np.abs(xs[lo:hi, None] - xs[None, :])
        dx = np.minimum(dx, p - dx)
        dy = np.abs(ys[lo:hi, None] - ys[None, :])
        dy = np.minimum(dy, p - dy)
        dist = np.maximum(dx, dy)
        # keep only j > i
        dist[np.arange(hi - lo)[:, None] >= np.arange(n)[None, :] - lo] = p + 1
        m = int(dist.min())
        if m < best:
            i, j = np.argwhere(dist == m)[0]
            best, best_pair = m, (lo + int(i), int(j))
    i, j = best_pair
    return _result(p, Point(i + 1, int(ys[i])), Point(j + 1, int(ys[j])))


def _pair_ok(chi, p: int, c4: int, a: int, beta: int) -> bool:
    v = a * beta % p
    return chi(v * (v - c4)) != -1


def criterion_decide(inst: HyperbolaInstance, H: int) -> tuple[bool, OffsetWitness | None]:
    """Is there a box of side H holding two curve points? Decided by Legendre symbols alone.

    Offsets are tried with a outermost, then b, then sign +1 before -1; the
    first success is returned as the witness.
    """
    p, c = inst.prime, inst.c
    if not 2 <= H <= p:
        raise ValueError(f"H must lie in [2, p], got H={H}, p={p}")
    chi = _symbol(p)
    c4 = 4 * c % p
    for a in range(1, H):
        for b in range(1, H):
            for s in (1, -1):
                if _pair_ok(chi, p, c4, a, s * b % p):
                    return True, OffsetWitness(a, b, s)
    return False, None


def criterion_even(inst: HyperbolaInstance, H: int) -> tuple[bool, OffsetWitness | None]:
    """Sufficient test using even offsets a = 2a', b = 2b' only.

    Succeeds iff (a'b'/p)((a'b' - c)/p) = 1 for some 1 <= a', b' <= (H-1)//2.
    Zero symbols do not count, so this can miss pairs the full test finds.
    """
    p, c = inst.prime, inst.c
    if not 2 <= H <= p:
        raise ValueError(f"H must lie in [2, p], got H={H}, p={p}")
    chi = _symbol(p)
    half = (H - 1) // 2
    for a1 in range(1, half + 1):
        for b1 in range(1, half + 1):
            t = a1 * b1
            if chi(t) * chi(t - c) == 1:
                return True, OffsetWitness(2 * a1, 2 * b1, 1)
    return False, None


def _layer(H: int):
    """Offsets (a, b) with max(a, b) = H - 1."""
    m = H - 1
    for b in range(1, m + 1):
        yield m, b
    for a in range(1, m):
        yield a, m


def _fast_h_star(p: int, c: int, chi) -> int:
    c4 = 4 * c % p
    for H in range(2, p + 1):
        for a, b in _layer(H):
            if _pair_ok(chi, p, c4, a, b) or _pair_ok(chi, p, c4, a, p - b):
                return H
    raise AssertionError(f"no two points found for p={p}, c={c}")


def _pairs_for_offset(p: int, c: int, a: int, beta: int):
    """Curve point pairs (x, y), (x + a, y + beta) from roots of beta*x^2 + a*beta*x + a*c."""
    disc = (a * beta) ** 2 - 4 * a * beta * c
    try:
        r = sqrt_mod(disc, p)
    except ValueError:
        return
    inv2b = invert(2 * beta, p)
    for root in {r, (p - r) % p}:
        x = (-a * beta + root) * inv2b % p
        x2 = (x + a) % p
        yield Point(x, c * invert(x, p) % p), Point(x2, c * invert(x2, p) % p)


def min_box_fast(inst: HyperbolaInstance) -> MinBoxResult:
    """Minimal box side via the Legendre-symbol search, with the witness rebuilt from roots.

    All pairs at the minimal side have offsets in the last layer searched, so
    collecting every root there gives the same witness as the oracle.
    """
    p, c = inst.prime, inst.c
    if p < 5:
        raise ValueError(f"min_box needs p >= 5, got {p}")
    chi = _symbol(p)
    h = _fast_h_star(p, c, chi)
    c4 = 4 * c % p
    best = None
    for a, b in _layer(h):
        for beta in (b, p - b):
            if not _pair_ok(chi, p, c4, a, beta):
                continue
            for P, Q in _pairs_for_offset(p, c, a, beta):
                key = (P, Q) if P < Q else (Q, P)
                if best is None or key < best:
                    best = key
    return _result(p, *best)


def max_min_box(p: Modulus | int) -> tuple[int, int]:
    """Worst case of the minimal side over c in [1, p-1]; returns (h_star, smallest such c)."""
    p = Modulus(p).p if not isinstance(p, Modulus) else p.p
    if p < 5:
        raise ValueError(f"min_box needs p >= 5, got {p}")
    chi = _symbol(p)
    best, best_c = 0, 0
    for c in range(1, p):
        h = _fast_h_star(p, c, chi)
        if h > best:
            best, best_c = h, c
    return best, best_c
