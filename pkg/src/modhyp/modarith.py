"""Modular arithmetic kernel: primality, residues mod p, Legendre symbol."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

P_LIMIT = 1 << 62

# Deterministic for n < 3.3 * 10^24, which covers the word range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# Largest modulus for which a full character table is cached.
_TABLE_LIMIT = 1 << 22


def is_prime(n: int) -> bool:
    if n < 0 or n >= P_LIMIT:
        raise ValueError(f"is_prime expects 0 <= n < 2^62, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes q with lo <= q <= hi, ascending."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


@dataclass(frozen=True)
class Modulus:
    """An odd prime 3 <= p < 2^62."""

    p: int

    def __post_init__(self):
        p = self.p
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p < 3 or p >= P_LIMIT:
            raise ValueError(f"modulus out of range [3, 2^62): {p}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")

    def __int__(self):
        return self.p

    def residue(self, value: int) -> Residue:
        return Residue(value % self.p, self)


def as_prime(p: Modulus | int) -> int:
    """Return the integer modulus, validating plain ints."""
    if isinstance(p, Modulus):
        return p.p
    return Modulus(p).p


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus.p}")

    def __int__(self):
        return self.value

    def __mul__(self, other: Residue) -> Residue:
        return mul_mod(self, other)

    def __pow__(self, e: int) -> Residue:
        return pow_mod(self, e)


def mul_mod(a: Residue, b: Residue) -> Residue:
    if a.modulus != b.modulus:
        raise ValueError(f"moduli differ: {a.modulus.p} vs {b.modulus.p}")
    return Residue(a.value * b.value % a.modulus.p, a.modulus)


def pow_mod(a: Residue, e: int) -> Residue:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    p = a.modulus.p
    result, base = 1, a.value
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    # 0^0 = 1 by convention
    return Residue(result % p, a.modulus)


def invert(a: int, p: int) -> int:
    """Inverse of a modulo p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    r0, r1 = p, a
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r0 != 1:
        raise ZeroDivisionError(f"{a} is not invertible mod {p}")
    return t0 % p


def inv_mod(a: Residue) -> Residue:
    return Residue(invert(a.value, a.modulus.p), a.modulus)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0 by reciprocity descent."""
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def legendre(a: int, p: Modulus | int) -> int:
    """Legendre symbol (a/p); a may be any integer, including negatives."""
    if isinstance(p, Modulus):
        p = p.p
    return jacobi(a, p)


def euler_criterion(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@lru_cache(maxsize=128)
def character_table(p: int) -> tuple[int, ...]:
    """Quadratic character of every residue mod p, built by marking squares.

    Only available for p below 2^22; larger moduli go through ``legendre``.
    """
    if p >= _TABLE_LIMIT:
        raise ValueError(f"character table not cached for p >= 2^22 (got {p})")
    chi = [-1] * p
    chi[0] = 0
    for k in range(1, (p - 1) // 2 + 1):
        chi[k * k % p] = 1
    return tuple(chi)


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo the odd prime p (Tonelli-Shanks).

    Raises ValueError when a is a nonresidue.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
