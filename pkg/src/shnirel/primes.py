"""Rational prime sieving and testing plus Gaussian prime classification
and region-filtered enumeration."""

from __future__ import annotations

import os
import struct
from enum import Enum
from math import isqrt

from .zcore import GaussianInt, Parity, Region, in_region

# Witness set is deterministic for every n below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

CACHE_MAGIC = b"SHNPRIM1"
CACHE_ENV = "SHNIREL_CACHE"


def is_rational_prime(n: int) -> bool:
    """Deterministic primality of |n| for anything the desk scale needs."""
    n = abs(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
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


class PrimeTable:
    """Sieved primes up to a limit, with mod-4 residue views."""

    __slots__ = ("limit", "primes", "_flags", "_mod4")

    def __init__(self, limit: int, primes: list[int]):
        if limit < 2:
            raise ValueError("limit must be at least 2")
        self.limit = limit
        self.primes = primes
        flags = bytearray(limit + 1)
        for p in primes:
            flags[p] = 1
        self._flags = flags
        self._mod4: dict[int, list[int]] = {}

    @classmethod
    def sieve(cls, limit: int) -> "PrimeTable":
        if limit < 2:
            raise ValueError("limit must be at least 2")
        flags = bytearray([1]) * (limit + 1)
        flags[0] = flags[1] = 0
        for p in range(2, isqrt(limit) + 1):
            if flags[p]:
                step = p
                start = p * p
                flags[start :: step] = bytearray(len(range(start, limit + 1, step)))
        table = cls.__new__(cls)
        table.limit = limit
        table.primes = [i for i in range(2, limit + 1) if flags[i]]
        table._flags = flags
        table._mod4 = {}
        return table

    def is_prime(self, n: int) -> bool:
        if n < 0 or n > self.limit:
            raise ValueError(f"{n} outside sieve limit {self.limit}")
        return bool(self._flags[n])

    def residue_class(self, r: int) -> list[int]:
        """Primes congruent to r mod 4, ascending."""
        got = self._mod4.get(r)
        if got is None:
            got = [p for p in self.primes if p % 4 == r]
            self._mod4[r] = got
        return got

    def save(self, path: str) -> None:
        payload = struct.pack(f"<{len(self.primes)}Q", *self.primes)
        tmp = f"{path}.tmp"
        with open(tmp, "wb") as fh:
            fh.write(CACHE_MAGIC)
            fh.write(payload)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str) -> "PrimeTable":
        with open(path, "rb") as fh:
            magic = fh.read(len(CACHE_MAGIC))
            if magic != CACHE_MAGIC:
                raise ValueError(f"{path}: bad prime-cache header")
            body = fh.read()
        if len(body) % 8 or not body:
            raise ValueError(f"{path}: truncated prime cache")
        primes = list(struct.unpack(f"<{len(body) // 8}Q", body))
        # Coverage can only be claimed up to the largest stored prime.
        return cls(primes[-1], primes)


def ensure_table(limit: int, cache_path: str | None = None) -> PrimeTable:
    """Return a table covering limit, reusing or refreshing the cache file."""
    if cache_path and os.path.exists(cache_path):
        try:
            table = PrimeTable.load(cache_path)
        except (OSError, ValueError):
            table = None
        if table is not None and table.limit >= limit:
            return table
    table = PrimeTable.sieve(limit)
    if cache_path:
        table.save(cache_path)
    return table


class PrimeClass(Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


def two_squares(p: int) -> tuple[int, int]:
    """Write a prime p = 1 mod 4 as a*a + b*b with a > b >= 1.

    Take x with x^2 = -1 mod p (a non-residue raised to (p-1)/4) and run
    the Euclidean algorithm on (p, x); the first remainder at or below
    sqrt(p) is one leg, and the other leg falls out of p - b^2.
    """
    if p % 4 != 1 or not is_rational_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    half = (p - 1) // 2
    x = 0
    c = 2
    while True:
        if pow(c, half, p) == p - 1:
            x = pow(c, half // 2, p)
            break
        c += 1
    a, b = p, x
    s = isqrt(p)
    while b > s:
        a, b = b, a % b
    other = isqrt(p - b * b)
    if other * other + b * b != p:
        raise AssertionError(f"two-squares failed for {p}")
    return (max(b, other), min(b, other))


def is_gaussian_prime(z: GaussianInt) -> bool:
    n = z.norm()
    if n <= 1:
        return False
    if is_rational_prime(n):
        return True
    if z.re == 0 or z.im == 0:
        m = abs(z.re) + abs(z.im)
        return m % 4 == 3 and is_rational_prime(m)
    return False


def classify_gaussian_prime(z: GaussianInt) -> PrimeClass:
    if not is_gaussian_prime(z):
        raise ValueError(f"{z} is not a Gaussian prime")
    n = z.norm()
    if n == 2:
        return PrimeClass.RAMIFIED
    if is_rational_prime(n):
        return PrimeClass.SPLIT
    return PrimeClass.INERT


def gaussian_primes_in(
    region: Region,
    norm_bound: int,
    parity_filter: Parity | None = None,
    table: PrimeTable | None = None,
) -> list[GaussianInt]:
    """All Gaussian primes in the region with norm below norm_bound,
    sorted by (norm, re, im)."""
    if norm_bound < 2:
        raise ValueError("norm_bound must be at least 2")
    out: list[GaussianInt] = []

    def keep(z: GaussianInt) -> None:
        if in_region(z, region):
            out.append(z)

    if norm_bound > 2 and parity_filter is not Parity.ODD:
        for z in (GaussianInt(1, 1), GaussianInt(-1, 1), GaussianInt(-1, -1), GaussianInt(1, -1)):
            keep(z)

    limit = norm_bound - 1
    if parity_filter is not Parity.EVEN and limit >= 3:
        if table is None or table.limit < limit:
            table = PrimeTable.sieve(limit)
        for p in table.residue_class(1):
            if p > limit:
                break
            a, b = two_squares(p)
            for zr, zi in (
                (a, b), (-a, b), (a, -b), (-a, -b),
                (b, a), (-b, a), (b, -a), (-b, -a),
            ):
                keep(GaussianInt(zr, zi))
        top = isqrt(limit)
        for q in table.residue_class(3):
            if q > top:
                break
            for zr, zi in ((q, 0), (-q, 0), (0, q), (0, -q)):
                keep(GaussianInt(zr, zi))

    out.sort(key=GaussianInt.key)
    return out


def sector_gap_stats(norm_bound: int, table: PrimeTable | None = None) -> tuple[int, int]:
    """(count, min re-im) over odd sector primes with norm below norm_bound."""
    primes = gaussian_primes_in(Region.PRIME_SECTOR, norm_bound, Parity.ODD, table)
    if not primes:
        raise ValueError("no odd sector primes below bound")
    gap = min(p.re - p.im for p in primes)
    return (len(primes), gap)


__all__ = [
    "CACHE_ENV",
    "CACHE_MAGIC",
    "PrimeClass",
    "PrimeTable",
    "classify_gaussian_prime",
    "ensure_table",
    "gaussian_primes_in",
    "is_gaussian_prime",
    "is_rational_prime",
    "sector_gap_stats",
    "two_squares",
]
