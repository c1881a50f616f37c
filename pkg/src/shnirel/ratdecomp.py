"""Additive splits of rational integers into odd primes and into primes
congruent to 3 mod 4.

Covers fixed-length splits with canonical witnesses, minimal-length
search, residue-class exception scans over a range, and the chain
construction that reaches every large integer with three to six terms
from the 3 mod 4 class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO

from .primes import PrimeTable

_shared_table: PrimeTable | None = None
_odd_pool: list[int] = []
_odd_set: frozenset[int] = frozenset()
_r34_pool: list[int] = []
_r34_set: frozenset[int] = frozenset()


def _grow(limit: int) -> None:
    global _shared_table, _odd_pool, _odd_set, _r34_pool, _r34_set
    if _shared_table is not None and _shared_table.limit >= limit:
        return
    _shared_table = PrimeTable.sieve(max(limit, 1 << 16))
    _odd_pool = _shared_table.primes[1:]
    _odd_set = frozenset(_odd_pool)
    _r34_pool = _shared_table.residue_class(3)
    _r34_set = frozenset(_r34_pool)


class SearchExhausted(Exception):
    """No decomposition of the requested shape exists."""


class HypothesisViolation(Exception):
    """A split that scanned evidence guarantees failed to materialize."""


def _k_smallest_split(
    n: int, k: int, pool: list[int], members: frozenset[int]
) -> tuple[int, ...] | None:
    """Lexicographically smallest non-decreasing k-tuple from pool summing
    to n, repeats allowed, or None."""
    if k == 1:
        return (n,) if n in members else None
    out: list[int] = []

    def rec(rest: int, terms: int, lo: int) -> bool:
        if terms == 1:
            if rest >= out[-1] and rest in members:
                out.append(rest)
                return True
            return False
        for idx in range(lo, len(pool)):
            p = pool[idx]
            if p * terms > rest:
                break
            out.append(p)
            if rec(rest - p, terms - 1, idx):
                return True
            out.pop()
        return False

    if rec(n, k, 0):
        return tuple(out)
    return None


def split_into_odd_primes(n: int, k: int) -> tuple[int, ...] | None:
    """n as a sum of k odd primes, largest term first, or None.

    The witness is the lexicographically smallest non-decreasing
    solution, reported in descending order. A sum of k odd terms shares
    the parity of k, so mismatched inputs fail without search.
    """
    if k < 1 or n < 3 * k or n % 2 != k % 2:
        return None
    _grow(n)
    asc = _k_smallest_split(n, k, _odd_pool, _odd_set)
    return None if asc is None else tuple(reversed(asc))


def split_into_residue34_primes(n: int, k: int) -> tuple[int, ...] | None:
    """n as a sum of k primes all congruent to 3 mod 4, largest first.

    Such a sum is 3k mod 4, so anything off that residue fails fast.
    """
    if k < 1 or n < 3 * k or (n - 3 * k) % 4 != 0:
        return None
    _grow(n)
    asc = _k_smallest_split(n, k, _r34_pool, _r34_set)
    return None if asc is None else tuple(reversed(asc))


def goldbach_pair(n: int) -> tuple[int, int]:
    """Even n of at least 6 as p + q, both odd prime, smaller part minimal."""
    if n % 2 or n < 6:
        raise ValueError("goldbach_pair needs an even integer of at least 6")
    got = split_into_odd_primes(n, 2)
    if got is None:
        raise SearchExhausted(f"no two-odd-prime split of {n}")
    return (got[0], got[1])


def four_odd_primes(n: int) -> tuple[int, int, int, int]:
    """Even n of at least 12 as a sum of four odd primes."""
    if n % 2 or n < 12:
        raise ValueError("four_odd_primes needs an even integer of at least 12")
    got = split_into_odd_primes(n, 4)
    if got is None:
        raise SearchExhausted(f"no four-odd-prime split of {n}")
    return (got[0], got[1], got[2], got[3])


def min_odd_prime_terms(n: int, max_terms: int = 8) -> tuple[int, tuple[int, ...]]:
    """Fewest odd primes summing to n, with the canonical witness."""
    for k in range(1, max_terms + 1):
        got = split_into_odd_primes(n, k)
        if got is not None:
            return (k, got)
    raise SearchExhausted(f"{n} is not a sum of up to {max_terms} odd primes")


@dataclass(frozen=True)
class HypothesisSpec:
    """One residue-class claim: every large n matching residue mod 4 is a
    sum of k primes congruent to 3 mod 4."""

    index: int
    residue: int
    k: int


HYPOTHESES: dict[int, HypothesisSpec] = {
    1: HypothesisSpec(1, 2, 2),
    2: HypothesisSpec(2, 1, 3),
    3: HypothesisSpec(3, 0, 4),
    4: HypothesisSpec(4, 3, 5),
}


@dataclass(frozen=True)
class HypothesisReport:
    """Scan outcome for one residue-class claim over [lo, hi]."""

    spec: HypothesisSpec
    lo: int
    hi: int
    rows: tuple[tuple[int, tuple[int, ...] | None], ...]
    exceptions: tuple[int, ...]

    @property
    def max_exception(self) -> int | None:
        return self.exceptions[-1] if self.exceptions else None

    @property
    def c0_candidate(self) -> int | None:
        """Smallest threshold consistent with the scan: one residue step
        past the largest failure."""
        if not self.exceptions:
            return None
        return self.exceptions[-1] + 4

    def to_json_dict(self) -> dict:
        return {
            "hypothesis": self.spec.index,
            "residue": self.spec.residue,
            "k": self.spec.k,
            "lo": self.lo,
            "hi": self.hi,
            "rows": [
                {"n": n, "witness": None if w is None else list(w)}
                for n, w in self.rows
            ],
            "exceptions": list(self.exceptions),
            "max_exception": self.max_exception,
            "c0_candidate": self.c0_candidate,
        }


def hypothesis_scan(index: int, lo: int, hi: int) -> HypothesisReport:
    """Try the index-th residue-class split on every matching n in [lo, hi]."""
    spec = HYPOTHESES.get(index)
    if spec is None:
        raise ValueError(f"hypothesis index must be one of {sorted(HYPOTHESES)}")
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    start = lo + (spec.residue - lo) % 4
    rows: list[tuple[int, tuple[int, ...] | None]] = []
    exceptions: list[int] = []
    _grow(hi)
    for n in range(start, hi + 1, 4):
        wit = split_into_residue34_primes(n, spec.k)
        rows.append((n, wit))
        if wit is None:
            exceptions.append(n)
    return HypothesisReport(spec, lo, hi, tuple(rows), tuple(exceptions))


def write_hypothesis_csv(report: HypothesisReport, fh: IO[str]) -> None:
    fh.write("n,residue,k,witness\n")
    for n, wit in report.rows:
        cell = "EMPTY" if wit is None else "+".join(str(p) for p in wit)
        fh.write(f"{n},{report.spec.residue},{report.spec.k},{cell}\n")


def write_hypothesis_json(report: HypothesisReport, fh: IO[str]) -> None:
    json.dump(report.to_json_dict(), fh, sort_keys=True, indent=2)
    fh.write("\n")


# How many copies of 3 shift n down to the residue the three-term split
# covers, keyed by n mod 4.
_EXTRA_THREES = {1: 0, 0: 1, 3: 2, 2: 3}

CHAIN_THRESHOLD = 18
CHAIN_MAX_TERMS = 6


@dataclass(frozen=True)
class ChainResult:
    """n written as three to six primes congruent to 3 mod 4: a three-term
    core plus up to three copies of 3."""

    n: int
    extras: tuple[int, ...]
    base: tuple[int, ...]

    @property
    def terms(self) -> tuple[int, ...]:
        return self.base + self.extras

    @property
    def m(self) -> int:
        return len(self.base) + len(self.extras)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "base": list(self.base),
            "extras": list(self.extras),
            "terms": list(self.terms),
            "m": self.m,
        }


def residue34_chain(n: int, threshold: int = CHAIN_THRESHOLD) -> ChainResult:
    """Write n at or above the threshold as a sum of three to six primes
    congruent to 3 mod 4.

    Stripping 0 to 3 copies of 3 moves any residue onto 1 mod 4 while
    keeping the remainder at or above 9, where the three-term split is
    available. A failing remainder would refute the scanned claim, so it
    raises rather than returning None.
    """
    if n < threshold:
        raise ValueError(f"chain construction starts at {threshold}")
    count = _EXTRA_THREES[n % 4]
    rest = n - 3 * count
    base = split_into_residue34_primes(rest, 3)
    if base is None:
        raise HypothesisViolation(
            f"{rest} has no three-term split into primes congruent to 3 mod 4"
        )
    return ChainResult(n, (3,) * count, base)


__all__ = [
    "CHAIN_MAX_TERMS",
    "CHAIN_THRESHOLD",
    "ChainResult",
    "HYPOTHESES",
    "HypothesisReport",
    "HypothesisSpec",
    "HypothesisViolation",
    "SearchExhausted",
    "four_odd_primes",
    "goldbach_pair",
    "hypothesis_scan",
    "min_odd_prime_terms",
    "residue34_chain",
    "split_into_odd_primes",
    "split_into_residue34_primes",
    "write_hypothesis_csv",
    "write_hypothesis_json",
]
