"""Constructive solvers for two-row matrix systems: nonnegative integer
matrices whose columns sum to primes and whose rows sum to a prescribed
pair (a, b).

Three flavors are covered, named after their command-line tokens: thm1
fixes four columns with odd prime targets, thm2 uses the fewest odd
prime targets, and conj1 replaces the column-sum constraint with a
square-sum one, so each column is a Gaussian prime in the closed first
quadrant and its target is the norm. A bounded exhaustive search backs
all three for cross-checking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import IO

from .gaussdecomp import NormPolicy, find_decomposition
from .primes import (
    PrimeTable,
    gaussian_primes_in,
    is_gaussian_prime,
    is_rational_prime,
)
from .ratdecomp import SearchExhausted, four_odd_primes, min_odd_prime_terms
from .zcore import GaussianInt, Parity, Region, in_region

BRUTE_FORCE_LIMIT = 200


class BoundExceeded(Exception):
    """Inputs past the exhaustive-search guard."""


class SystemKind(Enum):
    FOUR_COLUMNS = "thm1"
    MIN_COLUMNS = "thm2"
    SQUARE_COLUMNS = "conj1"


@dataclass(frozen=True)
class SolutionMatrix:
    """A solved system: column j satisfies row_a[j] + row_b[j] = targets[j]
    (or a square sum for the conj1 kind), rows sum to a and b.

    Columns are kept in descending (target, x1, x2) order.
    """

    kind: SystemKind
    targets: tuple[int, ...]
    row_a: tuple[int, ...]
    row_b: tuple[int, ...]
    case: int | None = None

    @classmethod
    def from_columns(
        cls,
        kind: SystemKind,
        columns: list[tuple[int, int, int]],
        case: int | None,
    ) -> "SolutionMatrix":
        cols = sorted(columns, reverse=True)
        return cls(
            kind,
            tuple(c[0] for c in cols),
            tuple(c[1] for c in cols),
            tuple(c[2] for c in cols),
            case,
        )

    @property
    def a(self) -> int:
        return sum(self.row_a)

    @property
    def b(self) -> int:
        return sum(self.row_b)

    @property
    def k(self) -> int:
        return len(self.targets)

    def columns(self) -> list[tuple[int, int, int]]:
        return list(zip(self.targets, self.row_a, self.row_b))

    def validate(self) -> None:
        """Raise ValueError unless the matrix solves its system."""
        if not (len(self.targets) == len(self.row_a) == len(self.row_b)):
            raise ValueError("ragged matrix")
        if not self.targets:
            raise ValueError("empty matrix")
        if self.kind is SystemKind.FOUR_COLUMNS and self.k != 4:
            raise ValueError(f"thm1 needs exactly 4 columns, got {self.k}")
        for t, x1, x2 in self.columns():
            if x1 < 0 or x2 < 0:
                raise ValueError(f"negative entry in column with target {t}")
            if self.kind is SystemKind.SQUARE_COLUMNS:
                z = GaussianInt(x1, x2)
                if x1 * x1 + x2 * x2 != t:
                    raise ValueError(f"column ({x1},{x2}) misses square target {t}")
                if not is_gaussian_prime(z):
                    raise ValueError(f"column entry {z} is not a Gaussian prime")
                if (x1 + x2) % 2 == 0:
                    raise ValueError(f"column entry {z} is even")
                if not in_region(z, Region.PRIME_QUADRANT):
                    raise ValueError(f"column entry {z} is outside the first quadrant")
            else:
                if x1 + x2 != t:
                    raise ValueError(f"column ({x1},{x2}) misses target {t}")
                if t % 2 == 0 or not is_rational_prime(t):
                    raise ValueError(f"target {t} is not an odd prime")

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "case": self.case,
            "a": self.a,
            "b": self.b,
            "k": self.k,
            "columns": [
                {"target": t, "x1": x1, "x2": x2} for t, x1, x2 in self.columns()
            ],
        }


def write_matrix_csv(matrix: SolutionMatrix, fh: IO[str]) -> None:
    fh.write("target,x1,x2\n")
    for t, x1, x2 in matrix.columns():
        fh.write(f"{t},{x1},{x2}\n")


def write_matrix_json(matrix: SolutionMatrix, fh: IO[str]) -> None:
    json.dump(matrix.to_json_dict(), fh, sort_keys=True, indent=2)
    fh.write("\n")


def solve_four_columns(a: int, b: int) -> SolutionMatrix:
    """Four odd prime targets with row sums (a, b), a >= b >= 1, a+b even.

    The targets are the canonical four-odd-prime split p >= q >= r >= l
    of a + b. Which suffix of the split b fits under picks one of four
    closed fill patterns; every pattern keeps entries nonnegative.
    """
    if b < 1 or a < b:
        raise ValueError("need a >= b >= 1")
    n = a + b
    if n % 2 or n < 12:
        raise ValueError("a + b must be an even integer of at least 12")
    p, q, r, l = four_odd_primes(n)
    if b <= l:
        case = 1
        cols = [(p, p, 0), (q, q, 0), (r, r, 0), (l, l - b, b)]
    elif b <= r + l:
        case = 2
        cols = [(p, p, 0), (q, q, 0), (r, r + l - b, b - l), (l, 0, l)]
    elif b <= q + r + l:
        case = 3
        cols = [(p, p, 0), (q, q + r + l - b, b - r - l), (r, 0, r), (l, 0, l)]
    else:
        case = 4
        cols = [(p, a, b - q - r - l), (q, 0, q), (r, 0, r), (l, 0, l)]
    return SolutionMatrix.from_columns(SystemKind.FOUR_COLUMNS, cols, case)


def _fill_second_row(
    targets_desc: tuple[int, ...], b: int
) -> list[tuple[int, int, int]]:
    """Distribute b over the columns, smallest target first."""
    cols: list[tuple[int, int, int]] = []
    rest = b
    for t in reversed(targets_desc):
        x2 = min(rest, t)
        rest -= x2
        cols.append((t, t - x2, x2))
    if rest:
        raise AssertionError("second row exceeds the column capacity")
    return cols


def solve_min_columns(a: int, b: int, max_terms: int = 8) -> SolutionMatrix:
    """Fewest odd prime targets with row sums (a, b), a >= 1, b >= 1."""
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    _, targets = min_odd_prime_terms(a + b, max_terms)
    cols = _fill_second_row(targets, b)
    return SolutionMatrix.from_columns(SystemKind.MIN_COLUMNS, cols, None)


def solve_square_columns(a: int, b: int, max_terms: int = 6) -> SolutionMatrix:
    """Columns are odd Gaussian primes x1 + x2*i in the closed first
    quadrant whose norms are the targets; rows sum to (a, b); as few
    columns as possible."""
    z = GaussianInt(a, b)
    if a < 0 or b < 0 or z.is_zero():
        raise ValueError("need a nonzero target with a >= 0 and b >= 0")
    dec = find_decomposition(z, Region.PRIME_QUADRANT, max_terms, NormPolicy.NONE)
    if dec is None:
        raise SearchExhausted(
            f"{z} is not a sum of up to {max_terms} first-quadrant Gaussian primes"
        )
    cols = [(s.norm(), s.re, s.im) for s in dec.summands()]
    return SolutionMatrix.from_columns(SystemKind.SQUARE_COLUMNS, cols, None)


def _prime_targets(n: int, k: int, pool: list[int], members: set[int]):
    """Smallest non-decreasing k-tuple of pool primes summing to n."""
    out: list[int] = []

    def rec(rest: int, terms: int, lo: int) -> bool:
        if terms == 1:
            if (not out or rest >= out[-1]) and rest in members:
                out.append(rest)
                return True
            return False
        for i in range(lo, len(pool)):
            p = pool[i]
            if p * terms > rest:
                break
            out.append(p)
            if rec(rest - p, terms - 1, i):
                return True
            out.pop()
        return False

    return tuple(out) if rec(n, k, 0) else None


def _brute_gaussian(a: int, b: int, max_columns: int) -> SolutionMatrix | None:
    pool = [
        z
        for z in gaussian_primes_in(
            Region.PRIME_QUADRANT, a * a + b * b + 1, Parity.ODD
        )
        if z.re <= a and z.im <= b
    ]
    index = {(z.re, z.im): i for i, z in enumerate(pool)}
    acc: list[GaussianInt] = []

    def rec(ra: int, rb: int, terms: int, lo: int) -> bool:
        if terms == 1:
            i = index.get((ra, rb))
            if i is not None and i >= lo:
                acc.append(pool[i])
                return True
            return False
        if 3 * terms > ra + rb:
            return False
        cap = ra * ra + rb * rb
        for i in range(lo, len(pool)):
            z = pool[i]
            if z.norm() > cap:
                break
            if z.re > ra or z.im > rb:
                continue
            acc.append(z)
            if rec(ra - z.re, rb - z.im, terms - 1, i):
                return True
            acc.pop()
        return False

    for k in range(1, max_columns + 1):
        if k % 2 != (a + b) % 2:
            continue
        acc.clear()
        if rec(a, b, k, 0):
            cols = [(z.norm(), z.re, z.im) for z in acc]
            return SolutionMatrix.from_columns(SystemKind.SQUARE_COLUMNS, cols, None)
    return None


def brute_force_matrix(
    a: int, b: int, kind: SystemKind, max_columns: int = 6
) -> SolutionMatrix | None:
    """Exhaustive reference search, independent of the closed-form
    solvers, for cross-checking on small inputs."""
    if a + b > BRUTE_FORCE_LIMIT:
        raise BoundExceeded(f"exhaustive search is guarded at a + b <= {BRUTE_FORCE_LIMIT}")
    if a < 0 or b < 0 or a + b == 0:
        raise ValueError("need nonnegative a, b, not both zero")
    if kind is SystemKind.SQUARE_COLUMNS:
        return _brute_gaussian(a, b, max_columns)
    n = a + b
    table = PrimeTable.sieve(max(n, 8))
    pool = [p for p in table.primes if p % 2]
    members = set(pool)
    widths = [4] if kind is SystemKind.FOUR_COLUMNS else range(1, max_columns + 1)
    for k in widths:
        if n % 2 != k % 2 or n < 3 * k:
            continue
        targets = _prime_targets(n, k, pool, members)
        if targets is None:
            continue
        cols = _fill_second_row(tuple(reversed(targets)), b)
        return SolutionMatrix.from_columns(kind, cols, None)
    return None


def _prime_target_tuples(n: int, k: int, pool: list[int], members: set[int]):
    """All non-decreasing k-tuples of pool primes summing to n,
    ascending lexicographic order."""

    def rec(rest: int, terms: int, lo: int, acc: tuple[int, ...]):
        if terms == 1:
            if rest in members and (not acc or rest >= acc[-1]):
                yield acc + (rest,)
            return
        for i in range(lo, len(pool)):
            p = pool[i]
            if p * terms > rest:
                break
            yield from rec(rest - p, terms - 1, i, acc + (p,))

    yield from rec(n, k, 0, ())


def _second_row_fills(targets_desc: tuple[int, ...], b: int):
    """All ways to spread b over the columns with 0 <= x2_j <= t_j.

    Columns run in descending target order; within a run of equal
    targets x2 must not decrease, so each column multiset shows up
    exactly once.
    """
    width = len(targets_desc)
    suffix = [0] * (width + 1)
    for j in range(width - 1, -1, -1):
        suffix[j] = suffix[j + 1] + targets_desc[j]

    def rec(j: int, brem: int, acc: tuple[int, ...]):
        t = targets_desc[j]
        lo = max(0, brem - suffix[j + 1])
        if j > 0 and t == targets_desc[j - 1]:
            lo = max(lo, acc[-1])
        if j == width - 1:
            if lo <= brem <= t:
                yield acc + (brem,)
            return
        for x in range(lo, min(t, brem) + 1):
            yield from rec(j + 1, brem - x, acc + (x,))

    yield from rec(0, b, ())


def _gaussian_all(a: int, b: int, max_columns: int):
    pool = [
        z
        for z in gaussian_primes_in(
            Region.PRIME_QUADRANT, a * a + b * b + 1, Parity.ODD
        )
        if z.re <= a and z.im <= b
    ]
    index = {(z.re, z.im): i for i, z in enumerate(pool)}

    def rec(ra: int, rb: int, terms: int, lo: int, acc: tuple):
        if terms == 1:
            i = index.get((ra, rb))
            if i is not None and i >= lo:
                yield acc + (pool[i],)
            return
        if 3 * terms > ra + rb:
            return
        cap = ra * ra + rb * rb
        for i in range(lo, len(pool)):
            z = pool[i]
            if z.norm() > cap:
                break
            if z.re > ra or z.im > rb:
                continue
            yield from rec(ra - z.re, rb - z.im, terms - 1, i, acc + (z,))

    for k in range(1, max_columns + 1):
        if k % 2 != (a + b) % 2:
            continue
        found = False
        for terms in rec(a, b, k, 0, ()):
            found = True
            cols = [(z.norm(), z.re, z.im) for z in terms]
            yield SolutionMatrix.from_columns(SystemKind.SQUARE_COLUMNS, cols, None)
        if found:
            return


def brute_force_matrices(a: int, b: int, kind: SystemKind, max_columns: int = 6):
    """Yield every solution matrix the brute-force search admits.

    Four-column systems enumerate all width-4 matrices; the other
    kinds enumerate every matrix at the smallest feasible width.
    Order is deterministic, so membership checks against solver
    output terminate early in the common case.
    """
    if a + b > BRUTE_FORCE_LIMIT:
        raise BoundExceeded(f"exhaustive search is guarded at a + b <= {BRUTE_FORCE_LIMIT}")
    if a < 0 or b < 0 or a + b == 0:
        raise ValueError("need nonnegative a, b, not both zero")
    if kind is SystemKind.SQUARE_COLUMNS:
        yield from _gaussian_all(a, b, max_columns)
        return
    n = a + b
    table = PrimeTable.sieve(max(n, 8))
    pool = [p for p in table.primes if p % 2]
    members = set(pool)
    widths = [4] if kind is SystemKind.FOUR_COLUMNS else range(1, max_columns + 1)
    for k in widths:
        if n % 2 != k % 2 or n < 3 * k:
            continue
        found = False
        for targets in _prime_target_tuples(n, k, pool, members):
            desc = tuple(reversed(targets))
            for x2 in _second_row_fills(desc, b):
                found = True
                cols = [(t, t - x, x) for t, x in zip(desc, x2)]
                yield SolutionMatrix.from_columns(kind, cols, None)
        if found and kind is not SystemKind.FOUR_COLUMNS:
            return


__all__ = [
    "BRUTE_FORCE_LIMIT",
    "BoundExceeded",
    "SolutionMatrix",
    "SystemKind",
    "brute_force_matrices",
    "brute_force_matrix",
    "solve_four_columns",
    "solve_min_columns",
    "solve_square_columns",
    "write_matrix_csv",
    "write_matrix_json",
]
