"""Sums of Gaussian primes drawn from a planar region.

The searcher finds the canonical minimal decomposition of a target into
region primes, scans whole norm ranges (optionally across processes),
confirms the diagonal-gap obstruction for sector sums exhaustively, and
builds the bounded chains that shed one inert prime to reach an odd
remainder.
"""

from __future__ import annotations

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import IO, Sequence

from .primes import gaussian_primes_in, is_gaussian_prime
from .zcore import (
    ZERO,
    GaussianInt,
    Parity,
    Region,
    Unit,
    congruent_mod_one_plus_i,
    in_region,
    sector_form,
)
from .zcore import parity as parity_of


class NormPolicy(Enum):
    """Constraint on summand norms relative to the target."""

    STRICT_LESS = "strict"
    NONE = "none"


@dataclass(frozen=True)
class Decomposition:
    """A target written as a sum of Gaussian primes from one region.

    Each term is stored as (sector prime, unit); the actual summand is
    unit * prime. Summands sit in descending (norm, re, im) order except
    where a chain constructor documents otherwise.
    """

    target: GaussianInt
    terms: tuple[tuple[GaussianInt, Unit], ...]
    region: Region
    policy: NormPolicy
    parity_filter: Parity | None = Parity.ODD

    @property
    def k(self) -> int:
        return len(self.terms)

    def summands(self) -> list[GaussianInt]:
        return [u.apply(g) for g, u in self.terms]

    def appendix_terms(self) -> list[str]:
        """Unit-times-sector-prime strings like 'i*(6-i)'."""
        out = []
        for g, u in self.terms:
            out.append(f"({g})" if u is Unit.ONE else f"{u.label}*({g})")
        return out

    def __str__(self) -> str:
        return " + ".join(f"({s})" for s in self.summands())

    def to_json_dict(self) -> dict:
        return {
            "target": str(self.target),
            "re": self.target.re,
            "im": self.target.im,
            "norm": self.target.norm(),
            "k": self.k,
            "region": self.region.value,
            "policy": self.policy.value,
            "parity": None if self.parity_filter is None else self.parity_filter.name,
            "terms": [
                {
                    "summand": str(u.apply(g)),
                    "re": u.apply(g).re,
                    "im": u.apply(g).im,
                    "norm": g.norm(),
                    "unit": u.label,
                    "sector": str(g),
                }
                for g, u in self.terms
            ],
        }


def verify_decomposition(dec: Decomposition) -> None:
    """Raise ValueError unless every stored fact about dec checks out."""
    if not dec.terms:
        raise ValueError("empty decomposition")
    total = ZERO
    target_norm = dec.target.norm()
    for g, u in dec.terms:
        if not in_region(g, Region.SECTOR):
            raise ValueError(f"stored prime {g} is not the sector associate")
        if not is_gaussian_prime(g):
            raise ValueError(f"{g} is not a Gaussian prime")
        s = u.apply(g)
        if not in_region(s, dec.region):
            raise ValueError(f"summand {s} lies outside {dec.region.value}")
        if dec.parity_filter is not None and parity_of(s) is not dec.parity_filter:
            raise ValueError(f"summand {s} breaks the parity filter")
        if dec.policy is NormPolicy.STRICT_LESS and s.norm() >= target_norm:
            raise ValueError(f"summand {s} is not below the target norm")
        total = total + s
    if total != dec.target:
        raise ValueError(f"terms sum to {total}, not {dec.target}")


def _geometric_cap(z: GaussianInt, region: Region) -> int:
    """Exclusive norm bound on any term of a sum of two or more region
    members equal to z. Derived from componentwise monotonicity: every
    region here forces re >= 0 (re >= 1 off the axes), so co-terms eat
    real part, and the listed shapes bound the imaginary part."""
    r, i = z.re, z.im
    if region is Region.PRIME_QUADRANT:
        return r * r + i * i if r >= 0 and i >= 0 else 0
    if region is Region.SECTOR or region is Region.PRIME_SECTOR:
        m = r - 1
        return 2 * m * m + 1 if m > 0 else 0
    if region is Region.QUADRANT:
        m = r - 1
        return m * m + i * i + 1 if m > 0 and i >= 0 else 0
    if region is Region.OPEN_QUADRANT:
        mr, mi = r - 1, i - 1
        return mr * mr + mi * mi + 1 if mr > 0 and mi > 0 else 0
    if region is Region.OCTANT:
        m = r - 1
        return 2 * m * m + 1 if m > 0 and i >= 0 else 0
    if region is Region.PRIME_HALF:
        if r < 0:
            return 0
        w = abs(i) + r
        return r * r + w * w + 1
    raise ValueError(f"unknown region {region!r}")


# Per-node search rules. pair_cap gives the largest norm any of `terms`
# region members summing to (re, im) may have, or -1 when the residual
# is unreachable; fits says whether a candidate can be one of them.


def _cap_kpi(re: int, im: int, terms: int) -> int:
    if re < 0 or im < 0 or re + im < terms:
        return -1
    return re * re + im * im


def _fits_kpi(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    return pre <= re and pim <= im


def _cap_sector(re: int, im: int, terms: int) -> int:
    m = re - (terms - 1)
    if m < 1:
        return -1
    return 2 * m * m


def _fits_sector(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    if pre > re - (terms - 1):
        return False
    rr, ri = re - pre, im - pim
    # remaining sector members keep |im| bounded by their real parts
    return -rr <= ri <= rr


def _cap_quadrant(re: int, im: int, terms: int) -> int:
    if im < 0:
        return -1
    m = re - (terms - 1)
    if m < 1:
        return -1
    return m * m + im * im


def _fits_quadrant(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    return pre <= re - (terms - 1) and pim <= im


def _cap_open_quadrant(re: int, im: int, terms: int) -> int:
    mr = re - (terms - 1)
    mi = im - (terms - 1)
    if mr < 1 or mi < 1:
        return -1
    return mr * mr + mi * mi


def _fits_open_quadrant(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    return pre <= re - (terms - 1) and pim <= im - (terms - 1)


def _cap_octant(re: int, im: int, terms: int) -> int:
    if im < 0 or im > re:
        return -1
    m = re - (terms - 1)
    if m < 1:
        return -1
    return 2 * m * m


def _fits_octant(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    return pre <= re - (terms - 1) and pim <= im and im - pim <= re - pre


def _cap_spi(re: int, im: int, terms: int) -> int:
    if re < 0 or re + im < terms:
        return -1
    w = abs(im) + re
    return re * re + w * w


def _fits_spi(pre: int, pim: int, re: int, im: int, terms: int) -> bool:
    return pre <= re and pre + pim <= re + im - (terms - 1)


_RULES = {
    Region.PRIME_QUADRANT: (_cap_kpi, _fits_kpi),
    Region.SECTOR: (_cap_sector, _fits_sector),
    Region.PRIME_SECTOR: (_cap_sector, _fits_sector),
    Region.QUADRANT: (_cap_quadrant, _fits_quadrant),
    Region.OPEN_QUADRANT: (_cap_open_quadrant, _fits_open_quadrant),
    Region.OCTANT: (_cap_octant, _fits_octant),
    Region.PRIME_HALF: (_cap_spi, _fits_spi),
}


# (region, parity) -> (bound, pool, index); pools hold (re, im, norm)
# triples ascending by (norm, re, im) and grow monotonically.
_POOL_CACHE: dict = {}


def _pool_for(region: Region, parity_filter: Parity | None, bound: int):
    key = (region, parity_filter)
    got = _POOL_CACHE.get(key)
    if got is not None and got[0] >= bound:
        return got[1], got[2]
    grown = max(bound, 2 * got[0] if got else 0, 512)
    primes = gaussian_primes_in(region, grown, parity_filter)
    pool = [(z.re, z.im, z.norm()) for z in primes]
    index = {(p[0], p[1]): i for i, p in enumerate(pool)}
    _POOL_CACHE[key] = (grown, pool, index)
    return pool, index


def _dfs(
    t_re: int,
    t_im: int,
    k: int,
    pool: list,
    index: dict,
    region: Region,
    cap: int,
) -> tuple[int, ...] | None:
    """Indices of the lexicographically first non-decreasing k-tuple of
    pool entries summing to the target, all norms below cap."""
    pair_cap, fits = _RULES[region]
    acc: list[int] = []

    def rec(re: int, im: int, terms: int, lo: int) -> bool:
        if terms == 1:
            i = index.get((re, im))
            if i is not None and i >= lo and pool[i][2] < cap:
                acc.append(i)
                return True
            return False
        stop = pair_cap(re, im, terms)
        if stop > cap - 1:
            stop = cap - 1
        for i in range(lo, len(pool)):
            pre, pim, pn = pool[i]
            if pn > stop:
                break
            if not fits(pre, pim, re, im, terms):
                continue
            acc.append(i)
            if rec(re - pre, im - pim, terms - 1, i):
                return True
            acc.pop()
        return False

    return tuple(acc) if rec(t_re, t_im, k, 0) else None


def find_decomposition(
    z: GaussianInt,
    region: Region,
    max_terms: int,
    policy: NormPolicy = NormPolicy.STRICT_LESS,
    parity_filter: Parity | None = Parity.ODD,
    include_single: bool = True,
) -> Decomposition | None:
    """Minimal canonical decomposition of z into at most max_terms
    Gaussian primes lying in the region, or None.

    Among decompositions of the minimal length the witness is the
    lexicographically smallest non-decreasing sequence in (norm, re, im)
    order, reported largest term first. The strict policy demands every
    summand norm be below the target norm, which rules out the
    single-term split.
    """
    if z.is_zero():
        raise ValueError("target must be nonzero")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    if (
        include_single
        and policy is not NormPolicy.STRICT_LESS
        and in_region(z, region)
        and (parity_filter is None or parity_of(z) is parity_filter)
        and is_gaussian_prime(z)
    ):
        return Decomposition(z, (sector_form(z),), region, policy, parity_filter)
    if max_terms == 1:
        return None
    cap = _geometric_cap(z, region)
    if policy is NormPolicy.STRICT_LESS:
        cap = min(cap, z.norm())
    if cap <= 2:
        return None
    pool, index = _pool_for(region, parity_filter, cap)
    for k in range(2, max_terms + 1):
        if parity_filter is Parity.ODD and not congruent_mod_one_plus_i(z, k):
            continue
        if parity_filter is Parity.EVEN and parity_of(z) is Parity.ODD:
            break
        got = _dfs(z.re, z.im, k, pool, index, region, cap)
        if got is not None:
            summands = [GaussianInt(pool[i][0], pool[i][1]) for i in got]
            summands.sort(key=GaussianInt.key, reverse=True)
            terms = tuple(sector_form(s) for s in summands)
            return Decomposition(z, terms, region, policy, parity_filter)
    return None


def region_targets(
    region: Region, norm_bound: int, parity_filter: Parity | None = None
) -> list[GaussianInt]:
    """Region members with norm in [1, norm_bound], canonical order."""
    if norm_bound < 1:
        raise ValueError("norm_bound must be at least 1")
    top = isqrt(norm_bound)
    out = []
    for re in range(-top, top + 1):
        rr = re * re
        for im in range(-top, top + 1):
            n = rr + im * im
            if n == 0 or n > norm_bound:
                continue
            z = GaussianInt(re, im)
            if not in_region(z, region):
                continue
            if parity_filter is not None and parity_of(z) is not parity_filter:
                continue
            out.append(z)
    out.sort(key=GaussianInt.key)
    return out


def box_targets(
    region: Region,
    re_range: tuple[int, int],
    im_range: tuple[int, int],
    min_max_component: int = 0,
) -> list[GaussianInt]:
    """Region members inside a component box, canonical order.

    A target must satisfy the region predicate, fall inside both
    closed component ranges, and have max(re, im) at or above
    min_max_component. Zero is never a target.
    """
    re_lo, re_hi = re_range
    im_lo, im_hi = im_range
    if re_lo > re_hi or im_lo > im_hi:
        raise ValueError("empty component range")
    out = []
    for re in range(re_lo, re_hi + 1):
        for im in range(im_lo, im_hi + 1):
            if re == 0 and im == 0:
                continue
            if max(re, im) < min_max_component:
                continue
            z = GaussianInt(re, im)
            if in_region(z, region):
                out.append(z)
    out.sort(key=GaussianInt.key)
    return out


@dataclass(frozen=True)
class ScanReport:
    """Representability of every target in some enumerated set.

    term_region constrains the primes used as summands; target_desc
    records how the target set was enumerated so reports from
    different runs compare apples to apples.
    """

    term_region: Region
    target_desc: str
    max_terms: int
    policy: NormPolicy
    parity_filter: Parity | None
    rows: tuple[tuple[GaussianInt, int | None, tuple[GaussianInt, ...] | None], ...]

    @property
    def exceptions(self) -> tuple[GaussianInt, ...]:
        return tuple(z for z, k, _ in self.rows if k is None)

    @property
    def term_counts(self) -> dict[int, int]:
        """How many targets resolved at each term count."""
        out: dict[int, int] = {}
        for _, k, _ in self.rows:
            if k is not None:
                out[k] = out.get(k, 0) + 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "primes": self.term_region.value,
            "targets": self.target_desc,
            "term_counts": {str(k): c for k, c in sorted(self.term_counts.items())},
            "max_terms": self.max_terms,
            "policy": self.policy.value,
            "parity": None if self.parity_filter is None else self.parity_filter.name,
            "rows": [
                {
                    "z": str(z),
                    "re": z.re,
                    "im": z.im,
                    "norm": z.norm(),
                    "k": k,
                    "witness": None if wit is None else [str(s) for s in wit],
                }
                for z, k, wit in self.rows
            ],
            "exceptions": [str(z) for z in self.exceptions],
        }


def _scan_chunk(args) -> list:
    region_value, pairs, max_terms, policy_value, parity_name = args
    region = Region(region_value)
    policy = NormPolicy(policy_value)
    par = None if parity_name is None else Parity[parity_name]
    out = []
    for re, im in pairs:
        dec = find_decomposition(GaussianInt(re, im), region, max_terms, policy, par)
        if dec is None:
            out.append((re, im, None, None))
        else:
            out.append(
                (re, im, dec.k, tuple((s.re, s.im) for s in dec.summands()))
            )
    return out


def scan_targets(
    targets: Sequence[GaussianInt],
    term_region: Region,
    max_terms: int,
    policy: NormPolicy = NormPolicy.STRICT_LESS,
    parity_filter: Parity | None = Parity.ODD,
    jobs: int = 1,
    target_desc: str = "explicit",
) -> ScanReport:
    """Attempt a decomposition for every listed target.

    Output is identical for any job count: targets are chunked in
    listed order and chunk results merged back in order.
    """
    parity_name = None if parity_filter is None else parity_filter.name
    # warm the shared pool before forking so workers inherit it
    worst = 0
    for z in targets:
        c = _geometric_cap(z, term_region)
        if policy is NormPolicy.STRICT_LESS:
            c = min(c, z.norm())
        worst = max(worst, c)
    if worst > 2:
        _pool_for(term_region, parity_filter, worst)
    pairs = [(z.re, z.im) for z in targets]
    if jobs <= 1 or len(pairs) < 2:
        chunks = [
            _scan_chunk((term_region.value, pairs, max_terms, policy.value, parity_name))
        ]
    else:
        step = max(1, -(-len(pairs) // (jobs * 4)))
        arg_list = [
            (term_region.value, pairs[i : i + step], max_terms, policy.value, parity_name)
            for i in range(0, len(pairs), step)
        ]
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as ex:
            chunks = list(ex.map(_scan_chunk, arg_list))
    rows = []
    for chunk in chunks:
        for re, im, k, wit in chunk:
            rows.append(
                (
                    GaussianInt(re, im),
                    k,
                    None if wit is None else tuple(GaussianInt(a, b) for a, b in wit),
                )
            )
    return ScanReport(
        term_region, target_desc, max_terms, policy, parity_filter, tuple(rows)
    )


def scan_representability(
    region: Region,
    norm_bound: int,
    max_terms: int,
    policy: NormPolicy = NormPolicy.STRICT_LESS,
    parity_filter: Parity | None = Parity.ODD,
    jobs: int = 1,
) -> ScanReport:
    """Scan every region member with norm up to norm_bound, drawing
    summands from the same region. Targets are not parity filtered;
    the filter applies to summands only.
    """
    targets = region_targets(region, norm_bound)
    desc = f"{region.value} norm 1..{norm_bound}"
    return scan_targets(
        targets, region, max_terms, policy, parity_filter, jobs, desc
    )


def scan_box(
    target_region: Region,
    re_range: tuple[int, int],
    im_range: tuple[int, int],
    term_region: Region,
    max_terms: int,
    policy: NormPolicy = NormPolicy.STRICT_LESS,
    parity_filter: Parity | None = Parity.ODD,
    min_max_component: int = 0,
    jobs: int = 1,
) -> ScanReport:
    """Scan a component box of one region for decompositions into
    primes of another. This is the shape every conjecture scan takes:
    target grid on one side, summand pool on the other. Box sides are
    capped at 500 to keep scans at desk scale.
    """
    if re_range[1] - re_range[0] >= 500 or im_range[1] - im_range[0] >= 500:
        raise ValueError("box sides are capped at 500")
    targets = box_targets(target_region, re_range, im_range, min_max_component)
    desc = (
        f"{target_region.value} re {re_range[0]}..{re_range[1]}"
        f" im {im_range[0]}..{im_range[1]} maxc>={min_max_component}"
    )
    return scan_targets(
        targets, term_region, max_terms, policy, parity_filter, jobs, desc
    )


def write_scan_csv(report: ScanReport, fh: IO[str]) -> None:
    fh.write("z,norm,k,witness\n")
    for z, k, wit in report.rows:
        cell = "EMPTY" if wit is None else "+".join(f"({s})" for s in wit)
        fh.write(f"{z},{z.norm()},{'' if k is None else k},{cell}\n")


def write_scan_json(report: ScanReport, fh: IO[str]) -> None:
    json.dump(report.to_json_dict(), fh, sort_keys=True, indent=2)
    fh.write("\n")


@dataclass(frozen=True)
class ObstructionReport:
    """Exhaustive evidence that k-term sums of odd sector primes keep
    re - im at or above k. Violations would refute the obstruction, so
    unlike a scan report, an empty exception list is the good outcome."""

    bound: int
    max_terms: int
    levels: tuple[tuple[int, int, int], ...]
    violations: tuple[tuple[int, GaussianInt], ...]

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound,
            "max_terms": self.max_terms,
            "levels": [
                {"k": k, "count": c, "min_gap": g} for k, c, g in self.levels
            ],
            "violations": [{"k": k, "z": str(z)} for k, z in self.violations],
            "holds": self.holds,
        }


def verify_diagonal_obstruction(bound: int, max_terms: int = 6) -> ObstructionReport:
    """Enumerate every sum of up to max_terms odd sector primes with real
    part at most bound and record the smallest re - im per term count.

    The pool comes straight from the primality predicate on the lattice,
    and the sweep never assumes the inequality it is checking: sums are
    dropped only when their real part passes the bound, and real parts
    grow monotonically, so no qualifying sum is lost.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    pool: list[tuple[int, int]] = []
    for re in range(1, bound + 1):
        for im in range(-re + 1, re + 1):
            if (re + im) % 2 and is_gaussian_prime(GaussianInt(re, im)):
                pool.append((re, im))
    levels: list[tuple[int, int, int]] = []
    violations: list[tuple[int, GaussianInt]] = []
    current: set[tuple[int, int]] = set(pool)
    k = 1
    while current:
        gap = min(r - i for r, i in current)
        levels.append((k, len(current), gap))
        if gap < k:
            for r, i in current:
                if r - i < k:
                    violations.append((k, GaussianInt(r, i)))
        if k == max_terms:
            break
        nxt: set[tuple[int, int]] = set()
        for r, i in current:
            room = bound - r
            for pr, pi in pool:
                if pr > room:
                    break
                nxt.add((r + pr, i + pi))
        current = nxt
        k += 1
    violations.sort(key=lambda t: (t[0], t[1].key()))
    return ObstructionReport(bound, max_terms, tuple(levels), tuple(violations))


def write_obstruction_csv(report: ObstructionReport, fh: IO[str]) -> None:
    fh.write("k,count,min_gap\n")
    for k, c, g in report.levels:
        fh.write(f"{k},{c},{g}\n")


def write_obstruction_json(report: ObstructionReport, fh: IO[str]) -> None:
    json.dump(report.to_json_dict(), fh, sort_keys=True, indent=2)
    fh.write("\n")


def obstruction_line_report(bound: int, max_terms: int = 6) -> ScanReport:
    """Scan the two blocked diagonals im = re and im = re - 1 for sums
    of odd sector primes, no norm bound. Rows with k = 1 are targets
    that happen to be primes themselves; every other row must come back
    empty, which is the searching counterpart of the re - im >= k
    invariant that verify_diagonal_obstruction checks by exhaustion.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    targets = []
    for re in range(1, bound + 1):
        targets.append(GaussianInt(re, re))
        targets.append(GaussianInt(re, re - 1))
    targets.sort(key=GaussianInt.key)
    return scan_targets(
        targets,
        Region.PRIME_SECTOR,
        max_terms,
        NormPolicy.NONE,
        Parity.ODD,
        target_desc=f"gammapi lines im=re and im=re-1, re 1..{bound}",
    )


class BaseCaseError(Exception):
    """The bounded base split a chain construction relies on is missing."""


def extend_with_inert(
    w: GaussianInt,
    region: Region = Region.PRIME_QUADRANT,
    max_base_terms: int = 3,
    c0: int = 4,
    policy: NormPolicy = NormPolicy.NONE,
    parity_filter: Parity | None = Parity.ODD,
) -> tuple[Decomposition, GaussianInt]:
    """Split w as a bounded decomposition of a shifted target plus one
    inert prime. The shift is 3i when the imaginary part clears c0 + 3
    and 3 otherwise, so the reduced target keeps its shape.

    Raises ValueError when w sits outside the open first quadrant, is in
    the wrong parity class for max_base_terms + 1 odd summands, or has
    no component reaching c0 + 3; raises BaseCaseError when the bounded
    search fails on the reduced target.
    """
    if not in_region(w, Region.OPEN_QUADRANT):
        raise ValueError(f"{w} must have positive real and imaginary parts")
    if not congruent_mod_one_plus_i(w, max_base_terms + 1):
        raise ValueError(
            f"{w} has the wrong parity for {max_base_terms} odd summands plus one"
        )
    if max(w.re, w.im) < c0 + 3:
        raise ValueError(f"{w} needs a component of at least {c0 + 3}")
    shift = GaussianInt(0, 3) if w.im >= c0 + 3 else GaussianInt(3, 0)
    base = find_decomposition(w - shift, region, max_base_terms, policy, parity_filter)
    if base is None:
        raise BaseCaseError(f"no {max_base_terms}-term split for {w - shift}")
    return base, shift


def four_term_decompose(
    z: GaussianInt,
    region: Region = Region.PRIME_QUADRANT,
    c1: int = 4,
    policy: NormPolicy = NormPolicy.NONE,
) -> tuple[Decomposition, str] | None:
    """Write z as at most four odd region primes and say which route won.

    Odd targets go through the direct three-term search. Even targets
    shed one inert prime to reach an odd remainder needing at most three
    terms; if that structured path fails, the flagged fallback is a
    direct four-term search. Routes: direct, shift-3i, shift-3,
    fallback. Returns None when even the fallback finds nothing; such a
    target is a counterexample candidate worth keeping.
    """
    if not in_region(z, Region.OPEN_QUADRANT):
        raise ValueError(f"{z} must have positive real and imaginary parts")
    if max(z.re, z.im) <= c1:
        raise ValueError(f"chain construction needs a component above {c1}")
    if parity_of(z) is Parity.ODD:
        dec = find_decomposition(z, region, 3, policy)
        if dec is not None:
            return dec, "direct"
    else:
        try:
            base, shift = extend_with_inert(z, region, 3, max(1, c1 - 3), policy)
        except (BaseCaseError, ValueError):
            pass
        else:
            summands = base.summands() + [shift]
            summands.sort(key=GaussianInt.key, reverse=True)
            terms = tuple(sector_form(s) for s in summands)
            return Decomposition(z, terms, region, policy, Parity.ODD), (
                "shift-3i" if shift.im else "shift-3"
            )
    dec = find_decomposition(z, region, 4, policy)
    if dec is None:
        return None
    return dec, "fallback"


def write_decomposition_csv(dec: Decomposition, fh: IO[str]) -> None:
    fh.write("summand,re,im,norm,unit,sector\n")
    for g, u in dec.terms:
        s = u.apply(g)
        fh.write(f"{s},{s.re},{s.im},{g.norm()},{u.label},{g}\n")


def write_decomposition_json(dec: Decomposition, fh: IO[str]) -> None:
    json.dump(dec.to_json_dict(), fh, sort_keys=True, indent=2)
    fh.write("\n")


__all__ = [
    "BaseCaseError",
    "Decomposition",
    "NormPolicy",
    "ObstructionReport",
    "ScanReport",
    "box_targets",
    "extend_with_inert",
    "find_decomposition",
    "four_term_decompose",
    "obstruction_line_report",
    "region_targets",
    "scan_box",
    "scan_representability",
    "scan_targets",
    "verify_decomposition",
    "verify_diagonal_obstruction",
    "write_decomposition_csv",
    "write_decomposition_json",
    "write_obstruction_csv",
    "write_obstruction_json",
    "write_scan_csv",
    "write_scan_json",
]
