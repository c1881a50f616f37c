"""Exact Gaussian-integer arithmetic: parity, norms, units, associates, and
the planar regions used to select canonical primes and scan targets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# Components stay below 2^31 so every norm fits a signed 64-bit value.
COMPONENT_BOUND = 1 << 31


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"


class Unit(Enum):
    """The four units of Z[i], stored as powers of the imaginary unit."""

    ONE = 0
    I = 1
    MINUS_ONE = 2
    MINUS_I = 3

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit((self.value + other.value) % 4)

    def apply(self, z: "GaussianInt") -> "GaussianInt":
        k = self.value
        if k == 0:
            return z
        if k == 1:
            return GaussianInt(-z.im, z.re)
        if k == 2:
            return GaussianInt(-z.re, -z.im)
        return GaussianInt(z.im, -z.re)

    @property
    def label(self) -> str:
        return ("1", "i", "-1", "-i")[self.value]

    @classmethod
    def from_label(cls, text: str) -> "Unit":
        try:
            return cls(("1", "i", "-1", "-i").index(text))
        except ValueError:
            raise ValueError(f"not a unit label: {text!r}") from None


def _check_component(v: int) -> int:
    if not -COMPONENT_BOUND < v < COMPONENT_BOUND:
        raise OverflowError(f"component {v} outside +/-2^31")
    return v


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def __post_init__(self) -> None:
        _check_component(self.re)
        _check_component(self.im)

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def times_i(self) -> "GaussianInt":
        return GaussianInt(-self.im, self.re)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def key(self) -> tuple[int, int, int]:
        """Canonical sort key (norm, re, im) used everywhere."""
        return (self.norm(), self.re, self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        tail = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{tail}"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
IMAG = GaussianInt(0, 1)


def add(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    return x + y


def norm(z: GaussianInt) -> int:
    return z.norm()


def parity(z: GaussianInt) -> Parity:
    # z is divisible by 1+i exactly when re+im is even
    return Parity.ODD if (z.re + z.im) % 2 else Parity.EVEN


def congruent_mod_one_plus_i(z: GaussianInt, k: int) -> bool:
    """True when z and the rational integer k agree modulo 1+i.

    A sum of k odd Gaussian integers lands in the class of k, so this is
    the parity gate for k-term decompositions.
    """
    return parity(z) == (Parity.ODD if k % 2 else Parity.EVEN)


class Region(Enum):
    """Planar membership predicates, values doubling as CLI names.

    SECTOR          re > 0 and -re < im <= re
    QUADRANT        re > 0 and im >= 0
    OPEN_QUADRANT   re > 0 and im > 0
    OCTANT          0 <= im <= re
    PRIME_SECTOR    same predicate as SECTOR; one associate per prime class
    PRIME_QUADRANT  re >= 0 and im >= 0
    PRIME_HALF      re >= 0 and im > -re
    """

    SECTOR = "sector"
    QUADRANT = "quadrant"
    OPEN_QUADRANT = "a"
    OCTANT = "octant"
    PRIME_SECTOR = "gammapi"
    PRIME_QUADRANT = "kpi"
    PRIME_HALF = "spi"


def in_region(z: GaussianInt, region: Region) -> bool:
    r, i = z.re, z.im
    if region is Region.SECTOR or region is Region.PRIME_SECTOR:
        return r > 0 and -r < i <= r
    if region is Region.QUADRANT:
        return r > 0 and i >= 0
    if region is Region.OPEN_QUADRANT:
        return r > 0 and i > 0
    if region is Region.OCTANT:
        return 0 <= i <= r
    if region is Region.PRIME_QUADRANT:
        return r >= 0 and i >= 0
    if region is Region.PRIME_HALF:
        return r >= 0 and i > -r
    raise ValueError(f"unknown region {region!r}")


def associates(z: GaussianInt) -> tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]:
    """The four unit multiples of z, in the order z, iz, -z, -iz."""
    return (z, z.times_i(), -z, (-z).times_i())


def sector_associate(z: GaussianInt) -> GaussianInt:
    """The unique associate of a nonzero z lying in the sector."""
    return sector_form(z)[0]


def sector_form(z: GaussianInt) -> tuple[GaussianInt, Unit]:
    """Factor a nonzero z as unit * g with g in the sector.

    Exactly one of the four associates satisfies re > 0 and -re < im <= re,
    so the pair is unique.
    """
    if z.is_zero():
        raise ValueError("zero has no sector associate")
    for power in range(4):
        g = Unit((4 - power) % 4).apply(z)
        if in_region(g, Region.SECTOR):
            return g, Unit(power)
    raise AssertionError("no sector associate found")  # unreachable for z != 0
