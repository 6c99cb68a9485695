"""Interval arithmetic with exact rational endpoints.

Endpoints are fractions.Fraction, so +, -, * are exact and the usual
outward-rounding headaches of floating point intervals do not exist here.
Division is provided only for intervals strictly excluding zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(value) -> "RatInterval":
        v = Fraction(value)
        return RatInterval(v, v)

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(products), max(products))

    def scale(self, c) -> "RatInterval":
        c = Fraction(c)
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def recip(self) -> "RatInterval":
        """1/self; requires 0 strictly outside the interval."""
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def intersect(self, other: "RatInterval") -> "RatInterval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint intervals")
        return RatInterval(lo, hi)

    def pow(self, n: int) -> "RatInterval":
        out = RatInterval.point(1)
        for _ in range(n):
            out = out * self
        return out

    def contains(self, value) -> bool:
        v = Fraction(value)
        return self.lo <= v <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def abs_upper(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def sqrt_enclosure(n: int, precision: int) -> RatInterval:
    """Dyadic enclosure of sqrt(n) with width 2**-precision, n a positive int.

    Nested as precision grows: the floor of 2**p * sqrt(n) refines dyadically.
    """
    if n <= 0:
        raise ValueError("radicand must be positive")
    scale = 1 << precision
    a = isqrt(n * scale * scale)
    return RatInterval(Fraction(a, scale), Fraction(a + 1, scale))


def rational_sqrt_floor(f: Fraction) -> int:
    """Largest integer m with m*m <= f (f >= 0)."""
    if f < 0:
        raise ValueError("negative radicand")
    m = isqrt(f.numerator // f.denominator)
    # isqrt of the integer part can be off by one for non-integers
    while (m + 1) * (m + 1) <= f:
        m += 1
    while m * m > f:
        m -= 1
    return m


def rational_sqrt_upper(f: Fraction, precision: int = 16) -> Fraction:
    """A rational upper bound for sqrt(f), f >= 0, within 2**-precision."""
    if f < 0:
        raise ValueError("negative radicand")
    if f == 0:
        return Fraction(0)
    scale = 1 << precision
    num = f.numerator * scale * scale
    den = f.denominator
    # ceil(sqrt(num/den)) / scale >= sqrt(f)
    a = isqrt(num // den)
    while a * a * den < num:
        a += 1
    return Fraction(a, scale)
