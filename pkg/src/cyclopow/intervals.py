"""Certified rational interval enclosures for the natural logarithm.

Used to decide analytic inequalities exactly: every ln is returned as a
[lo, hi] pair of rationals that provably bracket the true value (series
truncations carry explicit tail bounds, inputs are truncated to dyadic
rationals outward). No floating point anywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        assert self.lo <= self.hi

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def scale(self, k: int) -> "Interval":
        if k >= 0:
            return Interval(self.lo * k, self.hi * k)
        return Interval(self.hi * k, self.lo * k)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _atanh_series(u: Fraction, eps: Fraction) -> Interval:
    """2*atanh(u) for 0 <= u <= 1/2, with a geometric tail bound."""
    assert 0 <= u < 1
    if u == 0:
        return Interval(Fraction(0), Fraction(0))
    total = Fraction(0)
    power = u
    k = 0
    while True:
        term = 2 * power / (2 * k + 1)
        total += term
        power *= u * u
        k += 1
        nxt = 2 * power / (2 * k + 1)
        if nxt < eps:
            # remaining tail <= nxt / (1 - u^2)
            tail = nxt / (1 - u * u)
            return Interval(total, total + tail)


@functools.lru_cache(maxsize=None)
def _ln2(bits: int) -> Interval:
    return _atanh_series(Fraction(1, 3), Fraction(1, 1 << bits))


def _dyadic_bracket(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    scale = 1 << bits
    lo = Fraction(q.numerator * scale // q.denominator, scale)
    hi = lo if lo == q else lo + Fraction(1, scale)
    return lo, hi


def _log_int(n: int, bits: int) -> Interval:
    """Certified enclosure of ln(n) for an integer n >= 1."""
    if n < 1:
        raise ValueError("log of a non-positive integer")
    if n == 1:
        return Interval(Fraction(0), Fraction(0))
    e = n.bit_length() - 1
    # ln(n) = e*ln2 + 2*atanh(t),  t = (n - 2^e)/(n + 2^e) in [0, 1/3)
    t = Fraction(n - (1 << e), n + (1 << e))
    t_lo, t_hi = _dyadic_bracket(t, bits + 8)
    eps = Fraction(1, 1 << bits)
    lo_part = _atanh_series(t_lo, eps)
    hi_part = _atanh_series(t_hi, eps)
    ln2 = _ln2(bits + max(e.bit_length(), 1) + 4)
    return Interval(e * ln2.lo + lo_part.lo, e * ln2.hi + hi_part.hi)


def log_interval(q, bits: int) -> Interval:
    """Certified enclosure of ln(q) for a positive rational q."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log of a non-positive value")
    num = _log_int(q.numerator, bits)
    den = _log_int(q.denominator, bits)
    return num - den
