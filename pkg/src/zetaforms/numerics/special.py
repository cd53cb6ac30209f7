"""Zeta, Hurwitz zeta and polylogarithms with explicit truncation bounds.

Values are mpmath numbers at a working precision a few digits above the
request; each comes with an a-priori bound on the absolute error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

GUARD = 10


@dataclass(frozen=True)
class HighPrecReal:
    """A real number with certified absolute error at ``precision`` decimal digits."""

    value: mpmath.mpf
    error: mpmath.mpf
    precision: int

    def __float__(self) -> float:
        return float(self.value)

    def __add__(self, other: "HighPrecReal") -> "HighPrecReal":
        p = min(self.precision, other.precision)
        with mpmath.workdps(p + GUARD):
            return HighPrecReal(self.value + other.value, self.error + other.error, p)

    def __sub__(self, other: "HighPrecReal") -> "HighPrecReal":
        p = min(self.precision, other.precision)
        with mpmath.workdps(p + GUARD):
            return HighPrecReal(self.value - other.value, self.error + other.error, p)

    def scale(self, c) -> "HighPrecReal":
        with mpmath.workdps(self.precision + GUARD):
            c = _to_mpf(c)
            return HighPrecReal(self.value * c, self.error * abs(c), self.precision)

    def agrees(self, other, digits: int) -> bool:
        """|self - other| <= 10^-digits (other may be a plain number)."""
        with mpmath.workdps(max(self.precision, digits) + GUARD):
            ov = other.value if isinstance(other, HighPrecReal) else _to_mpf(other)
            return abs(self.value - ov) <= mpmath.mpf(10) ** (-digits)

    def digits(self) -> int:
        """Number of correct decimal places guaranteed by the error bound."""
        if self.error == 0:
            return self.precision
        return max(0, int(-mpmath.log10(self.error)))

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.precision)

    def to_dict(self) -> dict:
        return {
            "value": mpmath.nstr(self.value, self.precision, strip_zeros=False),
            "error_bound": mpmath.nstr(self.error, 5),
            "precision": self.precision,
        }


def _to_mpf(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


@lru_cache(maxsize=None)
def _bernoulli_even(m: int):
    """B_{2m} as a Fraction."""
    from fractions import Fraction

    p, q = mpmath.bernfrac(2 * m)
    return Fraction(int(p), int(q))


def hurwitz_zeta(s: int, a, precision: int = 50) -> HighPrecReal:
    """zeta(s, a) = sum_{k>=0} (k+a)^(-s) for integer s >= 2 and real a > 0.

    Euler-Maclaurin after shifting a past a cutoff N; the remainder is
    bounded by the first omitted correction term.
    """
    if s < 2:
        raise ValueError("hurwitz_zeta needs s >= 2")
    dps = precision + GUARD
    with mpmath.workdps(dps):
        a = _to_mpf(a)
        if a <= 0:
            raise ValueError("hurwitz_zeta needs a > 0")
        N = max(0, int(math.ceil(dps * 0.6 + s / 2.0 - float(a))))
        head = mpmath.fsum((a + k) ** (-s) for k in range(N))
        x = a + N
        total = head + x ** (1 - s) / (s - 1) + x ** (-s) / 2
        eps = mpmath.mpf(10) ** (-dps)
        rising = mpmath.mpf(s)  # (s)_{2m-1}
        xpow = x ** (-s - 1)
        fact = mpmath.mpf(2)  # (2m)!
        m = 1
        prev = None
        while True:
            b = _bernoulli_even(m)
            term = mpmath.mpf(b.numerator) / b.denominator / fact * rising * xpow
            if prev is not None and abs(term) > abs(prev):
                raise ArithmeticError("Euler-Maclaurin terms stopped decreasing")
            total += term
            prev = term
            m += 1
            rising *= (s + 2 * m - 3) * (s + 2 * m - 2)
            xpow /= x * x
            fact *= (2 * m - 1) * (2 * m)
            b = _bernoulli_even(m)
            nxt = abs(mpmath.mpf(b.numerator) / b.denominator / fact * rising * xpow)
            if nxt < eps * abs(total):
                err = nxt + eps * abs(total)
                break
        return HighPrecReal(total, err, precision)


def zeta(s: int, precision: int = 50) -> HighPrecReal:
    """Riemann zeta at an integer s >= 2."""
    if int(s) != s or s < 2:
        raise ValueError(f"zeta needs an integer s >= 2, got {s}")
    return _zeta_cached(int(s), precision)


@lru_cache(maxsize=512)
def _zeta_cached(s: int, precision: int) -> HighPrecReal:
    return hurwitz_zeta(s, 1, precision)


def eta(s: int, precision: int = 50) -> HighPrecReal:
    """Alternating zeta sum (-1)^(k-1) k^(-s) = (1 - 2^(1-s)) zeta(s)."""
    if s == 1:
        with mpmath.workdps(precision + GUARD):
            return HighPrecReal(mpmath.log(2), mpmath.mpf(10) ** (-precision - GUARD), precision)
    z = zeta(s, precision)
    with mpmath.workdps(precision + GUARD):
        f = 1 - mpmath.mpf(2) ** (1 - s)
        return HighPrecReal(z.value * f, z.error * f, precision)


def alternating_hurwitz(s: int, start: int, precision: int = 50) -> HighPrecReal:
    """sum_{k>=start} (-1)^k k^(-s), start >= 1."""
    with mpmath.workdps(precision + GUARD):
        a = hurwitz_zeta(s, mpmath.mpf(start) / 2, precision)
        b = hurwitz_zeta(s, mpmath.mpf(start + 1) / 2, precision)
        f = mpmath.mpf(2) ** (-s)
        sign = -1 if start % 2 else 1
        return HighPrecReal(sign * f * (a.value - b.value), f * (a.error + b.error), precision)


def polylog(s: int, x, precision: int = 50) -> HighPrecReal:
    """Li_s(x) = sum_{k>=1} x^k / k^s for real |x| <= 1.

    |x| <= 3/4 is summed directly with a geometric tail bound; x = +-1 goes
    through zeta and the alternating zeta; other x use mpmath.polylog.
    """
    if s < 1:
        raise ValueError("polylog needs s >= 1")
    dps = precision + GUARD
    with mpmath.workdps(dps):
        xv = _to_mpf(x)
        if abs(xv) > 1:
            raise ValueError("polylog needs |x| <= 1")
        if xv == 1:
            if s == 1:
                raise ValueError("Li_1(1) diverges")
            return zeta(s, precision)
        if xv == -1:
            e = eta(s, precision)
            return HighPrecReal(-e.value, e.error, precision)
        if s == 1:
            return HighPrecReal(-mpmath.log1p(-xv), mpmath.mpf(10) ** (-dps), precision)
        if xv == 0:
            return HighPrecReal(mpmath.mpf(0), mpmath.mpf(0), precision)
        ax = abs(xv)
        if ax <= mpmath.mpf(3) / 4:
            eps = mpmath.mpf(10) ** (-dps)
            total = mpmath.mpf(0)
            p = mpmath.mpf(1)
            k = 0
            while True:
                k += 1
                p *= xv
                total += p / mpmath.mpf(k) ** s
                bound = abs(p) * ax / ((k + 1) ** s * (1 - ax))
                if bound < eps:
                    break
            return HighPrecReal(total, bound + eps, precision)
        return HighPrecReal(mpmath.polylog(s, xv), mpmath.mpf(10) ** (-precision - GUARD // 2), precision)
