"""Integer helpers: lcm(1..n), p-adic valuations, rising factorials."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Union

from .poly import Polynomial

Number = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_power_base(n: int) -> int | None:
    """Return p if n = p**k with k >= 1, else None."""
    if n < 2:
        return None
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return n


class LcmTable:
    """Incrementally extended table d_n = lcm(1, ..., n).

    Extension multiplies by p exactly when n is a power of the prime p.
    Reads of already computed entries never take the lock.
    """

    def __init__(self) -> None:
        self._values = [1, 1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def _extend(self, n: int) -> None:
        with self._lock:
            values = self._values
            for m in range(len(values), n + 1):
                p = prime_power_base(m)
                values.append(values[-1] * p if p else values[-1])

    def __getitem__(self, n: int) -> int:
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self._values)


_LCM = LcmTable()


def lcm_upto(n: int) -> int:
    """lcm(1, ..., n) for n >= 1."""
    if n < 1:
        raise ValueError(f"lcm_upto needs n >= 1, got {n}")
    return _LCM[n]


def factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) by Legendre's formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def valuation(x: Number, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def pochhammer(x, k: int):
    """Rising factorial (x)_k = x (x+1) ... (x+k-1).

    ``x`` may be an int, a Fraction, or a Polynomial; the result has the same kind.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(x, Polynomial):
        out = Polynomial.one()
        for m in range(k):
            out = out * (x + m)
        return out
    out = 1 if isinstance(x, int) else Fraction(1)
    for m in range(k):
        out *= x + m
    return out


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (and for negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_integral(x: Number) -> bool:
    return Fraction(x).denominator == 1
