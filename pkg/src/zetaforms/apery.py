"""The sequences u_n, v_n with u_n zeta(3) - v_n -> 0, by recurrence and by explicit sums.

Both sequences solve

    (n+1)^3 y_{n+1} - P(n) y_n + n^3 y_{n-1} = 0,   P(n) = 34n^3 + 51n^2 + 27n + 5,

with u_0 = 1, u_1 = 5 and v_0 = 0, v_1 = 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core.arith import binomial, lcm_upto

CONSTRUCTIONS = ("recurrence", "explicit", "sigma", "vwp", "modular")


@dataclass(frozen=True)
class AperyPair:
    n: int
    u: Fraction
    v: Fraction
    construction: str = "recurrence"

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")

    def same_values(self, other: "AperyPair") -> bool:
        return self.n == other.n and self.u == other.u and self.v == other.v


def recurrence_poly(n: int) -> int:
    return 34 * n**3 + 51 * n**2 + 27 * n + 5


def recurrence_residual(y, n: int) -> Fraction:
    """(n+1)^3 y[n+1] - P(n) y[n] + n^3 y[n-1] for n >= 1."""
    return (n + 1) ** 3 * y[n + 1] - recurrence_poly(n) * y[n] + n**3 * y[n - 1]


def _run_recurrence(y0, y1, N: int) -> list[Fraction]:
    y = [Fraction(y0), Fraction(y1)]
    for n in range(1, N):
        y.append((recurrence_poly(n) * y[n] - n**3 * y[n - 1]) / (n + 1) ** 3)
    return y[: N + 1]


def apery_by_recurrence(N: int) -> list[AperyPair]:
    if N < 0:
        raise ValueError("N must be >= 0")
    u = _run_recurrence(1, 5, N)
    v = _run_recurrence(0, 6, N)
    return [AperyPair(n, u[n], v[n], "recurrence") for n in range(N + 1)]


def lam(n: int, k: int) -> int:
    """lambda_{n,k} = C(n,k)^2 C(n+k,k)^2, zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return (binomial(n, k) * binomial(n + k, k)) ** 2


@lru_cache(maxsize=None)
def harmonic3(n: int) -> Fraction:
    """sum_{m=1}^{n} 1/m^3."""
    if n <= 0:
        return Fraction(0)
    return harmonic3(n - 1) + Fraction(1, n**3)


@lru_cache(maxsize=None)
def c_row(n: int) -> tuple[Fraction, ...]:
    """(c_{n,0}, ..., c_{n,n})."""
    row = [harmonic3(n)]
    for m in range(1, n + 1):
        row.append(row[-1] + Fraction(1 if m % 2 else -1, 2 * m**3 * binomial(n, m) * binomial(n + m, m)))
    return tuple(row)


def c_nk(n: int, k: int) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"c_(n,k) needs 0 <= k <= n, got ({n}, {k})")
    return c_row(n)[k]


def apery_by_sum(n: int) -> AperyPair:
    if n < 0:
        raise ValueError("n must be >= 0")
    row = c_row(n)
    u = sum(lam(n, k) for k in range(n + 1))
    v = sum((lam(n, k) * row[k] for k in range(n + 1)), Fraction(0))
    return AperyPair(n, Fraction(u), v, "explicit")


def A_cert(n: int, k: int) -> int:
    return 4 * (2 * n + 1) * (k * (2 * k + 1) - (2 * n + 1) ** 2) * lam(n, k)


def _lam_c(n: int, k: int) -> Fraction:
    """lambda_{n,k} c_{n,k}, zero wherever lambda vanishes."""
    if not 0 <= k <= n:
        return Fraction(0)
    return lam(n, k) * c_row(n)[k]


def B_cert(n: int, k: int) -> Fraction:
    if not 0 <= k <= n:
        return Fraction(0)
    sign = 1 if k % 2 else -1
    extra = Fraction(5 * (2 * n + 1) * k * sign, n * (n + 1)) * binomial(n, k) * binomial(n + k, k)
    return A_cert(n, k) * c_row(n)[k] + extra


def certificate_check(n: int, k: int) -> bool:
    """Both telescoping identities at (n, k), exactly."""
    if n < 1 or not 0 <= k <= n + 1:
        raise ValueError("certificate_check needs n >= 1 and 0 <= k <= n+1")
    P = recurrence_poly(n)
    lhs_a = A_cert(n, k) - A_cert(n, k - 1)
    rhs_a = (n + 1) ** 3 * lam(n + 1, k) - P * lam(n, k) + n**3 * lam(n - 1, k)
    lhs_b = B_cert(n, k) - B_cert(n, k - 1)
    rhs_b = (n + 1) ** 3 * _lam_c(n + 1, k) - P * _lam_c(n, k) + n**3 * _lam_c(n - 1, k)
    return lhs_a == rhs_a and lhs_b == rhs_b


def delta_identity(n: int) -> Fraction:
    """v_n u_{n-1} - u_n v_{n-1}; raises if it differs from 6/n^3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = apery_by_recurrence(n)
    d = pairs[n].v * pairs[n - 1].u - pairs[n].u * pairs[n - 1].v
    if d != Fraction(6, n**3):
        raise ArithmeticError(f"Delta_{n} = {d}, expected 6/{n**3}")
    return d


def accelerated_zeta3_partial(N: int) -> Fraction:
    """5/2 sum_{n=1}^{N} (-1)^(n-1) / (n^3 C(2n, n))."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return Fraction(5, 2) * sum((Fraction(1 if n % 2 else -1, n**3 * math.comb(2 * n, n)) for n in range(1, N + 1)), Fraction(0))


@dataclass(frozen=True)
class DenominatorReport:
    n: int
    u_integral: bool
    scaled_v_integral: bool
    quotients_integral: bool
    scaled_v: Fraction

    @property
    def ok(self) -> bool:
        return self.u_integral and self.scaled_v_integral and self.quotients_integral


def binomial_quotient(n: int, k: int, m: int) -> Fraction:
    """C(n+k,k) d_n^3 / (m^3 C(n,m) C(n+m,m))."""
    return Fraction(binomial(n + k, k) * lcm_upto(n) ** 3, m**3 * binomial(n, m) * binomial(n + m, m))


def denominator_check(n: int, pair: AperyPair | None = None) -> DenominatorReport:
    if n < 1:
        raise ValueError("n must be >= 1")
    pair = pair or apery_by_sum(n)
    scaled = 2 * lcm_upto(n) ** 3 * pair.v
    quot = all(
        binomial_quotient(n, k, m).denominator == 1 for k in range(1, n + 1) for m in range(1, k + 1)
    )
    return DenominatorReport(n, pair.u.denominator == 1, scaled.denominator == 1, quot, scaled)


def reduite_check(N: int) -> bool:
    """Y_n = n!^3 y_n solves Y_{n+1} - P(n) Y_n + n^6 Y_{n-1} = 0 and keeps V_n/U_n = v_n/u_n."""
    pairs = apery_by_recurrence(N)
    U = [math.factorial(p.n) ** 3 * p.u for p in pairs]
    V = [math.factorial(p.n) ** 3 * p.v for p in pairs]
    for n in range(1, N):
        for Y in (U, V):
            if Y[n + 1] - recurrence_poly(n) * Y[n] + n**6 * Y[n - 1] != 0:
                return False
    # U_n, V_n as continued-fraction numerators and denominators are integers
    if any(Fraction(y).denominator != 1 for y in U + V):
        return False
    return all(V[n] / U[n] == pairs[n].v / pairs[n].u for n in range(N + 1))


def ratios_increasing(N: int) -> bool:
    pairs = apery_by_recurrence(N)
    r = [p.v / p.u for p in pairs]
    return all(a < b for a, b in zip(r, r[1:]))
