"""Rational functions with integer poles, and their partial fractions.

Every construction in this package is a rational function

    R(X) = C * prod (X - z)^mu / prod (X + p)^nu

with rational zeros z and nonnegative integer pole indices p (pole at X = -p).
Its partial fraction expansion sum c[p][j] / (X + p)^j is computed two ways:

* :func:`local_partial_fractions` expands R(X) (X + p)^nu as a Taylor series
  at X = -p, one pole at a time (the derivative formula).
* :class:`ProductExpansion` multiplies one-pole expansions together using
  1/((X+i)(X+p)) = (1/(p-i)) (1/(X+i) - 1/(X+p)); this exposes where
  denominators enter and is what the denominator lemmas reason about.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .poly import Polynomial
from .series import FormalSeries

ZERO = Fraction(0)


class FactoredRational:
    """R(X) = constant * prod (X - z)^mu / prod (X + p)^nu."""

    def __init__(self, constant, zeros: Mapping | Iterable = (), poles: Mapping | Iterable = ()):
        self.constant = Fraction(constant)
        z = Counter()
        for root, mult in _items(zeros):
            z[Fraction(root)] += mult
        p = Counter()
        for idx, mult in _items(poles):
            if int(idx) != idx:
                raise ValueError("pole indices must be integers")
            p[int(idx)] += mult
        # cancel common factors: a zero at X = -p removes one pole order
        for idx in list(p):
            root = Fraction(-idx)
            common = min(z.get(root, 0), p[idx])
            if common:
                z[root] -= common
                p[idx] -= common
        self.zeros = {r: m for r, m in sorted(z.items()) if m}
        self.poles = {i: m for i, m in sorted(p.items()) if m}

    # -- basic data ---------------------------------------------------------

    @property
    def num_degree(self) -> int:
        return sum(self.zeros.values())

    @property
    def den_degree(self) -> int:
        return sum(self.poles.values())

    @property
    def decay(self) -> int:
        """delta with R(X) ~ C X^(-delta) at infinity."""
        return self.den_degree - self.num_degree

    @property
    def max_order(self) -> int:
        return max(self.poles.values(), default=0)

    @property
    def radius(self) -> Fraction:
        """Largest |root| among zeros and poles."""
        return max([abs(r) for r in self.zeros] + [Fraction(p) for p in self.poles] + [Fraction(1)])

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        z = Counter(self.zeros)
        z.update(other.zeros)
        p = Counter(self.poles)
        p.update(other.poles)
        return FactoredRational(self.constant * other.constant, z, p)

    def __call__(self, x):
        x = Fraction(x)
        num = self.constant
        for r, m in self.zeros.items():
            num *= (x - r) ** m
        den = Fraction(1)
        for p, m in self.poles.items():
            if x + p == 0:
                raise ZeroDivisionError(f"pole at {x}")
            den *= (x + p) ** m
        return num / den

    def numerator(self) -> Polynomial:
        out = Polynomial.constant(self.constant)
        for r, m in self.zeros.items():
            out = out * Polynomial((-r, 1)) ** m
        return out

    def denominator(self) -> Polynomial:
        out = Polynomial.one()
        for p, m in self.poles.items():
            out = out * Polynomial((p, 1)) ** m
        return out

    def taylor(self, x0, order: int) -> list[Fraction]:
        """Coefficients of R(x0 + h) through h^order; x0 must not be a pole."""
        x0 = Fraction(x0)
        s = [self.constant] + [ZERO] * order
        for r, m in self.zeros.items():
            for _ in range(m):
                _mul_linear(s, x0 - r)
        for p, m in self.poles.items():
            d = x0 + p
            if d == 0:
                raise ZeroDivisionError(f"pole at {x0}")
            for _ in range(m):
                _div_linear(s, d)
        return s

    def derivative_value(self, x0, d: int) -> Fraction:
        """R^(d)(x0), exactly."""
        return self.taylor(x0, d)[d] * math.factorial(d)

    def expansion_at_infinity(self, order: int) -> tuple[int, list[Fraction]]:
        """(delta, g) with R(X) = C X^(-delta) sum_m g[m] X^(-m), g[0] = 1.

        Uses the logarithm: log g(w) = sum_j h_j w^j with
        h_j = (sum nu (-p)^j - sum mu z^j) / j, then exponentiates.
        """
        h = [ZERO] * (order + 1)
        for j in range(1, order + 1):
            acc = sum((m * Fraction(-p) ** j for p, m in self.poles.items()), ZERO)
            acc -= sum((m * r**j for r, m in self.zeros.items()), ZERO)
            h[j] = acc / j
        g = [Fraction(1)] + [ZERO] * order
        for m in range(1, order + 1):
            g[m] = sum((k * h[k] * g[m - k] for k in range(1, m + 1)), ZERO) / m
        return self.decay, g

    def reflected(self, shift) -> "FactoredRational":
        """X -> -X - shift, as a new FactoredRational (requires integer image poles)."""
        shift = Fraction(shift)
        sign = (-1) ** (self.num_degree + self.den_degree)
        # (-X - shift - z) = -(X + shift + z); (-X - shift + p) = -(X + shift - p)
        zeros = {-(shift + r): m for r, m in self.zeros.items()}
        poles = {}
        for p, m in self.poles.items():
            q = shift - p
            if q.denominator != 1:
                raise ValueError("reflection moves poles off the integers")
            poles[int(q)] = m
        return FactoredRational(sign * self.constant, zeros, poles)

    def __repr__(self) -> str:
        return f"FactoredRational(C={self.constant}, zeros={len(self.zeros)}, poles={self.poles})"


def _items(obj):
    if isinstance(obj, Mapping):
        return obj.items()
    return Counter(obj).items()


def _mul_linear(s: list, c) -> None:
    """s <- s * (h + c), truncated to len(s)."""
    for k in range(len(s) - 1, 0, -1):
        s[k] = s[k] * c + s[k - 1]
    s[0] = s[0] * c


def _div_linear(s: list, d) -> None:
    """s <- s / (h + d), truncated to len(s)."""
    s[0] = s[0] / d
    for k in range(1, len(s)):
        s[k] = (s[k] - s[k - 1]) / d


# -- partial fraction tables --------------------------------------------------


@dataclass
class PartialFractionTable:
    """Coefficients c[i][j] of sum c_{i,j} / (X + i)^j (j = 1..order).

    ``entries`` maps pole index i to a list whose k-th item is c_{i,k+1}.
    ``polynomial`` is the polynomial part (zero for every construction in scope).
    """

    entries: dict[int, list[Fraction]]
    order: int
    polynomial: Polynomial = field(default_factory=Polynomial)
    n: int | None = None

    def __post_init__(self) -> None:
        for i, row in self.entries.items():
            if len(row) < self.order:
                row.extend([ZERO] * (self.order - len(row)))

    def c(self, i: int, j: int) -> Fraction:
        row = self.entries.get(i)
        if row is None or not 1 <= j <= len(row):
            return ZERO
        return row[j - 1]

    @property
    def poles(self) -> list[int]:
        return sorted(self.entries)

    def __call__(self, x):
        x = Fraction(x)
        total = self.polynomial(x) if not self.polynomial.is_zero() else ZERO
        for i, row in self.entries.items():
            base = x + i
            acc = ZERO
            for cij in reversed(row):
                acc = (acc + cij) / base
            total += acc
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialFractionTable):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        order = max(self.order, other.order)
        return self.polynomial == other.polynomial and all(
            self.c(i, j) == other.c(i, j) for i in keys for j in range(1, order + 1)
        )

    def residue_sum(self) -> Fraction:
        """sum_i c_{i,1}; minus the residue at infinity."""
        return sum((self.c(i, 1) for i in self.entries), ZERO)

    def polynomial_j(self, j: int) -> Polynomial:
        """P_j(z) = sum_i c_{i,j} z^i."""
        if not self.entries:
            return Polynomial()
        top = max(self.entries)
        return Polynomial(self.c(i, j) for i in range(top + 1))

    def max_denominator_exponent(self, d: int, j: int) -> int | None:
        """Smallest e with d^e c_{i,j} integral for all i (None if none up to 64)."""
        for e in range(65):
            if all((self.c(i, j) * d**e).denominator == 1 for i in self.entries):
                return e
        return None


def local_partial_fractions(rat: FactoredRational, n: int | None = None) -> PartialFractionTable:
    """Partial fractions by Taylor expansion of R(X)(X+p)^nu at each pole."""
    if rat.decay < 1:
        raise ValueError("only proper rational functions are supported")
    order = rat.max_order
    entries: dict[int, list[Fraction]] = {}
    for p, nu in rat.poles.items():
        s = [rat.constant] + [ZERO] * (nu - 1)
        x0 = Fraction(-p)
        for r, m in rat.zeros.items():
            c = x0 - r
            for _ in range(m):
                _mul_linear(s, c)
        for q, m in rat.poles.items():
            if q == p:
                continue
            _div_linear_pow(s, Fraction(q - p), m)
        # coefficient of h^(nu - j) is c_{p, j}
        entries[p] = [s[nu - j] for j in range(1, nu + 1)]
    return PartialFractionTable(entries, order, n=n)


def _div_linear_pow(s: list, d: Fraction, m: int) -> None:
    """s <- s / (h + d)^m via the binomial series of (1 + h/d)^(-m)."""
    if m <= 2:
        for _ in range(m):
            _div_linear(s, d)
        return
    length = len(s)
    inv = 1 / d
    factor = [ZERO] * length
    # (h + d)^(-m) = d^(-m) sum_k C(-m, k) (h/d)^k
    base = inv**m
    coeff = Fraction(1)
    for k in range(length):
        factor[k] = base * coeff
        coeff = coeff * (-(m + k)) / (k + 1) * inv
    out = [ZERO] * length
    for k in range(length):
        sk = s[k]
        if sk:
            for t in range(length - k):
                out[k + t] += sk * factor[t]
    s[:] = out


def simple_residues(rat: FactoredRational) -> dict[int, Fraction]:
    """Residues of a rational function whose poles are all simple."""
    if rat.max_order > 1:
        raise ValueError("simple_residues needs simple poles")
    return {p: row[0] for p, row in local_partial_fractions(rat).entries.items()}


class ProductExpansion:
    """Partial fraction expansion built up by multiplying factors.

    Supported factors: one-pole expansions sum_p f_p / (X + p) and linear
    polynomials alpha X + beta.
    """

    def __init__(self) -> None:
        self.entries: dict[int, list[Fraction]] = {}
        self.polynomial = Polynomial.one()
        self._started = False

    @classmethod
    def from_simple(cls, residues: Mapping[int, Fraction]) -> "ProductExpansion":
        out = cls()
        out.polynomial = Polynomial()
        out.entries = {p: [Fraction(f)] for p, f in residues.items() if f}
        out._started = True
        return out

    def multiply_simple(self, residues: Mapping[int, Fraction]) -> "ProductExpansion":
        if not self._started:
            return ProductExpansion.from_simple(residues)
        res = {p: Fraction(f) for p, f in residues.items() if f}
        new: dict[int, list[Fraction]] = {}

        def slot(p: int, j: int) -> None:
            row = new.setdefault(p, [])
            if len(row) < j:
                row.extend([ZERO] * (j - len(row)))

        for i, row in self.entries.items():
            top = len(row)
            for p, f in res.items():
                if p == i:
                    # c/(X+i)^j * f/(X+i) = cf/(X+i)^(j+1)
                    slot(i, top + 1)
                    target = new[i]
                    for j in range(1, top + 1):
                        if row[j - 1]:
                            target[j] += row[j - 1] * f
                    continue
                inv = Fraction(1, p - i)
                # 1/((X+i)^j (X+p)) = sum_{m=1}^{j} (-1)^(j-m) inv^(j-m+1) / (X+i)^m
                #                     + (-1)^j inv^j / (X+p)
                slot(i, top)
                target = new[i]
                # accumulate from the highest order down
                acc = ZERO
                for m in range(top, 0, -1):
                    acc = -acc * inv + row[m - 1] * f * inv
                    target[m - 1] += acc
                # coefficient on 1/(X+p)
                to_p = ZERO
                power = Fraction(1)
                for j in range(1, top + 1):
                    power *= -inv
                    if row[j - 1]:
                        to_p += row[j - 1] * f * power
                slot(p, 1)
                new[p][0] += to_p
        # polynomial part times one-pole expansion: P(X)/(X+p) = Q(X) + P(-p)/(X+p)
        poly_part = Polynomial()
        if not self.polynomial.is_zero():
            for p, f in res.items():
                quotient, remainder = _divide_linear(self.polynomial, p)
                poly_part = poly_part + quotient * f
                slot(p, 1)
                new[p][0] += remainder * f
        out = ProductExpansion()
        out.entries = new
        out.polynomial = poly_part
        out._started = True
        return out

    def multiply_linear(self, alpha, beta) -> "ProductExpansion":
        """Multiply by alpha X + beta; (alpha X + beta)/(X+p)^j = alpha/(X+p)^(j-1) + (beta - alpha p)/(X+p)^j."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        new: dict[int, list[Fraction]] = {}
        poly = self.polynomial * Polynomial((beta, alpha))
        for p, row in self.entries.items():
            out = [ZERO] * len(row)
            shift = beta - alpha * p
            for j in range(1, len(row) + 1):
                c = row[j - 1]
                if not c:
                    continue
                out[j - 1] += c * shift
                if j >= 2:
                    out[j - 2] += c * alpha
                else:
                    poly = poly + c * alpha
            new[p] = out
        res = ProductExpansion()
        res.entries = new
        res.polynomial = poly
        res._started = True
        return res

    def scale(self, c) -> "ProductExpansion":
        c = Fraction(c)
        res = ProductExpansion()
        res.entries = {p: [x * c for x in row] for p, row in self.entries.items()}
        res.polynomial = self.polynomial * c
        res._started = self._started
        return res

    def table(self, n: int | None = None) -> PartialFractionTable:
        order = max((len(r) for r in self.entries.values()), default=0)
        entries = {p: list(row) for p, row in self.entries.items()}
        return PartialFractionTable(entries, order, polynomial=self.polynomial, n=n)


def _divide_linear(poly: Polynomial, p: int) -> tuple[Polynomial, Fraction]:
    """Synthetic division of poly by (X + p)."""
    a = poly.coeffs
    if not a:
        return Polynomial(), ZERO
    r = -p
    q = [ZERO] * (len(a) - 1)
    acc = ZERO
    for k in range(len(a) - 1, 0, -1):
        acc = a[k] + r * acc
        q[k - 1] = acc
    return Polynomial(q), a[0] + r * acc


def series_in_inverse(rat: FactoredRational, order: int) -> FormalSeries:
    """g(w) with R(1/w) = C w^delta g(w), as an exact truncated series."""
    _, g = rat.expansion_at_infinity(order)
    return FormalSeries(g, order)
