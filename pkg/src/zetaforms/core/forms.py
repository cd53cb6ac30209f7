"""From partial fraction tables to polylogarithm and zeta linear forms.

For a table c_{i,j} of R and a derivative order d, put
W_d R = ((-1)^d / d!) R^(d). Termwise,

    W_d (X+i)^(-j) = C(j+d-1, d) (X+i)^(-j-d),

and sum_{k>=1} z^(-k) (k+i)^(-s) = z^i (Li_s(1/z) - sum_{q=1}^{i} z^(-q) q^(-s)), so

    sum_{k>=1} W_d R(k) z^(-k) = P_0(z) + sum_s P_s(z) Li_s(1/z)

with P_{j+d}(z) = C(j+d-1, d) sum_i c_{i,j} z^i and the z^l coefficient of P_0
equal to -sum_{i>l} sum_j C(j+d-1, d) c_{i,j} / (i-l)^(j+d).

d = 0 is the plain series, d = 1 gives -sum R'(k) z^(-k), d = 2 gives
(1/2) sum R''(k) z^(-k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .poly import Polynomial
from .ratfunc import PartialFractionTable

ZERO = Fraction(0)


@dataclass
class ZetaLinearForm:
    """constant + log2 * log(2) + sum_s coefficients[s] * zeta(s)."""

    constant: Fraction
    coefficients: dict[int, Fraction]
    log2: Fraction = ZERO
    provenance: dict = field(default_factory=dict)

    def coefficient(self, s: int) -> Fraction:
        return self.coefficients.get(s, ZERO)

    def support(self) -> list[int]:
        """Zeta arguments with a nonzero coefficient."""
        return sorted(s for s, c in self.coefficients.items() if c)

    def arguments(self) -> list[int]:
        return sorted(self.coefficients)

    def scaled_integral(self, multiplier: int) -> bool:
        values = [self.constant, self.log2, *self.coefficients.values()]
        return all((multiplier * v).denominator == 1 for v in values)

    def common_denominator(self) -> int:
        from math import lcm

        out = 1
        for v in [self.constant, self.log2, *self.coefficients.values()]:
            out = lcm(out, v.denominator)
        return out

    def scaled(self, c) -> "ZetaLinearForm":
        c = Fraction(c)
        return ZetaLinearForm(
            self.constant * c,
            {s: v * c for s, v in self.coefficients.items()},
            self.log2 * c,
            dict(self.provenance),
        )

    def value(self, precision: int = 50):
        """Numeric value as a HighPrecReal."""
        from ..numerics import linear_form_value

        return linear_form_value(self, precision)

    def to_dict(self) -> dict:
        return {
            "constant": str(self.constant),
            "log2": str(self.log2),
            "coefficients": {str(s): str(v) for s, v in sorted(self.coefficients.items())},
            "provenance": {k: v for k, v in self.provenance.items()},
        }


@dataclass
class PolylogDecomposition:
    """sum_{k>=1} W_d R(k) z^(-k) = constant_poly(z) + sum_s polys[s](z) Li_s(1/z)."""

    table: PartialFractionTable
    d: int
    polys: dict[int, Polynomial]
    constant_poly: Polynomial
    provenance: dict = field(default_factory=dict)

    def P(self, s: int) -> Polynomial:
        if s == 0:
            return self.constant_poly
        return self.polys.get(s, Polynomial())

    @property
    def max_weight(self) -> int:
        return max(self.polys, default=0)

    def at_one(self) -> ZetaLinearForm:
        """Exact form at z = 1; Li_1(1) diverges so P_1(1) must vanish."""
        p1 = self.P(1)(Fraction(1))
        if p1 != 0:
            raise ArithmeticError(f"P_1(1) = {p1} is nonzero; the series diverges at z = 1")
        coeffs = {s: p(Fraction(1)) for s, p in self.polys.items() if s >= 2}
        return ZetaLinearForm(self.constant_poly(Fraction(1)), coeffs, ZERO, dict(self.provenance, z=1))

    def at_minus_one(self) -> ZetaLinearForm:
        """Exact form at z = -1 via Li_s(-1) = -(1 - 2^(1-s)) zeta(s), Li_1(-1) = -log 2."""
        x = Fraction(-1)
        coeffs = {}
        for s, p in self.polys.items():
            if s >= 2:
                coeffs[s] = -p(x) * (1 - Fraction(2) ** (1 - s))
        log2 = -self.P(1)(x)
        return ZetaLinearForm(self.constant_poly(x), coeffs, log2, dict(self.provenance, z=-1))

    def value(self, z, precision: int = 50):
        """Numeric value constant_poly(z) + sum_s P_s(z) Li_s(1/z) for |z| >= 1."""
        from ..numerics import decomposition_value

        return decomposition_value(self, z, precision)


def polylog_decomposition(table: PartialFractionTable, d: int = 0, provenance: dict | None = None) -> PolylogDecomposition:
    if not table.polynomial.is_zero():
        raise ValueError("the rational function has a polynomial part; the series diverges")
    if not table.entries:
        return PolylogDecomposition(table, d, {}, Polynomial(), dict(provenance or {}))
    top = max(table.entries)
    weights = {j: comb(j + d - 1, d) for j in range(1, table.order + 1)}
    polys: dict[int, Polynomial] = {}
    for j in range(1, table.order + 1):
        w = weights[j]
        p = Polynomial(w * table.c(i, j) for i in range(top + 1))
        if not p.is_zero():
            polys[j + d] = p
        else:
            polys[j + d] = Polynomial()
    const = [ZERO] * top
    for i, row in table.entries.items():
        for j, c in enumerate(row, start=1):
            if not c:
                continue
            wc = weights[j] * c
            s = j + d
            for ell in range(i):
                const[ell] -= wc / Fraction(i - ell) ** s
    return PolylogDecomposition(table, d, polys, Polynomial(const), dict(provenance or {}))


def reciprocity_holds(p: Polynomial, m: int, sign: int) -> bool:
    """p(z) = sign * z^m p(1/z)."""
    if p.degree > m:
        return False
    return p * sign == p.reciprocal(m) if not p.is_zero() else True
