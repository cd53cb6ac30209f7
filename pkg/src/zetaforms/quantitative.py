"""Second-derivative series giving forms in 1, zeta(5), zeta(7), ..., and the exponent calculator.

For a rational function R with table c_{i,j},

    (1/2) sum_{k>=1} R''(k) z^(-k) = P_0(z) + sum_j j(j+1)/2 P_j(z) Li_{j+2}(1/z),

so at z = 1 the table polynomial P_j feeds zeta(j+2). Killing P_1(1) and the
even P_j(1) leaves 1, zeta(5), zeta(7), ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core.arith import lcm_upto
from .core.forms import PolylogDecomposition, ZetaLinearForm, polylog_decomposition, reciprocity_holds
from .core.poly import Polynomial
from .core.ratfunc import FactoredRational, PartialFractionTable, ProductExpansion, local_partial_fractions, simple_residues
from .numerics import HighPrecReal, direct_sum, linear_form_value
from .numerics.sums import relative_agreement, significant_precision
from .rivoal import residues_F, residues_G, residues_H

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class DerivativeFormDecomp:
    a: int
    n: int
    table: PartialFractionTable
    decomposition: PolylogDecomposition

    def table_poly(self, j: int) -> Polynomial:
        return self.table.polynomial_j(j)

    @property
    def P0(self) -> Polynomial:
        return self.decomposition.constant_poly

    def vanishing_holds(self) -> bool:
        return all(self.table_poly(j)(ONE) == 0 for j in [1] + list(range(2, self.a + 1, 2)))


def derivative_rational(a: int, n: int) -> FactoredRational:
    """n!^(a-6) (X + n/2) (X-n)_n^3 (X+n+1)_n^3 / (X)_{n+1}^a."""
    zeros: dict[Fraction, int] = {Fraction(k): 3 for k in range(1, n + 1)}
    zeros.update({Fraction(-k): 3 for k in range(n + 1, 2 * n + 1)})
    zeros[Fraction(-n, 2)] = zeros.get(Fraction(-n, 2), 0) + 1
    return FactoredRational(math.factorial(n) ** (a - 6), zeros, {p: a for p in range(n + 1)})


def _check_a(a: int) -> None:
    if a % 2 or a < 6:
        raise ValueError(f"the derivative construction needs a even and >= 6, got {a}")


def derivative_table(a: int, n: int, method: str = "product") -> PartialFractionTable:
    _check_a(a)
    if method == "local":
        table = local_partial_fractions(derivative_rational(a, n), n)
    elif method == "product":
        factors = [residues_F(n, 1)] * 3 + [residues_G(n, 1)] * 3 + [residues_H(n)] * (a - 6)
        acc = ProductExpansion.from_simple(factors[0])
        for f in factors[1:]:
            acc = acc.multiply_simple(f)
        table = acc.multiply_linear(1, Fraction(n, 2)).table(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    table.order = a
    for row in table.entries.values():
        row.extend([ZERO] * (a - len(row)))
    return table


def derivative_form(a: int, n: int, method: str = "product") -> tuple[DerivativeFormDecomp, ZetaLinearForm]:
    _check_a(a)
    if n < 1:
        raise ValueError("n must be >= 1")
    table = derivative_table(a, n, method)
    dec = polylog_decomposition(table, d=2, provenance={"construction": "derivative", "a": a, "n": n})
    out = DerivativeFormDecomp(a, n, table, dec)
    if not out.vanishing_holds():
        raise ArithmeticError("P_1(1) or an even P_j(1) is nonzero")
    form = dec.at_one()
    # keep only the arguments that survive: zeta(5), zeta(7), ..., zeta(a+1)
    coeffs = {s: form.coefficient(s) for s in range(5, a + 2, 2)}
    form = ZetaLinearForm(form.constant, coeffs, ZERO, form.provenance)
    return out, form


def derivative_series_values(a: int, n: int, z=1, precision: int = 50) -> tuple[HighPrecReal, HighPrecReal]:
    """(direct (1/2) sum R''(k) z^(-k), decomposition value)."""
    decomp, _ = derivative_form(a, n)
    direct = direct_sum(derivative_rational(a, n), z, 2, precision)
    return direct, decomp.decomposition.value(z, precision)


def denominator_exponent_check(decomp: DerivativeFormDecomp, form: ZetaLinearForm, extra: int) -> bool:
    """2 d_n^(a+extra) times every coefficient (and P_0) is integral."""
    mult = 2 * lcm_upto(decomp.n) ** (decomp.a + extra)
    return form.scaled_integral(mult) and (decomp.P0 * mult).is_integral()


# -- the ten-block construction -----------------------------------------------


def zudilin_constant(n: int) -> Fraction:
    num = 1
    for u in range(1, 11):
        num *= math.factorial((13 + 2 * u) * n)
    return Fraction(num, math.factorial(27 * n) ** 6)


def zudilin_rational(n: int) -> FactoredRational:
    zeros: dict[Fraction, int] = {}
    for k in range(1, 27 * n + 1):
        zeros[Fraction(k)] = 3
    for k in range(37 * n + 1, 64 * n + 1):
        zeros[Fraction(-k)] = 3
    zeros[Fraction(-37 * n, 2)] = zeros.get(Fraction(-37 * n, 2), 0) + 1
    poles: dict[int, int] = {}
    for u in range(1, 11):
        start = (12 - u) * n
        for t in range((13 + 2 * u) * n + 1):
            poles[start + t] = poles.get(start + t, 0) + 1
    # 37n + 2k = 2 (k + 37n/2)
    return FactoredRational(2 * zudilin_constant(n), zeros, poles)


def zudilin_blocks(n: int) -> list[FactoredRational]:
    """The rational function as a product of proper simple-pole blocks (one per u) and a linear factor.

    The numerator zeros are dealt out to the blocks so that every block has
    numerator degree at most its pole count minus one.
    """
    zero_list: list[Fraction] = []
    for k in range(1, 27 * n + 1):
        zero_list += [Fraction(k)] * 3
    for k in range(37 * n + 1, 64 * n + 1):
        zero_list += [Fraction(-k)] * 3
    blocks = []
    pos = 0
    for u in range(1, 11):
        start = (12 - u) * n
        size = (13 + 2 * u) * n + 1
        take = min(size - 1, len(zero_list) - pos)
        zeros = zero_list[pos : pos + take]
        pos += take
        blocks.append(FactoredRational(1, zeros, {start + t: 1 for t in range(size)}))
    if pos != len(zero_list):
        raise AssertionError("numerator zeros left over")
    return blocks


def zudilin_table(n: int, method: str = "local") -> PartialFractionTable:
    rat = zudilin_rational(n)
    if method == "local":
        return local_partial_fractions(rat, n)
    if method == "product":
        blocks = zudilin_blocks(n)
        acc = ProductExpansion.from_simple(simple_residues(blocks[0]))
        for b in blocks[1:]:
            acc = acc.multiply_simple(simple_residues(b))
        acc = acc.multiply_linear(2, 37 * n).scale(zudilin_constant(n))
        return acc.table(n)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class ZudilinFormDecomp:
    n: int
    table: PartialFractionTable
    decomposition: PolylogDecomposition

    def table_poly(self, j: int) -> Polynomial:
        return self.table.polynomial_j(j)

    def symmetry_holds(self) -> bool:
        return all(reciprocity_holds(self.table_poly(j), 37 * self.n, (-1) ** (j + 1)) for j in range(1, 11))

    def vanishing_holds(self) -> bool:
        return all(self.table_poly(j)(ONE) == 0 for j in (1, 2, 4, 6, 8, 10))

    def index_ranges_hold(self) -> bool:
        n = self.n
        for j in range(1, 11):
            for i in self.table.entries:
                if self.table.c(i, j) != 0 and not ((j + 1) * n <= i <= (36 - j) * n):
                    return False
        return True

    def coarse_multiplier(self) -> int:
        n = self.n
        return 2 * lcm_upto(35 * n) ** 3 * lcm_upto(34 * n) * lcm_upto(33 * n) ** 8

    def coarse_denominator_holds(self) -> dict[int, bool]:
        m = self.coarse_multiplier()
        out = {j: (self.table_poly(j) * m).is_integral() for j in range(1, 11)}
        out[0] = (self.decomposition.constant_poly * m).is_integral()
        return out


def zudilin_form(n: int, method: str = "local") -> tuple[ZudilinFormDecomp, ZetaLinearForm]:
    if n < 1:
        raise ValueError("n must be >= 1")
    table = zudilin_table(n, method)
    table.order = max(table.order, 10)
    for row in table.entries.values():
        row.extend([ZERO] * (10 - len(row)))
    dec = polylog_decomposition(table, d=2, provenance={"construction": "zudilin", "n": n})
    out = ZudilinFormDecomp(n, table, dec)
    if not out.vanishing_holds():
        raise ArithmeticError("a table polynomial forced to vanish at 1 does not")
    form = dec.at_one()
    coeffs = {s: form.coefficient(s) for s in (5, 7, 9, 11)}
    return out, ZetaLinearForm(form.constant, coeffs, ZERO, form.provenance)


def zudilin_series_values(n: int, digits: int = 50) -> tuple[HighPrecReal, HighPrecReal]:
    """(direct (1/2) sum R''(k), value of the five-term zeta combination) at z = 1.

    The value is tiny, so the working precision is chosen to give ``digits``
    significant digits rather than absolute ones.
    """
    _, form = zudilin_form(n)
    precision = significant_precision(lambda p: linear_form_value(form, p), digits)
    direct = direct_sum(zudilin_rational(n), 1, 2, precision)
    return direct, linear_form_value(form, precision)


# -- exponent of irrationality ------------------------------------------------


@dataclass(frozen=True)
class ExponentData:
    log_alpha: float
    log_beta: float

    def __post_init__(self) -> None:
        if not (self.log_alpha < 0 < self.log_beta):
            raise ValueError("need log_alpha < 0 < log_beta")


def exponent_bound(data: ExponentData) -> float:
    """1 - log_beta / log_alpha."""
    return 1 - data.log_beta / data.log_alpha


def apery_exponent_data() -> ExponentData:
    """Rates of u_n zeta(3) - v_n and of u_n, each with the d_n^3 multiplier (log d_n ~ n)."""
    root2 = math.sqrt(2)
    return ExponentData(4 * math.log(root2 - 1) + 3, 4 * math.log(root2 + 1) + 3)


REFERENCE_EXPONENTS = {"apery": 13.4179, "group-action": 5.5139}


@dataclass(frozen=True)
class BudgetReport:
    total: int
    threshold: float
    holds: bool
    empirical: dict[int, float]


def growth_budget_check(max_n: int = 5) -> BudgetReport:
    total = 3 * 35 + 34 + 8 * 33
    threshold = 227.58 + 176.75
    emp = {}
    for n in range(1, max_n + 1):
        v = 3 * math.log(lcm_upto(35 * n)) + math.log(lcm_upto(34 * n)) + 8 * math.log(lcm_upto(33 * n))
        emp[n] = v / n
    return BudgetReport(total, threshold, total < threshold, emp)
