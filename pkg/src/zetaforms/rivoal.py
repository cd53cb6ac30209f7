"""Linear forms in zeta values from the well-poised series

    S_n(z) = sum_{k>=1} R_n(k) z^(-k),
    R_n(X) = 2 n!^(a-2r) (X + n/2) (X - rn)_{rn} (X + n + 1)_{rn} / (X)_{n+1}^a.

R_n splits as prod_s F_s * prod_s G_s * H^(a-2r) * (2X + n) with

    F_s = (X - sn)_n / (X)_{n+1},  G_s = (X + sn + 1)_n / (X)_{n+1},  H = n! / (X)_{n+1},

each a sum of simple fractions over the poles 0..n with integer numerators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .core.arith import binomial, lcm_upto
from .core.forms import PolylogDecomposition, ZetaLinearForm, polylog_decomposition, reciprocity_holds
from .core.poly import Polynomial
from .core.ratfunc import FactoredRational, PartialFractionTable, ProductExpansion, local_partial_fractions
from .numerics import HighPrecReal, decomposition_value, direct_sum, linear_form_value

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class RivoalParams:
    a: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 3:
            raise ValueError(f"a must be >= 3, got {self.a}")
        if not (1 <= self.r and 2 * self.r < self.a):
            raise ValueError(f"r must satisfy 1 <= r < a/2, got r={self.r}, a={self.a}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def a_even(self) -> bool:
        return self.a % 2 == 0

    @property
    def parity(self) -> int:
        """a(n+1) mod 2."""
        return (self.a * (self.n + 1)) % 2

    def sign(self, j: int) -> int:
        """(-1)^(j + a(n+1) + 1), the sign in c_{i,j} = sign c_{n-i,j}."""
        return -1 if (j + self.a * (self.n + 1) + 1) % 2 else 1

    def as_dict(self) -> dict:
        return {"a": self.a, "r": self.r, "n": self.n}


def rivoal_rational(params: RivoalParams) -> FactoredRational:
    a, r, n = params.a, params.r, params.n
    zeros: dict[Fraction, int] = {}
    for k in range(1, r * n + 1):
        zeros[Fraction(k)] = 1
    for k in range(n + 1, (r + 1) * n + 1):
        zeros[Fraction(-k)] = 1
    zeros[Fraction(-n, 2)] = zeros.get(Fraction(-n, 2), 0) + 1
    return FactoredRational(2 * math.factorial(n) ** (a - 2 * r), zeros, {p: a for p in range(n + 1)})


def residues_F(n: int, s: int) -> dict[int, Fraction]:
    return {p: Fraction((-1) ** (n - p) * binomial(n, p) * binomial(p + s * n, n)) for p in range(n + 1)}


def residues_G(n: int, s: int) -> dict[int, Fraction]:
    return {p: Fraction((-1) ** p * binomial(n, p) * binomial(s * n + n - p, n)) for p in range(n + 1)}


def residues_H(n: int) -> dict[int, Fraction]:
    return {p: Fraction((-1) ** p * binomial(n, p)) for p in range(n + 1)}


def product_table(params: RivoalParams) -> PartialFractionTable:
    a, r, n = params.a, params.r, params.n
    factors = [residues_F(n, s) for s in range(1, r + 1)]
    factors += [residues_G(n, s) for s in range(1, r + 1)]
    factors += [residues_H(n)] * (a - 2 * r)
    acc = ProductExpansion.from_simple(factors[0])
    for f in factors[1:]:
        acc = acc.multiply_simple(f)
    acc = acc.multiply_linear(2, n)
    return acc.table(n)


@dataclass
class RivoalDecomp:
    params: RivoalParams
    table: PartialFractionTable
    decomposition: PolylogDecomposition

    @property
    def P(self) -> list[Polynomial]:
        return [self.decomposition.P(j) for j in range(self.params.a + 1)]

    def P_at(self, j: int, z) -> Fraction:
        return self.decomposition.P(j)(Fraction(z))


def rivoal_decompose(params: RivoalParams, method: str = "product") -> RivoalDecomp:
    if method == "product":
        table = product_table(params)
    elif method == "local":
        table = local_partial_fractions(rivoal_rational(params), params.n)
    else:
        raise ValueError(f"unknown method {method!r}")
    table.order = params.a
    for row in table.entries.values():
        row.extend([ZERO] * (params.a - len(row)))
    dec = polylog_decomposition(table, d=0, provenance={"construction": "rivoal", **params.as_dict()})
    return RivoalDecomp(params, table, dec)


def symmetry_check(decomp: RivoalDecomp) -> bool:
    """P_j(z) = sign_j z^n P_j(1/z) and c_{i,j} = sign_j c_{n-i,j} for j = 1..a."""
    p = decomp.params
    for j in range(1, p.a + 1):
        eps = p.sign(j)
        if not reciprocity_holds(decomp.decomposition.P(j), p.n, eps):
            return False
        if any(decomp.table.c(i, j) != eps * decomp.table.c(p.n - i, j) for i in range(p.n + 1)):
            return False
    return True


def residue_at_infinity_vanishes(decomp: RivoalDecomp) -> bool:
    return decomp.table.residue_sum() == 0


def zeta_form(decomp: RivoalDecomp) -> ZetaLinearForm:
    """Form in 1, zeta(3), ..., zeta(a-1) for a even; even-index P_j(1) are checked to vanish."""
    p = decomp.params
    if not p.a_even:
        raise ValueError("zeta_form needs a even; use odd_a_forms")
    if decomp.P_at(1, 1) != 0:
        raise ArithmeticError("P_1(1) != 0")
    for j in range(2, p.a + 1, 2):
        if decomp.P_at(j, 1) != 0:
            raise ArithmeticError(f"P_{j}(1) != 0 although the symmetry forces it")
    coeffs = {j: decomp.P_at(j, 1) for j in range(3, p.a, 2)}
    return ZetaLinearForm(decomp.P_at(0, 1), coeffs, ZERO, {"construction": "rivoal", **p.as_dict(), "z": 1})


def odd_a_forms(decomp: RivoalDecomp) -> ZetaLinearForm:
    """a odd: n odd gives odd zetas up to zeta(a), n even gives even zetas up to zeta(a-1)."""
    p = decomp.params
    if p.a_even:
        raise ValueError("odd_a_forms needs a odd; use zeta_form")
    if decomp.P_at(1, 1) != 0:
        raise ArithmeticError("P_1(1) != 0")
    keep_odd = p.n % 2 == 1
    for j in range(2, p.a + 1):
        if (j % 2 == 1) != keep_odd and decomp.P_at(j, 1) != 0:
            raise ArithmeticError(f"P_{j}(1) != 0 although the symmetry forces it")
    if keep_odd:
        args = range(3, p.a + 1, 2)
    else:
        args = range(2, p.a, 2)
    coeffs = {j: decomp.P_at(j, 1) for j in args}
    return ZetaLinearForm(decomp.P_at(0, 1), coeffs, ZERO, {"construction": "rivoal", **p.as_dict(), "z": 1})


def form_at_one(decomp: RivoalDecomp) -> ZetaLinearForm:
    return zeta_form(decomp) if decomp.params.a_even else odd_a_forms(decomp)


@dataclass(frozen=True)
class MinusOneReport:
    form: ZetaLinearForm
    value: HighPrecReal
    direct: HighPrecReal

    def agree(self, digits: int) -> bool:
        return self.value.agrees(self.direct, digits)


def evaluate_at_minus_one(decomp: RivoalDecomp, precision: int = 50) -> MinusOneReport:
    """S_n(-1) as an exact combination of 1, log 2 and zeta values, checked against the direct sum."""
    form = decomp.decomposition.at_minus_one()
    value = linear_form_value(form, precision)
    direct = direct_sum(rivoal_rational(decomp.params), -1, 0, precision)
    return MinusOneReport(form, value, direct)


def denominator_lemma_check(decomp: RivoalDecomp, drop: int = 0) -> bool:
    """d_n^(a-j-drop) P_j integral for all j = 0..a (drop = 0 is the lemma)."""
    p = decomp.params
    d = lcm_upto(p.n)
    for j in range(p.a + 1):
        e = p.a - j - drop
        if e < 0:
            continue
        if not (decomp.decomposition.P(j) * d**e).is_integral():
            return False
    return True


def sharpness_probe(params_list, max_n: int = 8) -> list[dict]:
    """Instances with d_n^(a-1-j) P_j not integral, i.e. where the lemma's exponent cannot drop by one."""
    found = []
    for a, r in params_list:
        for n in range(1, max_n + 1):
            dec = rivoal_decompose(RivoalParams(a, r, n))
            d = lcm_upto(n)
            for j in range(a):
                if not (dec.decomposition.P(j) * d ** (a - 1 - j)).is_integral():
                    found.append({"a": a, "r": r, "n": n, "j": j})
    return found


def ball_conjecture_probe(decomp: RivoalDecomp) -> bool:
    """d_n^(a-1) kappa integral for every coefficient of the z = 1 form (a even)."""
    if not decomp.params.a_even:
        raise ValueError("the probe is stated for a even")
    form = zeta_form(decomp)
    return form.scaled_integral(lcm_upto(decomp.params.n) ** (decomp.params.a - 1))


def coefficient_growth(decomp: RivoalDecomp) -> float:
    """max_j |P_j(1)|^(1/n)."""
    n = decomp.params.n
    vals = [abs(decomp.P_at(j, 1)) for j in range(decomp.params.a + 1)]
    top = max(vals)
    if top == 0:
        return 0.0
    return math.exp((math.log(top.numerator) - math.log(top.denominator)) / n)


def growth_bound(a: int, r: int) -> float:
    return 2.0 ** (a - 2 * r) * (2 * r + 1) ** (2 * r + 1)


def series_comparison(decomp: RivoalDecomp, z, precision: int = 50) -> tuple[HighPrecReal, HighPrecReal]:
    """(direct sum of S_n(z), P_0(z) + sum_j P_j(z) Li_j(1/z))."""
    direct = direct_sum(rivoal_rational(decomp.params), z, 0, precision)
    return direct, decomposition_value(decomp.decomposition, z, precision)


# -- asymptotic rate ----------------------------------------------------------


@dataclass(frozen=True)
class RateEstimate:
    s0: mpmath.mpf
    phi: mpmath.mpf
    upper_bound: mpmath.mpf
    precision: int

    @property
    def log_phi(self) -> float:
        return float(mpmath.log(self.phi))


def _q_poly(r: int, a: int, z: Fraction) -> Polynomial:
    coeffs = [ZERO] * (a + 3)
    coeffs[a + 2] += r
    coeffs[a + 1] -= r + 1
    coeffs[1] += (r + 1) * z
    coeffs[0] -= r * z
    q = Polynomial(coeffs)
    if z == 1:
        # s = 1 is then a trivial root; divide it out
        from .core.ratfunc import _divide_linear

        q, rem = _divide_linear(q, -1)
        assert rem == 0
    return q


def rate_phi(r: int, a: int, z=1, precision: int = 50) -> RateEstimate:
    """Root s_0 in (r/(r+1), 1) of r s^(a+2) - (r+1) s^(a+1) + (r+1) z s - r z, and phi."""
    zf = Fraction(z)
    if zf < 1:
        raise ValueError("rate_phi needs z >= 1")
    if not (1 <= r and 2 * r < a):
        raise ValueError("need 1 <= r < a/2")
    q = _q_poly(r, a, zf)
    with mpmath.workdps(precision + 15):
        lo = mpmath.mpf(r) / (r + 1)
        hi = mpmath.mpf(1)
        zv = mpmath.mpf(zf.numerator) / zf.denominator
        flo, fhi = q.evaluate_mp(lo), q.evaluate_mp(hi)
        if flo == 0:
            hi = lo
        elif fhi == 0:
            lo = hi
        elif flo * fhi > 0:
            raise ArithmeticError("no sign change in (r/(r+1), 1]")
        eps = mpmath.mpf(10) ** (-(precision + 5))
        while hi - lo > eps:
            mid = (lo + hi) / 2
            fm = q.evaluate_mp(mid)
            if fm == 0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        s0 = (lo + hi) / 2
        phi = zv ** (-r) * ((r + 1) * s0 - r) ** r * (r + 1 - r * s0) ** (r + 1) * (1 - s0) ** (a - 2 * r)
        bound = mpmath.mpf(2) ** (r + 1) / (zv**r * mpmath.mpf(r) ** (a - 2 * r))
        if phi > bound:
            raise ArithmeticError("phi exceeds its a-priori bound")
        return RateEstimate(s0, phi, bound, precision)


# -- dimension bounds ---------------------------------------------------------


def nesterenko_bound(alpha: float, beta: float) -> float:
    """1 - log(alpha)/log(beta) for 0 < alpha < 1 < beta."""
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if not beta > 1:
        raise ValueError("beta must exceed 1")
    return 1 - math.log(alpha) / math.log(beta)


def nesterenko_bound_logs(log_alpha: float, log_beta: float) -> float:
    if not (log_alpha < 0 < log_beta):
        raise ValueError("need log(alpha) < 0 < log(beta)")
    return 1 - log_alpha / log_beta


@dataclass(frozen=True)
class TrendPoint:
    a: int
    ell: int
    r: int
    bound: float
    ratio: float


def dimension_trend(a_values) -> list[TrendPoint]:
    """Bound with alpha = r^-a, beta = (2e)^a, r = floor(a / log(a)^2), against log(ell), a = 2 ell + 2."""
    out = []
    for a in a_values:
        if a % 2:
            raise ValueError("the trend uses even a")
        ell = (a - 2) // 2
        r = max(1, int(a / math.log(a) ** 2))
        log_alpha = -a * math.log(r)
        log_beta = a * (1 + math.log(2))
        bound = 1 - log_alpha / log_beta if r > 1 else 1.0
        out.append(TrendPoint(a, ell, r, bound, bound / math.log(ell)))
    return out


def asymptotic_dimension_constant() -> float:
    return 1 / (1 + math.log(2))


def rate_exact_bound_for_params(a: int, r: int, z=1) -> tuple[float, float]:
    """(log alpha, log beta) from the rate and the coefficient growth bound, with the d_n^a multiplier."""
    est = rate_phi(r, a, z, 30)
    log_alpha = est.log_phi + a
    log_beta = math.log(growth_bound(a, r)) + math.log(float(z)) + a
    return log_alpha, log_beta
