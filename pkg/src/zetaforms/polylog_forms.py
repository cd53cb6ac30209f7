"""Forms built from R_n(X) = (X-n)_n^2 / (X)_{n+1}^2 and from the very-well-poised H_n.

R_n(X) = sum_i alpha_i/(X+i)^2 + beta_i/(X+i) gives

    -sum_{k>=1} R_n'(k) z^(-k) = 2 A_n(z) Li_3(1/z) + B_n(z) Li_2(1/z) + C_n(z)

with A_n = sum alpha_i z^i, B_n = sum beta_i z^i. At z = 1 this is
2 (u_n zeta(3) - v_n) with u_n = A_n(1), v_n = -C_n(1)/2.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .apery import AperyPair
from .core.arith import binomial, lcm_upto
from .core.forms import PolylogDecomposition, polylog_decomposition, reciprocity_holds
from .core.linalg import nullspace, rank
from .core.poly import Polynomial
from .core.ratfunc import FactoredRational, PartialFractionTable, ProductExpansion, local_partial_fractions
from .numerics import HighPrecReal, decomposition_value, direct_sum

ZERO = Fraction(0)


def rn_rational(n: int) -> FactoredRational:
    """(X-n)_n^2 / (X)_{n+1}^2 in factored form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return FactoredRational(1, {Fraction(k): 2 for k in range(1, n + 1)}, {p: 2 for p in range(n + 1)})


def one_pole_residues(n: int) -> dict[int, Fraction]:
    """Residues of (X-n)_n / (X)_{n+1} at X = -p."""
    return {p: Fraction((-1) ** (n - p) * binomial(n, p) * binomial(p + n, n)) for p in range(n + 1)}


def alpha_beta(n: int) -> tuple[list[int], list[Fraction]]:
    """Closed forms of alpha_i and beta_i."""
    g = [binomial(n, i) * binomial(n + i, i) for i in range(n + 1)]
    alpha = [x * x for x in g]
    beta = []
    for i in range(n + 1):
        s = sum((Fraction((-1) ** j * g[j], j - i) for j in range(n + 1) if j != i), ZERO)
        beta.append(2 * (-1) ** i * g[i] * s)
    return alpha, beta


def rn_partial_fractions(n: int, method: str = "product") -> PartialFractionTable:
    """Table of R_n: alpha_i = c_{i,2}, beta_i = c_{i,1}.

    method: "product" squares the one-pole expansion, "local" uses Taylor
    expansion at each pole, "closed" uses the binomial formulas.
    """
    if method == "product":
        f = one_pole_residues(n)
        return ProductExpansion.from_simple(f).multiply_simple(f).table(n)
    if method == "local":
        return local_partial_fractions(rn_rational(n), n)
    if method == "closed":
        alpha, beta = alpha_beta(n)
        return PartialFractionTable({i: [beta[i], Fraction(alpha[i])] for i in range(n + 1)}, 2, n=n)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ABCPolys:
    n: int
    A: Polynomial
    B: Polynomial
    C: Polynomial

    def invariants_hold(self) -> bool:
        d = lcm_upto(max(self.n, 1))
        return (
            self.A.is_integral()
            and (self.B * d).is_integral()
            and (self.C * d**3).is_integral()
            and self.B(Fraction(1)) == 0
            and self.A.degree <= self.n
            and self.B.degree <= self.n
            and self.C.degree <= self.n - 1
        )

    def apery_pair(self) -> AperyPair:
        return AperyPair(self.n, self.A(Fraction(1)), -self.C(Fraction(1)) / 2, "sigma")


def abc_polynomials(n: int) -> ABCPolys:
    table = rn_partial_fractions(n)
    alpha = [table.c(i, 2) for i in range(n + 1)]
    beta = [table.c(i, 1) for i in range(n + 1)]
    C = []
    for t in range(n):
        s = sum((2 * alpha[i] / Fraction(i - t) ** 3 + beta[i] / Fraction(i - t) ** 2 for i in range(t + 1, n + 1)), ZERO)
        C.append(-s)
    out = ABCPolys(n, Polynomial(alpha), Polynomial(beta), Polynomial(C))
    if not out.invariants_hold():
        raise ArithmeticError(f"A/B/C invariants fail at n = {n}")
    return out


def sigma_decomposition(n: int) -> PolylogDecomposition:
    return polylog_decomposition(rn_partial_fractions(n), d=1, provenance={"construction": "sigma", "n": n})


@dataclass(frozen=True)
class SeriesComparison:
    direct: HighPrecReal
    decomposed: HighPrecReal

    def agree(self, digits: int) -> bool:
        return self.direct.agrees(self.decomposed, digits)


def sigma_series_value(n: int, z=1, precision: int = 50) -> SeriesComparison:
    """-sum R_n'(k) z^(-k) summed directly and through the polylog decomposition."""
    if abs(Fraction(z)) < 1:
        raise ValueError("sigma_series_value needs |z| >= 1")
    direct = direct_sum(rn_rational(n), z, d=1, precision=precision)
    dec = decomposition_value(sigma_decomposition(n), z, precision)
    return SeriesComparison(direct, dec)


def _r_and_derivative(alpha, beta, k: int) -> tuple[Fraction, Fraction]:
    r = sum((Fraction(a, 1) / (k + i) ** 2 + Fraction(b) / (k + i) for i, (a, b) in enumerate(zip(alpha, beta))), ZERO)
    dr = sum((-2 * Fraction(a, 1) / (k + i) ** 3 - Fraction(b) / (k + i) ** 2 for i, (a, b) in enumerate(zip(alpha, beta))), ZERO)
    return r, dr


def pade_order_check(n: int) -> bool:
    """R_n and R_n' vanish at 1..n and sum beta_i = 0."""
    if n == 0:
        return True
    table = rn_partial_fractions(n)
    alpha = [table.c(i, 2) for i in range(n + 1)]
    beta = [table.c(i, 1) for i in range(n + 1)]
    for k in range(1, n + 1):
        r, dr = _r_and_derivative(alpha, beta, k)
        if r or dr:
            return False
    return sum(beta) == 0


def order_is_sharp(n: int) -> bool:
    """R_n(n+1) != 0."""
    return rn_rational(n)(n + 1) != 0


def pade_system(n: int) -> list[list[Fraction]]:
    """Rows of the order conditions in the unknowns (alpha_0..alpha_n, beta_0..beta_n)."""
    rows = []
    for k in range(1, n + 1):
        rows.append([Fraction(1, (k + i) ** 2) for i in range(n + 1)] + [Fraction(1, k + i) for i in range(n + 1)])
        rows.append([Fraction(-2, (k + i) ** 3) for i in range(n + 1)] + [Fraction(-1, (k + i) ** 2) for i in range(n + 1)])
    rows.append([ZERO] * (n + 1) + [Fraction(1)] * (n + 1))
    return rows


def pade_solution_dimension(n: int) -> int:
    rows = pade_system(n)
    return 2 * n + 2 - rank(rows)


def pade_kernel_matches(n: int) -> bool:
    """The kernel is spanned by the actual (alpha, beta)."""
    basis = nullspace(pade_system(n), 2 * n + 2)
    if len(basis) != 1:
        return False
    alpha, beta = alpha_beta(n)
    target = [Fraction(a) for a in alpha] + beta
    vec = basis[0]
    piv = next(i for i, x in enumerate(target) if x)
    scale = target[piv] / vec[piv]
    return all(scale * x == y for x, y in zip(vec, target))


def orthogonality_moments(n: int, k: int) -> tuple[Fraction, Fraction]:
    """The two moment integrals of B_n(x) - A_n(x) log x against x^k and x^k log x."""
    alpha, beta = alpha_beta(n)
    first = sum((Fraction(beta[i]) / (i + k + 1) + Fraction(alpha[i], (i + k + 1) ** 2) for i in range(n + 1)), ZERO)
    second = sum((-Fraction(beta[i]) / (i + k + 1) ** 2 - Fraction(2 * alpha[i], (i + k + 1) ** 3) for i in range(n + 1)), ZERO)
    return first, second


def orthogonality_check(n: int) -> bool:
    return all(orthogonality_moments(n, k) == (0, 0) for k in range(n))


# -- very-well-poised series --------------------------------------------------


def vwp_rational(n: int) -> FactoredRational:
    """n!^2 (2X+n) (X-n)_n (X+n+1)_n / (X)_{n+1}^4."""
    zeros = {Fraction(k): 1 for k in range(1, n + 1)}
    zeros.update({Fraction(-k): 1 for k in range(n + 1, 2 * n + 1)})
    zeros[Fraction(-n, 2)] = zeros.get(Fraction(-n, 2), 0) + 1
    return FactoredRational(2 * math.factorial(n) ** 2, zeros, {p: 4 for p in range(n + 1)})


@dataclass(frozen=True)
class VwpDecomp:
    n: int
    table: PartialFractionTable
    P: tuple[Polynomial, ...]
    u_TB: Fraction
    v_TB: Fraction

    def invariants_hold(self) -> bool:
        d = lcm_upto(self.n)
        return all((self.P[j] * d ** (4 - j)).is_integral() for j in range(5)) and self.P[1](Fraction(1)) == 0

    def apery_pair(self) -> AperyPair:
        return AperyPair(self.n, self.u_TB, self.v_TB, "vwp")

    def reciprocity_exponent(self, j: int) -> int | None:
        """The m with P_j(z) = (-1)^(j+1) z^m P_j(1/z), searched over 0..n+4 (None if none)."""
        p = self.P[j]
        for m in range(max(p.degree, 0), self.n + 5):
            if reciprocity_holds(p, m, (-1) ** (j + 1)):
                return m
        return None


def vwp_decomposition(n: int) -> VwpDecomp:
    if n < 1:
        raise ValueError("n must be >= 1")
    rat = vwp_rational(n)
    table = local_partial_fractions(rat, n)
    dec = polylog_decomposition(table, d=0, provenance={"construction": "vwp", "n": n})
    P = (dec.constant_poly,) + tuple(dec.P(j) for j in range(1, 5))
    one = Fraction(1)
    if P[1](one) != 0 or P[2](one) != 0 or P[4](one) != 0:
        raise ArithmeticError("expected vanishing of P_1(1), P_2(1), P_4(1) failed")
    out = VwpDecomp(n, table, P, P[3](one) / 2, -P[0](one) / 2)
    if not out.invariants_hold():
        raise ArithmeticError(f"denominator invariants fail for the very-well-poised table at n = {n}")
    return out


def vwp_symmetry_check(n: int, samples: int = 8, seed: int = 0) -> bool:
    """H_n(-X-n) = -H_n(X) at random rational points."""
    rat = vwp_rational(n)
    rng = random.Random(seed)
    for _ in range(samples):
        x = Fraction(rng.randint(-500, 500), rng.randint(1, 97))
        if (x + n).denominator == 1 and -n <= x <= 0:
            continue
        try:
            if rat(-x - n) != -rat(x):
                return False
        except ZeroDivisionError:
            continue
    return True


def reconstruction_check(table: PartialFractionTable, rat: FactoredRational, samples: int = 20, seed: int = 0) -> bool:
    """Table evaluation equals the product form at random rational points."""
    rng = random.Random(seed)
    done = 0
    while done < samples:
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        if x.denominator == 1 and -x in rat.poles:
            continue
        if table(x) != rat(x):
            return False
        done += 1
    return True
