"""The q-series route to u_n, v_n, the operator annihilating them, and congruences.

With E a weight-2 combination of E_2(j tau), F a weight-4 combination of
E_4(j tau) and t = q prod_{(n,6)=1} (1 - q^n)^12, inverting t(q) and
substituting gives U(t) = sum u_n t^n and V(t) = U(t) f(q(t)) = sum v_n t^n,
where f has coefficients F_n / n^3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .apery import apery_by_recurrence
from .core.arith import is_prime, lcm_upto
from .core.poly import Polynomial
from .core.series import FormalSeries, TruncationError


@dataclass(frozen=True)
class QSeries:
    series: FormalSeries
    weight: int | None = None
    label: str = ""

    def __getitem__(self, k: int) -> Fraction:
        return self.series[k]

    @property
    def order(self) -> int:
        return self.series.order

    def is_integral(self) -> bool:
        return self.series.is_integral()


def divisor_sigma(k: int, n) -> int:
    """sigma_k(n); zero for non-integer or non-positive n."""
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = int(n)
    if n <= 0:
        return 0
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def eisenstein(kind: str, scale: int, N: int) -> QSeries:
    """q-expansion of E_2(scale tau) or E_4(scale tau) through q^N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if kind == "E2":
        c, k, w = -24, 1, 2
    elif kind == "E4":
        c, k, w = 240, 3, 4
    else:
        raise ValueError(f"unknown Eisenstein series {kind!r}")
    coeffs = [Fraction(0)] * (N + 1)
    coeffs[0] = Fraction(1)
    for m in range(1, N // scale + 1):
        coeffs[m * scale] = Fraction(c * divisor_sigma(k, m))
    return QSeries(FormalSeries(coeffs, N), w, f"{kind}({scale}tau)")


def _combination(kind: str, weights: dict[int, int], divisor: int, N: int) -> FormalSeries:
    total = FormalSeries([0], N)
    for scale, w in weights.items():
        total = total + eisenstein(kind, scale, N).series * w
    return total * Fraction(1, divisor)


def eta_like_product(N: int, factors: list[tuple[int, int]], shift: int = 0) -> FormalSeries:
    """q^shift prod_n prod_(step, power) (1 - q^(step n))^power, through q^N, by direct multiplication."""
    coeffs = [0] * (N + 1)
    if shift <= N:
        coeffs[shift] = 1
    for step, power in factors:
        for n in range(1, N // step + 1):
            e = step * n
            for _ in range(power):
                # multiply by (1 - q^e)
                for k in range(N, e - 1, -1):
                    coeffs[k] -= coeffs[k - e]
    return FormalSeries(coeffs, N)


def t_series(N: int) -> FormalSeries:
    coeffs = [0] * (N + 1)
    if N >= 1:
        coeffs[1] = 1
    for n in range(1, N + 1):
        if math.gcd(n, 6) != 1:
            continue
        for _ in range(12):
            for k in range(N, n - 1, -1):
                coeffs[k] -= coeffs[k - n]
    return FormalSeries(coeffs, N)


def build_E_F_t(N: int) -> tuple[QSeries, QSeries, QSeries]:
    if N < 1:
        raise ValueError("N must be >= 1")
    E = _combination("E2", {1: -5, 2: 2, 3: -3, 6: 30}, 24, N)
    F = _combination("E4", {1: 1, 2: -28, 3: 63, 6: -36}, 40, N)
    t = t_series(N)
    out = (QSeries(E, 2, "E"), QSeries(F, 4, "F"), QSeries(t, 0, "t"))
    for s in out:
        if not s.is_integral():
            raise ArithmeticError(f"{s.label} has a non-integral coefficient")
    if F[0] != 0:
        raise ArithmeticError("F has a nonzero constant term")
    return out


def f_closed_form(n: int) -> int:
    """F_n = 6 (sigma_3(n) - 28 sigma_3(n/2) + 63 sigma_3(n/3) - 36 sigma_3(n/6))."""
    q = Fraction(n)
    return 6 * (divisor_sigma(3, q) - 28 * divisor_sigma(3, q / 2) + 63 * divisor_sigma(3, q / 3) - 36 * divisor_sigma(3, q / 6))


@dataclass(frozen=True)
class ModularApery:
    U: FormalSeries
    V: FormalSeries
    q_of_t: FormalSeries
    t_of_q: FormalSeries


def modular_apery(N: int) -> ModularApery:
    if N < 1:
        raise ValueError("N must be >= 1")
    E, F, t = build_E_F_t(N)
    q_of_t = t.series.reversion()
    f = FormalSeries([Fraction(0)] + [F[n] / n**3 for n in range(1, N + 1)], N)
    U = E.series.compose(q_of_t)
    V = U * f.compose(q_of_t)
    if not U.is_integral():
        raise ArithmeticError("U(t) has a non-integral coefficient")
    for n in range(1, N + 1):
        if (V[n] * lcm_upto(n) ** 3).denominator != 1:
            raise ArithmeticError(f"d_{n}^3 v_{n} is not integral")
    return ModularApery(U, V, q_of_t, t.series)


@dataclass(frozen=True)
class DiffOperatorL:
    """sum_k coeffs[k](t) (d/dt)^k."""

    coeffs: tuple[Polynomial, ...]

    @classmethod
    def apery(cls) -> "DiffOperatorL":
        return cls(
            (
                Polynomial((-5, 1)),
                Polynomial((1, -112, 7)),
                Polynomial((0, 3, -153, 6)),
                Polynomial((0, 0, 1, -34, 1)),
            )
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def apply_L(op: DiffOperatorL, y: FormalSeries) -> FormalSeries:
    """Apply the operator termwise; the result is known through degree N - order."""
    if y.order < op.order + 1:
        raise TruncationError(f"need a series known through degree >= {op.order + 1}, got {y.order}")
    out_order = y.order - op.order
    total = FormalSeries([0], out_order)
    deriv = y
    for k, poly in enumerate(op.coeffs):
        if k:
            deriv = deriv.derivative()
        total = total + deriv.truncate(out_order) * FormalSeries.from_polynomial(poly, out_order)
    return total


def gamma_coefficients(N: int) -> list[int]:
    """gamma_1..gamma_N of q prod (1 - q^(2n))^4 (1 - q^(4n))^4."""
    s = eta_like_product(N, [(2, 4), (4, 4)], shift=1)
    return [int(s[k]) for k in range(1, N + 1)]


@lru_cache(maxsize=8)
def _u_table(M: int) -> tuple[int, ...]:
    return tuple(int(p.u) for p in apery_by_recurrence(M))


def _u(table, t: Fraction) -> int:
    if t.denominator != 1 or t < 0:
        return 0
    return table[int(t)]


@dataclass
class CongruenceInstance:
    family: str
    params: dict
    modulus: int
    residue: int
    status: str  # "pass", "fail" or "not applicable"


@dataclass
class CongruenceReport:
    p: int
    instances: list[CongruenceInstance] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.status != "fail" for i in self.instances)

    def families(self) -> dict[str, str]:
        out: dict[str, str] = {}
        for inst in self.instances:
            prev = out.get(inst.family)
            if inst.status == "fail" or prev is None or (prev == "not applicable" and inst.status == "pass"):
                out[inst.family] = inst.status
        return out


def congruence_suite(p: int, rs=(1, 2), ms=(1, 3)) -> CongruenceReport:
    if p < 3 or not is_prime(p):
        raise ValueError("congruence_suite needs an odd prime")
    top = max(ms) * p ** max(rs)
    u = _u_table(top)
    gamma = gamma_coefficients(max(p, 2))
    gp = gamma[p - 1]
    rep = CongruenceReport(p)

    def record(family, params, modulus, value, applicable=True):
        if not applicable:
            rep.instances.append(CongruenceInstance(family, params, modulus, 0, "not applicable"))
            return
        res = value % modulus
        rep.instances.append(CongruenceInstance(family, params, modulus, res, "pass" if res == 0 else "fail"))

    for m in ms:
        if m % p == 0:
            continue
        for r in rs:
            a = _u(u, Fraction(m * p**r - 1, 2))
            b = _u(u, Fraction(m * p ** (r - 1) - 1, 2))
            c = _u(u, (Fraction(m * p**r, p**2) - 1) / 2)
            record("three-term", {"m": m, "r": r}, p**r, a - gp * b + p**3 * c)
    record("u_p = 5", {}, p**3, u[p] - 5, applicable=p >= 5)
    record("half-index vs gamma", {}, p**2, u[(p - 1) // 2] - gp)
    for m in ms:
        for r in rs:
            record(
                "p-power index",
                {"m": m, "r": r},
                p ** (3 * r),
                u[m * p**r - 1] - u[m * p ** (r - 1) - 1],
                applicable=p >= 5,
            )
    return rep
