"""Direct summation of sum_{k>=1} W_d R(k) z^(-k) with a certified tail.

Here W_d R = ((-1)^d / d!) R^(d), R a FactoredRational. Terms come from the
Taylor expansion of R at each integer k (so integer zeros cost nothing
special). The tail uses the expansion of R at infinity,

    R(X) = C X^(-delta) g(1/X),   |g_m| <= G (2P)^m   (Cauchy, radius 1/(2P)),

where P bounds every zero and pole. For z = 1 and z = -1 the tail is summed
term by term in g through (alternating) Hurwitz zeta values; for |z| > 1 it
is bounded by a geometric envelope.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from ..core.ratfunc import FactoredRational
from .special import GUARD, HighPrecReal, alternating_hurwitz, hurwitz_zeta, polylog


def _mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _log10_abs(x: Fraction) -> float:
    if x == 0:
        return -math.inf
    return math.log10(abs(x.numerator)) - math.log10(x.denominator)


class _Envelope:
    """Constants of the expansion at infinity used in tail bounds."""

    def __init__(self, rat: FactoredRational, d: int):
        self.P = float(rat.radius)
        rho = 1.0 / (2.0 * self.P)
        logG = 0.0
        for r, m in rat.zeros.items():
            logG += m * math.log1p(abs(float(r)) * rho)
        for p, m in rat.poles.items():
            logG -= m * math.log1p(-p * rho)
        self.log10_CG = _log10_abs(rat.constant) + logG / math.log(10)
        self.delta = rat.decay
        self.d = d

    def log10_term_bound(self, k: int) -> float:
        """log10 of a bound on |W_d R(x)| for all x >= k >= 4P."""
        s = self.delta + self.d
        x = 2.0 * self.P / k
        return self.log10_CG - s * math.log10(k) - s * math.log10(1 - x)

    def log10_remainder(self, K: int, M: int) -> float:
        """log10 bound on the part of the tail sum dropped after M expansion terms."""
        s = self.delta + self.d
        x = 2.0 * self.P / K
        binom = math.lgamma(M + s + 1) - math.lgamma(s) - math.lgamma(M + 2)
        return (
            self.log10_CG
            + (1 - s) * math.log10(K)
            + (M + 1) * math.log10(x)
            + binom / math.log(10)
            - s * math.log10(1 - x)
        )


def _term(rat: FactoredRational, k: int, d: int):
    """(-1)^d R^(d)(k) / d! in the current mpmath precision."""
    s = [_mpf(rat.constant)] + [mpmath.mpf(0)] * d
    for r, m in rat.zeros.items():
        c = k - _mpf(r)
        for _ in range(m):
            for t in range(d, 0, -1):
                s[t] = s[t] * c + s[t - 1]
            s[0] = s[0] * c
    for p, m in rat.poles.items():
        c = mpmath.mpf(k + p)
        for _ in range(m):
            s[0] = s[0] / c
            for t in range(1, d + 1):
                s[t] = (s[t] - s[t - 1]) / c
    return s[d] if d % 2 == 0 else -s[d]


def _log10_max_term(rat: FactoredRational, K: int) -> float:
    best = -math.inf
    for k in range(1, K + 1):
        acc = _log10_abs(rat.constant)
        zero = False
        for r, m in rat.zeros.items():
            v = k - float(r)
            if v == 0:
                zero = True
                break
            acc += m * math.log10(abs(v))
        if zero:
            continue
        for p, m in rat.poles.items():
            acc -= m * math.log10(k + p)
        best = max(best, acc)
    return best


def _series_at_infinity(rat: FactoredRational, M: int):
    """g_0..g_M of R(X) = C X^(-delta) g(1/X), in the current precision."""
    g = [mpmath.mpf(1)] + [mpmath.mpf(0)] * M
    for r, m in rat.zeros.items():
        c = _mpf(r)
        for _ in range(m):
            # multiply by (1 - r w)
            for t in range(M, 0, -1):
                g[t] -= c * g[t - 1]
    for p, m in rat.poles.items():
        for _ in range(m):
            # divide by (1 + p w)
            for t in range(1, M + 1):
                g[t] -= p * g[t - 1]
    return g


def direct_sum(rat: FactoredRational, z, d: int = 0, precision: int = 50, K: int | None = None) -> HighPrecReal:
    """sum_{k>=1} W_d R(k) z^(-k) for |z| >= 1, error below 10^-precision."""
    zf = Fraction(z)
    if abs(zf) < 1:
        raise ValueError("direct summation needs |z| >= 1")
    if rat.decay + d < 2 and abs(zf) == 1:
        raise ValueError("the series does not converge absolutely at |z| = 1")
    env = _Envelope(rat, d)
    target = -(precision + 2)  # log10 of the allowed tail error
    if K is None:
        K = max(20, int(math.ceil(20 * env.P)))
    if abs(zf) > 1:
        lz = math.log10(abs(float(zf)))
        # grow K until the geometric envelope is small enough
        K = max(K, int(math.ceil(4 * env.P)))
        while env.log10_term_bound(K + 1) - K * lz - math.log10(abs(float(zf)) - 1) > target:
            K += max(16, K // 8)
    head_mag = max(_log10_max_term(rat, K) + d * math.log10(2.0 * max(1.0, env.P)), 0.0)
    tail_mag = max(env.log10_CG, 0.0)
    dps = precision + GUARD + int(math.ceil(max(head_mag, tail_mag)))
    with mpmath.workdps(dps):
        zv = _mpf(zf)
        winv = 1 / zv
        head = mpmath.mpf(0)
        zp = mpmath.mpf(1)
        for k in range(1, K + 1):
            zp *= winv
            head += _term(rat, k, d) * zp
        rounding = mpmath.mpf(10) ** (max(head_mag, tail_mag) - dps + 4) * K
        if abs(zf) > 1:
            tail_err = mpmath.mpf(10) ** (env.log10_term_bound(K + 1)) * abs(winv) ** K / (abs(zv) - 1)
            return HighPrecReal(head, tail_err + rounding, precision)
        # z = +-1: expand the tail
        M = 1
        while env.log10_remainder(K, M) > target:
            M += 1
            if M > 5000:
                raise ArithmeticError("tail expansion does not converge fast enough; increase K")
        g = _series_at_infinity(rat, M)
        C = _mpf(rat.constant)
        tail = mpmath.mpf(0)
        zeta_err = mpmath.mpf(0)
        delta = rat.decay
        for m in range(M + 1):
            if not g[m]:
                continue
            s = m + delta + d
            w = math.comb(s - 1, d)
            if zf == 1:
                h = hurwitz_zeta(s, K + 1, dps - GUARD)
            else:
                h = alternating_hurwitz(s, K + 1, dps - GUARD)
            tail += C * g[m] * w * h.value
            zeta_err += abs(C * g[m] * w) * h.error
        err = mpmath.mpf(10) ** env.log10_remainder(K, M) + zeta_err + rounding
        return HighPrecReal(head + tail, err, precision)


def decomposition_value(dec, z, precision: int = 50) -> HighPrecReal:
    """Evaluate constant_poly(z) + sum_s P_s(z) Li_s(1/z) for a PolylogDecomposition."""
    zf = Fraction(z)
    if zf == 1:
        return linear_form_value(dec.at_one(), precision)
    if zf == -1:
        return linear_form_value(dec.at_minus_one(), precision)
    if abs(zf) < 1:
        raise ValueError("decomposition_value needs |z| >= 1")
    mags = [_log10_abs(c) + len(p) * math.log10(abs(float(zf))) for p in dec.polys.values() for c in p.coeffs if c]
    mags += [_log10_abs(c) + len(dec.constant_poly) * math.log10(abs(float(zf))) for c in dec.constant_poly.coeffs if c]
    scale = max([0.0] + mags)
    work = precision + int(math.ceil(scale)) + 5
    with mpmath.workdps(work + GUARD):
        total = dec.constant_poly.evaluate_mp(_mpf(zf))
        err = mpmath.mpf(10) ** (-(work + GUARD - 3)) * (1 + abs(total))
        for s, p in dec.polys.items():
            if p.is_zero():
                continue
            pv = p.evaluate_mp(_mpf(zf))
            li = polylog(s, 1 / zf, work)
            total += pv * li.value
            err += abs(pv) * li.error
        return HighPrecReal(total, err, precision)


def linear_form_value(form, precision: int = 50) -> HighPrecReal:
    """Numeric value of a ZetaLinearForm or an AperyPair (u zeta(3) - v)."""
    from ..core.forms import ZetaLinearForm
    from .special import eta, zeta

    if not isinstance(form, ZetaLinearForm):
        form = ZetaLinearForm(-Fraction(form.v), {3: Fraction(form.u)})
    coeffs = [c for c in [form.constant, form.log2, *form.coefficients.values()] if c]
    scale = max([0.0] + [_log10_abs(c) for c in coeffs])
    work = precision + int(math.ceil(scale)) + 5
    with mpmath.workdps(work + GUARD):
        total = _mpf(form.constant)
        err = mpmath.mpf(0)
        if form.log2:
            l2 = eta(1, work)
            total += _mpf(form.log2) * l2.value
            err += abs(_mpf(form.log2)) * l2.error
        for s, c in form.coefficients.items():
            if not c:
                continue
            zs = zeta(s, work)
            total += _mpf(c) * zs.value
            err += abs(_mpf(c)) * zs.error
        return HighPrecReal(total, err, precision)


def significant_precision(compute, digits: int, start: int = 40, limit: int = 4000) -> int:
    """Absolute precision giving ``digits`` significant digits of compute(precision).

    ``compute`` maps an absolute precision to a HighPrecReal; it is called at
    doubling precisions until the value clears its error bound.
    """
    p = start
    while p <= limit:
        v = compute(p)
        if v.value != 0 and abs(v.value) > 1000 * v.error:
            mag = -int(math.floor(float(mpmath.log10(abs(v.value)))))
            return max(p, mag + digits + 5)
        p *= 2
    raise ArithmeticError("value indistinguishable from zero within the precision limit")


def relative_agreement(a: HighPrecReal, b: HighPrecReal, digits: int) -> bool:
    """|a - b| <= 10^-digits |a| with both error bounds below that threshold."""
    with mpmath.workdps(max(a.precision, b.precision) + GUARD):
        tol = mpmath.mpf(10) ** (-digits) * abs(a.value)
        return abs(a.value - b.value) <= tol and a.error < tol and b.error < tol
