"""The triple integral for the zeta(3) forms and the maximum of its kernel.

    J_n = int_[0,1]^3 (u(1-u) v(1-v) w(1-w))^n / (1 - (1 - uv) w)^(n+1) du dv dw

equals 2 (u_n zeta(3) - v_n). The integrand is smooth inside the cube but
concentrates near w = 1, uv = 0 (and has log singularities at u, v = 0 for
n = 0), so the rule is a tensor product of Gauss-Legendre panels on
geometrically graded meshes.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .special import HighPrecReal

QUADRATURE_DIGITS = 15


def _graded_nodes(levels: int, order: int, toward_one: bool = False):
    """Nodes and weights of Gauss-Legendre panels on [0, 2^-L], [2^-(k+1), 2^-k], ..., [1/2, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    edges = [0.0] + [2.0 ** (-k) for k in range(levels, -1, -1)]
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        nodes.append(a + half * (x + 1.0))
        weights.append(half * w)
    t = np.concatenate(nodes)
    wt = np.concatenate(weights)
    if toward_one:
        # mirror so the grading sits at 1; keep 1 - t exact for the small distances
        return 1.0 - t, wt, t
    return t, wt, 1.0 - t


def _integrate(n: int, order: int, uv_levels: int, w_levels: int) -> float:
    u, wu, one_minus_u = _graded_nodes(uv_levels, order)
    v, wv, one_minus_v = _graded_nodes(uv_levels, order)
    w, ww, one_minus_w = _graded_nodes(w_levels, order, toward_one=True)
    # kernel parts that do not depend on u
    vv = v[:, None]
    pw = (w * one_minus_w) ** n
    pv = (v * one_minus_v) ** n
    base = (pv[:, None] * pw[None, :]) * (wv[:, None] * ww[None, :])
    total = 0.0
    for k in range(len(u)):
        uk = u[k]
        # 1 - (1 - uv) w = (1 - w) + uv w, written without cancellation
        den = one_minus_w[None, :] + uk * vv * w[None, :]
        vals = base / den ** (n + 1)
        total += wu[k] * (uk * one_minus_u[k]) ** n * vals.sum()
    return float(total)


def beukers_integral(n: int, precision: int = QUADRATURE_DIGITS) -> HighPrecReal:
    """Numeric value of J_n for small n, with a rule-comparison error estimate."""
    if n < 0 or n > 3:
        raise ValueError("beukers_integral is set up for 0 <= n <= 3")
    if precision > QUADRATURE_DIGITS:
        raise ValueError(f"requested {precision} digits; double-precision quadrature gives at most {QUADRATURE_DIGITS}")
    hi = _integrate(n, 10, 44, 56)
    lo = _integrate(n, 7, 44, 56)
    err = abs(hi - lo) + 1e-14 * abs(hi)
    return HighPrecReal(mpmath.mpf(hi), mpmath.mpf(err), precision)


def cube_kernel(x) -> float:
    u, v, w = x
    return u * (1 - u) * v * (1 - v) * w * (1 - w) / (1 - w * (1 - u * v))


@dataclass(frozen=True)
class CubeMaximum:
    value: float
    point: tuple[float, float, float]
    starts: int


def cube_maximum(starts: int = 24, seed: int = 0) -> CubeMaximum:
    """Maximum of the kernel over the open unit cube, by bounded quasi-Newton multistart."""
    from scipy.optimize import minimize

    rng = np.random.default_rng(seed)
    eps = 1e-9
    bounds = [(eps, 1 - eps)] * 3
    best_val, best_pt = -np.inf, None
    for _ in range(starts):
        x0 = rng.uniform(0.05, 0.95, size=3)
        res = minimize(lambda x: -cube_kernel(x), x0, method="L-BFGS-B", bounds=bounds, options={"ftol": 1e-15, "gtol": 1e-12})
        if -res.fun > best_val:
            best_val, best_pt = -res.fun, tuple(float(c) for c in res.x)
    return CubeMaximum(float(best_val), best_pt, starts)
