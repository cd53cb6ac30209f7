"""High-precision numerics: zeta values, polylogarithms, series sums, quadrature, rate fits."""

from .quadrature import CubeMaximum, beukers_integral, cube_kernel, cube_maximum
from .rates import RateFit, rate_fit
from .special import GUARD, HighPrecReal, alternating_hurwitz, eta, hurwitz_zeta, polylog, zeta
from .sums import decomposition_value, direct_sum, linear_form_value

__all__ = [
    "CubeMaximum",
    "GUARD",
    "HighPrecReal",
    "RateFit",
    "alternating_hurwitz",
    "beukers_integral",
    "cube_kernel",
    "cube_maximum",
    "decomposition_value",
    "direct_sum",
    "eta",
    "hurwitz_zeta",
    "linear_form_value",
    "polylog",
    "rate_fit",
    "zeta",
]
