"""Exact and high-precision constructions of rational linear forms in zeta values."""

from .apery import AperyPair, apery_by_recurrence, apery_by_sum
from .core import FactoredRational, FormalSeries, PartialFractionTable, Polynomial, ZetaLinearForm, lcm_upto
from .numerics import HighPrecReal, linear_form_value, zeta

__version__ = "0.1.0"

__all__ = [
    "AperyPair",
    "FactoredRational",
    "FormalSeries",
    "HighPrecReal",
    "PartialFractionTable",
    "Polynomial",
    "ZetaLinearForm",
    "apery_by_recurrence",
    "apery_by_sum",
    "lcm_upto",
    "linear_form_value",
    "zeta",
    "__version__",
]
