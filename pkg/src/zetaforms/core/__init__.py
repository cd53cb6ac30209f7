"""Exact arithmetic substrate."""

from .arith import LcmTable, binomial, factorial_valuation, is_integral, is_prime, lcm_upto, pochhammer, primes_upto, valuation
from .forms import PolylogDecomposition, ZetaLinearForm, polylog_decomposition, reciprocity_holds
from .poly import Polynomial
from .ratfunc import FactoredRational, PartialFractionTable, ProductExpansion, local_partial_fractions
from .series import FormalSeries, TruncationError


def series_reversion(s: FormalSeries) -> FormalSeries:
    return s.reversion()


__all__ = [
    "FactoredRational",
    "FormalSeries",
    "LcmTable",
    "PartialFractionTable",
    "PolylogDecomposition",
    "Polynomial",
    "ProductExpansion",
    "TruncationError",
    "ZetaLinearForm",
    "binomial",
    "factorial_valuation",
    "is_integral",
    "is_prime",
    "lcm_upto",
    "local_partial_fractions",
    "pochhammer",
    "polylog_decomposition",
    "primes_upto",
    "reciprocity_holds",
    "series_reversion",
    "valuation",
]
