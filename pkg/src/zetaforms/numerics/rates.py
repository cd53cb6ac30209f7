"""Least-squares growth rates of sequences indexed by n."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

import mpmath

MIN_SAMPLES = 10


@dataclass(frozen=True)
class RateFit:
    """Slope of log|value_n| against n, fitted on the last half of the samples."""

    samples: tuple[tuple[int, float], ...]
    slope: float
    intercept: float
    target: float | None = None

    @property
    def relative_deviation(self) -> float | None:
        if self.target is None:
            return None
        return abs(self.slope - self.target) / abs(self.target)

    def within(self, tolerance: float) -> bool:
        if self.target is None:
            raise ValueError("no reference rate to compare against")
        dev = self.relative_deviation
        return dev <= tolerance


def _log_abs(x) -> float:
    if isinstance(x, (int, float)):
        return math.log(abs(x)) if x else -math.inf
    if hasattr(x, "value"):
        x = x.value
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return math.log(abs(x.numerator)) - math.log(x.denominator)
    return float(mpmath.log(abs(x)))


def rate_fit(values: Mapping[int, object] | Sequence, reference: float | None = None, logs: bool = False) -> RateFit:
    """Fit log|v_n| = slope * n + intercept on the last half of the samples.

    ``values`` maps n to a number (int, Fraction, mpf or HighPrecReal); with
    ``logs=True`` the values are already logarithms.
    """
    items = sorted(values.items()) if isinstance(values, Mapping) else list(enumerate(values))
    if len(items) < MIN_SAMPLES:
        raise ValueError(f"rate_fit needs at least {MIN_SAMPLES} samples, got {len(items)}")
    samples = tuple((int(n), float(v) if logs else _log_abs(v)) for n, v in items)
    tail = samples[len(samples) // 2 :]
    xs = [float(n) for n, _ in tail]
    ys = [y for _, y in tail]
    if any(math.isinf(y) for y in ys):
        raise ValueError("a sampled value is zero; its logarithm is undefined")
    if len(set(ys)) == 1:
        slope, intercept = 0.0, ys[0]
    else:
        slope, intercept = statistics.linear_regression(xs, ys)
    return RateFit(samples, slope, intercept, reference)
