"""Truncated formal power series with exact coefficients.

A series of order N knows its coefficients of degree 0..N and nothing
beyond. Every operation propagates the truncation order honestly, and
asking for a coefficient past it raises :class:`TruncationError`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .poly import Polynomial


class TruncationError(IndexError):
    """Raised when a coefficient past the truncation order is requested."""


class FormalSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(c) > order + 1:
            c = c[: order + 1]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.order = order

    @classmethod
    def variable(cls, order: int) -> "FormalSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "FormalSeries":
        return cls([c], order)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "FormalSeries":
        return cls(p.coeffs[: order + 1], order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k > self.order:
            raise TruncationError(f"coefficient {k} requested from a series known through degree {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return FormalSeries(self.coeffs[: order + 1], order)

    def _coerce(self, other) -> "FormalSeries":
        if isinstance(other, FormalSeries):
            return other
        if isinstance(other, Polynomial):
            # a polynomial is exact at every degree
            return FormalSeries.from_polynomial(other, self.order)
        return FormalSeries.constant(other, self.order)

    def __add__(self, other) -> "FormalSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return FormalSeries((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> "FormalSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FormalSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FormalSeries":
        if not isinstance(other, (FormalSeries, Polynomial)):
            c = Fraction(other)
            return FormalSeries((c * a for a in self.coeffs), self.order)
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return FormalSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def agrees_with(self, other: "FormalSeries") -> bool:
        """Equality on the common range of known coefficients."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def inverse(self) -> "FormalSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / a[0]
        for m in range(1, self.order + 1):
            s = sum((a[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
            out[m] = -s * out[0]
        return FormalSeries(out, self.order)

    def derivative(self) -> "FormalSeries":
        if self.order == 0:
            raise TruncationError("derivative of an order-0 series carries no information")
        return FormalSeries((k * self.coeffs[k] for k in range(1, self.order + 1)), self.order - 1)

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = FormalSeries.constant(self.coeffs[n], n)
        # Horner in the composition ring
        for k in range(n - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def reversion(self) -> "FormalSeries":
        """Compositional inverse r with self(r(t)) = t.

        Requires s(0) = 0 and s'(0) = 1; integer input gives integer output.
        """
        n = self.order
        if n < 1:
            raise TruncationError("reversion needs a series known at least through degree 1")
        if self.coeffs[0] != 0 or self.coeffs[1] != 1:
            raise ValueError("reversion needs s(0) = 0 and s'(0) = 1")
        r = [Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 1)
        for m in range(2, n + 1):
            # r_m enters s(r(t)) at degree m only through the linear term s_1 r_m = r_m
            trial = self.compose(FormalSeries(r, n))
            r[m] = -trial.coeffs[m]
        return FormalSeries(r, n)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"FormalSeries([{shown}{tail}], order={self.order})"
