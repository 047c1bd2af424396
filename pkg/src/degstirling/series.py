"""Truncated power series in ``t`` over Q[l] and the degenerate exponential."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exactnum import ONE, ZERO, LambdaPoly, Scalar, as_poly
from .factorials import binomial, deg_falling
from .report import IdentityReport, run_check
from .stirling import build_s2_table


class RangeError(ValueError):
    """Index outside the admissible range of a check."""


class TruncatedSeries:
    """``sum_{n <= order} c_n t^n``; mixed-order arithmetic keeps the smaller order."""

    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Sequence[LambdaPoly | Scalar], order: int | None = None):
        c = [as_poly(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = c[: order + 1] + [ZERO] * (order + 1 - len(c))
        self.order = order
        self._c = tuple(c)

    @classmethod
    def const(cls, value, order: int) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def t(cls, order: int) -> TruncatedSeries:
        return cls([ZERO, ONE], order)

    @property
    def coeffs(self) -> tuple[LambdaPoly, ...]:
        return self._c

    def __getitem__(self, n: int) -> LambdaPoly:
        return self._c[n]

    def _pair(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(other, self.order)
        T = min(self.order, other.order)
        return T, self._c, other._c

    def __add__(self, other):
        T, a, b = self._pair(other)
        return TruncatedSeries([a[i] + b[i] for i in range(T + 1)], T)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self._c], self.order)

    def __sub__(self, other):
        T, a, b = self._pair(other)
        return TruncatedSeries([a[i] - b[i] for i in range(T + 1)], T)

    def __mul__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            s = as_poly(other)
            return TruncatedSeries([c * s for c in self._c], self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __repr__(self) -> str:
        body = " + ".join(f"({c}) t^{n}" for n, c in enumerate(self._c) if not c.is_zero())
        return f"TruncatedSeries({body or '0'}; O(t^{self.order + 1}))"


def series_mul(s: TruncatedSeries, u: TruncatedSeries) -> TruncatedSeries:
    T = min(s.order, u.order)
    a, b = s.coeffs, u.coeffs
    out = []
    for n in range(T + 1):
        acc = ZERO
        for i in range(n + 1):
            if not a[i].is_zero() and not b[n - i].is_zero():
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return TruncatedSeries(out, T)


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("negative power")
    out = TruncatedSeries.const(ONE, s.order)
    for _ in range(k):
        out = series_mul(out, s)
    return out


def degenerate_exp(x: LambdaPoly | Scalar, order: int) -> TruncatedSeries:
    """``e_l^x(t)``: the coefficient of ``t^n`` is ``(x)_{n,l} / n!``."""
    return TruncatedSeries(
        [deg_falling(x, n) * Fraction(1, math.factorial(n)) for n in range(order + 1)], order
    )


def scaled_gf_coefficients(k: int, order: int) -> list[LambdaPoly]:
    """``n! [t^n] (e_l(t) - 1)^k / k!`` for ``n = 0..order``."""
    g = series_pow(degenerate_exp(1, order) - 1, k) * Fraction(1, math.factorial(k))
    return [g[n] * math.factorial(n) for n in range(order + 1)]


def gf_check(k: int, order: int, s2=None) -> IdentityReport:
    """Compare the scaled generating-function coefficients with column ``k``.

    Below the diagonal (``n < k``) the coefficient must vanish.
    """
    if k < 0 or k > order:
        raise RangeError(f"need 0 <= k <= order, got k={k}, order={order}")
    tables = {"s2": s2 if s2 is not None else build_s2_table(order)}
    scaled = scaled_gf_coefficients(k, order)

    def evaluate(tab, n):
        expect = tab["s2"][n, k] if n >= k else ZERO
        return scaled[n], expect

    return run_check(
        "gf", f"k={k}, 0<=n<={order}", ({"n": n} for n in range(order + 1)), evaluate, tables
    )


def alternating_sum(n: int, k: int) -> LambdaPoly:
    """``sum_m C(k, m) (-1)^(k-m) (m)_{n,l}``."""
    acc = ZERO
    for m in range(k + 1):
        acc = acc + deg_falling(m, n) * (binomial(k, m) * (-1) ** (k - m))
    return acc


def alternating_sum_check(n: int, k: int, s2=None) -> IdentityReport:
    tables = {"s2": s2 if s2 is not None else build_s2_table(n)}

    def evaluate(tab, n, k):
        rhs = tab["s2"][n, k] * math.factorial(k) if n >= k else ZERO
        return alternating_sum(n, k), rhs

    return run_check("altsum", f"n={n}, k={k}", [{"n": n, "k": k}], evaluate, tables)
