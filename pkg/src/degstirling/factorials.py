"""Degenerate and classical factorial products, binomials, and polynomials in x.

Every factorial takes a :class:`LambdaPoly` argument so that shifted points
such as ``1 - l`` or ``l + 1 - k*l`` are handled by the same code.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exactnum import LAM, ONE, ZERO, LambdaPoly, Scalar, as_poly, to_rational


@lru_cache(maxsize=4096)
def _deg_product(p: LambdaPoly, n: int, step: int) -> LambdaPoly:
    out = ONE
    for i in range(n):
        out = out * (p + LAM * (step * i))
    return out


def deg_falling(p: LambdaPoly | Scalar, n: int) -> LambdaPoly:
    """``p (p - l) (p - 2l) ... (p - (n-1)l)``; 1 when ``n == 0``."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return _deg_product(as_poly(p), n, -1)


def deg_rising(p: LambdaPoly | Scalar, n: int) -> LambdaPoly:
    """``p (p + l) ... (p + (n-1)l)``.

    Negative ``n`` gives 0; the identity checks use this to drop boundary
    terms whose length would be ``-1``.
    """
    if n < 0:
        return ZERO
    return _deg_product(as_poly(p), n, 1)


@lru_cache(maxsize=4096)
def _classical(p: LambdaPoly, n: int) -> LambdaPoly:
    out = ONE
    for i in range(n):
        out = out * (p - i)
    return out


def classical_falling(p: LambdaPoly | Scalar, n: int) -> LambdaPoly:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return _classical(as_poly(p), n)


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient, zero outside ``0 <= k <= n`` (and for ``n < 0``)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


class XPoly:
    """Polynomial in an outer variable with :class:`LambdaPoly` coefficients."""

    __slots__ = ("_c",)
    var = "x"

    def __init__(self, coeffs: Iterable[LambdaPoly | Scalar] = ()):
        c = [as_poly(x) for x in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, value: LambdaPoly | Scalar):
        return cls((value,))

    @classmethod
    def variable(cls):
        return cls((ZERO, ONE))

    @property
    def coeffs(self) -> tuple[LambdaPoly, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def coeff(self, i: int) -> LambdaPoly:
        return self._c[i] if 0 <= i < len(self._c) else ZERO

    def is_zero(self) -> bool:
        return not self._c

    def _like(self, other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return type(self).const(other)
        return None

    def __add__(self, other):
        q = self._like(other)
        if q is None:
            return NotImplemented
        n = max(len(self._c), len(q._c))
        return type(self)(self.coeff(i) + q.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self._c)

    def __sub__(self, other):
        q = self._like(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._like(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            s = as_poly(other)
            return type(self)(c * s for c in self._c)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self._c or not other._c:
            return type(self)()
        res = [ZERO] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            for j, b in enumerate(other._c):
                res[i + j] = res[i + j] + a * b
        return type(self)(res)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        q = self._like(other)
        if q is None:
            return NotImplemented
        return self._c == q._c

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._c))

    def eval_lambda(self, lam: Scalar):
        """Specialize ``l``; the result keeps constant LambdaPoly coefficients."""
        lam = to_rational(lam)
        return type(self)(LambdaPoly.const(c.eval(lam)) for c in self._c)

    def eval_at(self, point: LambdaPoly | Scalar) -> LambdaPoly:
        point = as_poly(point)
        acc = ZERO
        for c in reversed(self._c):
            acc = acc * point + c
        return acc

    def __repr__(self) -> str:
        terms = [f"({c}) {self.var}^{i}" for i, c in enumerate(self._c) if not c.is_zero()]
        return f"{type(self).__name__}({' + '.join(terms) or '0'})"


def _falling_xpoly(cls, n: int, shift: LambdaPoly) -> XPoly:
    x = cls.variable()
    out = cls.const(ONE)
    for i in range(n):
        out = out * (x - shift * i)
    return out


@lru_cache(maxsize=None)
def deg_falling_xpoly(n: int) -> XPoly:
    """``(x)_{n,l} = x (x - l) ... (x - (n-1)l)`` as a polynomial in x."""
    return _falling_xpoly(XPoly, n, LAM)


@lru_cache(maxsize=None)
def classical_falling_xpoly(n: int) -> XPoly:
    """``(x)_n = x (x - 1) ... (x - n + 1)``."""
    return _falling_xpoly(XPoly, n, ONE)
