"""Exact rational scalars and polynomials in the deformation parameter ``l``.

Scalars are :class:`fractions.Fraction`.  A :class:`LambdaPoly` is a dense,
immutable polynomial in one indeterminate (printed as ``l``) with rational
coefficients stored lowest degree first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

BigRational = Fraction
Scalar = Union[int, Fraction]


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the rational zero."""


def to_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Always ``num/den``, as used in the JSON coefficient arrays."""
    return f"{q.numerator}/{q.denominator}"


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return to_rational(a) + to_rational(b)


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return to_rational(a) * to_rational(b)


def rat_neg(a: Fraction) -> Fraction:
    return -to_rational(a)


def rat_inv(a: Fraction) -> Fraction:
    a = to_rational(a)
    if a == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / a


def _norm_coeff(c: Scalar) -> Scalar:
    # Integral values are kept as int: the Stirling tables are integral and
    # int arithmetic is far cheaper than Fraction arithmetic.
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class LambdaPoly:
    """Polynomial in ``l`` over the rationals; ``coeffs[i]`` multiplies ``l**i``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        c = [_norm_coeff(to_rational(x) if isinstance(x, str) else x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, c: list) -> LambdaPoly:
        while c and c[-1] == 0:
            c.pop()
        p = object.__new__(cls)
        p._c = tuple(c)
        p._hash = None
        return p

    @classmethod
    def const(cls, value: Scalar) -> LambdaPoly:
        return cls((value,))

    @classmethod
    def lam(cls) -> LambdaPoly:
        return cls((0, 1))

    # ---- inspection -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self._c)

    @property
    def degree(self) -> int:
        """Degree in ``l``; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def coeff(self, i: int) -> Fraction:
        return Fraction(self._c[i]) if 0 <= i < len(self._c) else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self._c)

    # ---- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> LambdaPoly | None:
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,))
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self._c, q._c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] = _norm_coeff(res[i] + x)
        return LambdaPoly._raw(res)

    __radd__ = __add__

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly._raw([-x for x in self._c])

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return LambdaPoly._raw([_norm_coeff(x * other) for x in self._c])
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return LambdaPoly._raw([_norm_coeff(x) for x in res])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LambdaPoly:
        if n < 0:
            raise ValueError("negative exponent")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, lam: Scalar) -> Fraction:
        """Horner evaluation at an exact rational ``l``."""
        lam = to_rational(lam)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * lam + c
        return acc

    def substitute_zero(self) -> LambdaPoly:
        return LambdaPoly.const(self._c[0]) if self._c else ZERO

    # ---- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._c == q._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    # ---- formatting -----------------------------------------------------

    def to_human(self, var: str = "l") -> str:
        """ASCII form like ``1 - 2*l + l^2`` (ascending degree)."""
        if not self._c:
            return "0"
        parts: list[tuple[str, str]] = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(Fraction(c))
            mag_s = str(mag)
            if i == 0:
                body = mag_s
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag_s}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(Fraction(c)) for c in self._c]}

    @classmethod
    def from_json(cls, data: dict) -> LambdaPoly:
        return cls(parse_rational(s) for s in data["coeffs"])

    def __repr__(self) -> str:
        return f"LambdaPoly({self.to_human()!r})"

    def __str__(self) -> str:
        return self.to_human()


ZERO = LambdaPoly()
ONE = LambdaPoly((1,))
LAM = LambdaPoly((0, 1))


def poly_add(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p + q


def poly_mul(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p * q


def poly_scale(p: LambdaPoly, s: Scalar) -> LambdaPoly:
    return p * to_rational(s)


def poly_neg(p: LambdaPoly) -> LambdaPoly:
    return -p


def poly_eval(p: LambdaPoly, lam: Scalar) -> Fraction:
    return p.eval(lam)


def as_poly(value: LambdaPoly | Scalar) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    return LambdaPoly.const(to_rational(value))


def linear(const: Scalar, slope: Scalar) -> LambdaPoly:
    """``const + slope*l``."""
    return LambdaPoly((const, slope))


def poly_sum(terms: Sequence[LambdaPoly] | Iterable[LambdaPoly]) -> LambdaPoly:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc
