"""Triangular tables of degenerate Stirling numbers.

Tables are built from the row recurrences.  The ``*_oracle`` functions
recompute a single row by expanding one falling-factorial basis in the other
and share no code with the recurrences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .exactnum import ONE, ZERO, LambdaPoly, linear
from .factorials import XPoly, classical_falling_xpoly, deg_falling_xpoly


class Kind(enum.Enum):
    FIRST = "s1"
    SECOND = "s2"


@dataclass(frozen=True)
class StirlingTable:
    """Rows ``0..n_max``; row ``n`` holds entries ``(n, 0) .. (n, n)``."""

    kind: Kind
    n_max: int
    rows: tuple[tuple[LambdaPoly, ...], ...]

    def __getitem__(self, index: tuple[int, int]) -> LambdaPoly:
        n, k = index
        if k < 0 or k > n or n < 0:
            return ZERO
        if n > self.n_max:
            raise IndexError(f"row {n} beyond table size {self.n_max}")
        return self.rows[n][k]

    def entries(self):
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield n, k, v

    def with_entry(self, n: int, k: int, value: LambdaPoly) -> StirlingTable:
        """Copy with one entry replaced (used for fault injection)."""
        rows = [list(r) for r in self.rows]
        rows[n][k] = value
        return StirlingTable(self.kind, self.n_max, tuple(tuple(r) for r in rows))

    def evaluate(self, lam) -> list[list]:
        return [[v.eval(lam) for v in row] for row in self.rows]


def _build(kind: Kind, n_max: int, factor) -> StirlingTable:
    rows: list[tuple[LambdaPoly, ...]] = [(ONE,)]
    for k in range(n_max):
        prev = rows[-1]

        def at(l: int) -> LambdaPoly:
            return prev[l] if 0 <= l <= k else ZERO

        rows.append(tuple(at(l - 1) + factor(k, l) * at(l) for l in range(k + 2)))
    return StirlingTable(kind, n_max, tuple(rows))


@lru_cache(maxsize=32)
def build_s2_table(n_max: int) -> StirlingTable:
    # S2(k+1, l) = S2(k, l-1) + (l - k*l_) S2(k, l)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _build(Kind.SECOND, n_max, lambda k, l: linear(l, -k))


@lru_cache(maxsize=32)
def build_s1_table(n_max: int) -> StirlingTable:
    # S1(k+1, l) = S1(k, l-1) - (k - l*l_) S1(k, l)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _build(Kind.FIRST, n_max, lambda k, l: linear(-k, l))


def build_table(kind: Kind, n_max: int) -> StirlingTable:
    return build_s1_table(n_max) if kind is Kind.FIRST else build_s2_table(n_max)


def expand_in_basis(target: XPoly, basis: list[XPoly]) -> list[LambdaPoly]:
    """Coefficients of ``target`` in a monic triangular basis.

    ``basis[k]`` must have degree exactly ``k`` with leading coefficient 1.
    Works from the top degree down, subtracting multiples of basis elements.
    """
    n = target.degree
    out = [ZERO] * (max(n, -1) + 1)
    rest = target
    for k in range(n, -1, -1):
        b = basis[k]
        if b.degree != k or b.coeff(k) != ONE:
            raise ValueError(f"basis element {k} is not monic of degree {k}")
        c = rest.coeff(k)
        out[k] = c
        if not c.is_zero():
            rest = rest - b * c
    if not rest.is_zero():
        raise ArithmeticError("residual after elimination")
    return out


def s2_oracle(n: int) -> list[LambdaPoly]:
    """Row ``n`` of the second kind: ``(x)_{n,l}`` written over ``(x)_k``."""
    basis = [classical_falling_xpoly(k) for k in range(n + 1)]
    return expand_in_basis(deg_falling_xpoly(n), basis)


def s1_oracle(n: int) -> list[LambdaPoly]:
    """Row ``n`` of the first kind: ``(x)_n`` written over ``(x)_{k,l}``."""
    basis = [deg_falling_xpoly(k) for k in range(n + 1)]
    return expand_in_basis(classical_falling_xpoly(n), basis)


def classical_limit(table: StirlingTable) -> list[list[int]]:
    """Every entry evaluated at ``l = 0``, as integers."""
    out = []
    for row in table.rows:
        vals = []
        for v in row:
            q = v.eval(0)
            if q.denominator != 1:
                raise ArithmeticError(f"non-integral limit {q}")
            vals.append(q.numerator)
        out.append(vals)
    return out


def classical_s2(n_max: int) -> list[list[int]]:
    """Ordinary Stirling numbers of the second kind by their integer recurrence."""
    rows = [[1]]
    for n in range(n_max):
        p = rows[-1]
        at = lambda k: p[k] if 0 <= k <= n else 0  # noqa: E731
        rows.append([at(k - 1) + k * at(k) for k in range(n + 2)])
    return rows


def classical_s1(n_max: int) -> list[list[int]]:
    """Signed ordinary Stirling numbers of the first kind."""
    rows = [[1]]
    for n in range(n_max):
        p = rows[-1]
        at = lambda k: p[k] if 0 <= k <= n else 0  # noqa: E731
        rows.append([at(k - 1) - n * at(k) for k in range(n + 2)])
    return rows


def check_classical_recurrence(kind: Kind, values: list[list[int]]) -> list[tuple[int, int]]:
    """Return the ``(n, k)`` positions violating the ordinary recurrence."""
    bad = []

    def at(n, k):
        return values[n][k] if 0 <= k <= n else 0

    for n in range(len(values) - 1):
        for k in range(n + 2):
            if kind is Kind.SECOND:
                expect = at(n, k - 1) + k * at(n, k)
            else:
                expect = at(n, k - 1) - n * at(n, k)
            if values[n + 1][k] != expect:
                bad.append((n + 1, k))
    if values and values[0] != [1]:
        bad.append((0, 0))
    return bad


def sign_violations(s1_values: list[list[int]]) -> list[tuple[int, int]]:
    """Positions where ``(-1)^(n-k) S1(n, k)`` is negative."""
    return [
        (n, k)
        for n, row in enumerate(s1_values)
        for k, v in enumerate(row)
        if (-1) ** (n - k) * v < 0
    ]
