"""Normal-ordered arithmetic for a single boson mode with ``a a+ - a+ a = 1``.

A :class:`NormalForm` maps index pairs ``(i, j)`` to the coefficient of
``(a+)^i a^j``.  All products reduce to two right-multiplication rules::

    (a+)^i a^j . a   = (a+)^i a^(j+1)
    (a+)^i a^j . a+  = (a+)^(i+1) a^j + j (a+)^i a^(j-1)

The realization ``a -> d/dx``, ``a+ -> x`` acting on monomials ``x^m`` is
provided separately as an evaluation oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactnum import LAM, ONE, ZERO, LambdaPoly, Scalar, as_poly
from .factorials import XPoly

A = "a"
ADAG = "a+"
LETTERS = (A, ADAG)


class NPoly(XPoly):
    """Polynomial in the number operator ``n = a+ a``."""

    __slots__ = ()
    var = "n"


class NormalForm:
    """Immutable finite sum of ``c * (a+)^i a^j`` with nonzero LambdaPoly ``c``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LambdaPoly | Scalar] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative index in {(i, j)}")
            c = as_poly(c)
            if not c.is_zero():
                clean[(int(i), int(j))] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def identity(cls) -> NormalForm:
        return cls({(0, 0): ONE})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: LambdaPoly | Scalar = 1) -> NormalForm:
        return cls({(i, j): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], LambdaPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, key: tuple[int, int]) -> LambdaPoly:
        return self._terms.get(key, ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_index(self) -> int:
        return max((max(k) for k in self._terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return NormalForm(out)

    def __neg__(self) -> NormalForm:
        return NormalForm({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: NormalForm) -> NormalForm:
        return self + (-other)

    def scale(self, s: LambdaPoly | Scalar) -> NormalForm:
        s = as_poly(s)
        return NormalForm({k: c * s for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            return nf_mul(self, other)
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def to_text(self) -> str:
        """Sorted terms joined by `` + ``; e.g. ``1 + (a+)^1 a^1``."""
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            cs = c.to_human()
            if (i, j) == (0, 0):
                parts.append(cs if len(c.coeffs) == 1 and not cs.startswith("-") else f"({cs})")
                continue
            op = f"(a+)^{i} a^{j}"
            if c == ONE:
                parts.append(op)
            elif c.degree == 0 and not cs.startswith("-"):
                parts.append(f"{cs} * {op}")
            else:
                parts.append(f"({cs}) * {op}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"i": i, "j": j, "coeff": c.to_json()} for (i, j), c in self._terms.items()]

    def __repr__(self) -> str:
        return f"NormalForm({self.to_text()})"


def _add_into(acc: dict, key: tuple[int, int], c: LambdaPoly) -> None:
    v = acc.get(key)
    acc[key] = c if v is None else v + c


def nf_mul_a(nf: NormalForm) -> NormalForm:
    return NormalForm({(i, j + 1): c for (i, j), c in nf.items()})


def nf_mul_adag(nf: NormalForm) -> NormalForm:
    acc: dict = {}
    for (i, j), c in nf.items():
        _add_into(acc, (i + 1, j), c)
        if j:
            _add_into(acc, (i, j - 1), c * j)
    return NormalForm(acc)


def mul_letter(nf: NormalForm, letter: str) -> NormalForm:
    if letter == A:
        return nf_mul_a(nf)
    if letter == ADAG:
        return nf_mul_adag(nf)
    raise ValueError(f"unknown boson letter {letter!r}")


def parse_word(text: str) -> list[str]:
    """Split a whitespace-separated word of ``a`` / ``a+`` tokens."""
    tokens = text.split()
    for t in tokens:
        if t not in LETTERS:
            raise ValueError(f"bad token {t!r}; expected 'a' or 'a+'")
    return tokens


def word_to_normal(word: Sequence[str] | str) -> NormalForm:
    if isinstance(word, str):
        word = parse_word(word)
    nf = NormalForm.identity()
    for letter in word:
        nf = mul_letter(nf, letter)
    return nf


@lru_cache(maxsize=None)
def _reorder(j: int, k: int) -> NormalForm:
    """Normal form of ``a^j (a+)^k``, built letter by letter."""
    nf = NormalForm.monomial(0, j)
    for _ in range(k):
        nf = nf_mul_adag(nf)
    return nf


def nf_mul(lhs: NormalForm, rhs: NormalForm) -> NormalForm:
    acc: dict = {}
    for (i, j), c in lhs.items():
        for (k, l), d in rhs.items():
            cd = c * d
            for (p, q), e in _reorder(j, k).items():
                _add_into(acc, (i + p, q + l), cd * e)
    return NormalForm(acc)


def commutator(x: NormalForm, y: NormalForm) -> NormalForm:
    return nf_mul(x, y) - nf_mul(y, x)


NUMBER_OP = NormalForm.monomial(1, 1)
A_OP = NormalForm.monomial(0, 1)
ADAG_OP = NormalForm.monomial(1, 0)


def npoly_to_nf(p: NPoly | XPoly) -> NormalForm:
    """Substitute ``n = a+ a`` and normal order."""
    acc = NormalForm()
    power = NormalForm.identity()
    for idx, c in enumerate(p.coeffs):
        if idx:
            power = nf_mul_a(nf_mul_adag(power))
        if not c.is_zero():
            acc = acc + power.scale(c)
    return acc


def number_falling(shift: LambdaPoly | Scalar, k: int, step: LambdaPoly | Scalar = LAM) -> NPoly:
    """``(n + shift)(n + shift - step) ... `` with ``k`` factors, as an NPoly."""
    shift, step = as_poly(shift), as_poly(step)
    n = NPoly.variable()
    out = NPoly.const(ONE)
    for i in range(k):
        out = out * (n + shift - step * i)
    return out


def deg_power_number_op(k: int) -> NormalForm:
    """Normal form of ``(n)_{k,l} = n (n - l) ... (n - (k-1) l)``."""
    return npoly_to_nf(number_falling(ZERO, k))


def inverse_normal_expansion(k: int, s1=None) -> NormalForm:
    """``sum_m S1(k, m) (n)_{m,l}`` in normal form; should collapse to ``(a+)^k a^k``."""
    from .stirling import build_s1_table

    table = s1 if s1 is not None else build_s1_table(k)
    acc = NormalForm()
    for m in range(k + 1):
        acc = acc + deg_power_number_op(m).scale(table[k, m])
    return acc


def sandwich(p: NPoly | NormalForm) -> NormalForm:
    """``a+ . p . a``."""
    inner = p if isinstance(p, NormalForm) else npoly_to_nf(p)
    return nf_mul(nf_mul(ADAG_OP, inner), A_OP)


def monomial_action(nf: NormalForm, m: int) -> list[tuple[int, LambdaPoly]]:
    """Apply ``nf`` to ``x^m`` with ``a = d/dx`` and ``a+ = x``.

    The term ``c (a+)^i a^j`` sends ``x^m`` to ``c (m)_j x^(m-j+i)``.  Returns
    the nonzero ``(exponent, coefficient)`` pairs sorted by exponent.
    """
    acc: dict[int, LambdaPoly] = {}
    for (i, j), c in nf.items():
        if j > m:
            continue
        fall = 1
        for t in range(j):
            fall *= m - t
        e = m - j + i
        acc[e] = acc.get(e, ZERO) + c * fall
    return sorted((e, c) for e, c in acc.items() if not c.is_zero())


def word_action(word: Sequence[str] | str, m: int) -> list[tuple[int, LambdaPoly]]:
    """Act with a word on ``x^m`` letter by letter, rightmost letter first."""
    if isinstance(word, str):
        word = parse_word(word)
    state: dict[int, int] = {m: 1}
    for letter in reversed(word):
        nxt: dict[int, int] = {}
        for e, c in state.items():
            if letter == A:
                if e:
                    nxt[e - 1] = nxt.get(e - 1, 0) + c * e
            else:
                nxt[e + 1] = nxt.get(e + 1, 0) + c
        state = {e: c for e, c in nxt.items() if c}
    return sorted((e, LambdaPoly.const(c)) for e, c in state.items())


def diagonal_form(coeffs: Iterable[LambdaPoly]) -> NormalForm:
    """``sum_l coeffs[l] (a+)^l a^l``."""
    return NormalForm({(l, l): c for l, c in enumerate(coeffs)})
