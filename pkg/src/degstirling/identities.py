"""Executable checks for the degenerate Stirling identities.

Each check walks a range of indices, evaluates both sides of one identity as
exact :class:`LambdaPoly` (or :class:`NormalForm`) values and stops at the
first mismatch.  Checks accept prebuilt ``s1``/``s2`` tables so that a
deliberately corrupted table can be fed through them.

The per-instance evaluators are exposed in :data:`THEOREMS` so tests can
re-evaluate both sides at numeric ``l`` or against classical tables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .boson import (
    NPoly,
    deg_power_number_op,
    diagonal_form,
    inverse_normal_expansion,
    monomial_action,
    npoly_to_nf,
    number_falling,
    sandwich,
    NormalForm,
    commutator,
    NUMBER_OP,
    A_OP,
    ADAG_OP,
)
from .exactnum import LAM, ONE, ZERO, LambdaPoly, linear
from .factorials import binomial, classical_falling, deg_falling, deg_rising
from .report import IdentityReport, run_check
from .series import alternating_sum, scaled_gf_coefficients
from .stirling import StirlingTable, build_s1_table, build_s2_table

ONE_MINUS_LAM = linear(1, -1)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


# ---- theorem instances ------------------------------------------------------
# Each takes the table dict and the indices and returns (lhs, rhs), lhs being
# the side written first in the published statement.


def _t3(tab, k, m):
    s2 = tab["s2"]
    rhs = ZERO
    for l in range(m, k + 1):
        rhs = rhs + deg_falling(ONE_MINUS_LAM, k - l) * s2[l, m] * binomial(k, l)
    return rhs, s2[k + 1, m + 1]


def _t4(tab, k, m):
    s1 = tab["s1"]
    rhs = ZERO
    for l in range(m, k + 1):
        brace = deg_rising(1, l - m) * (binomial(l, m) * _sign(l - m))
        brace = brace + LAM * deg_rising(1, l - m - 1) * (l * binomial(l - 1, m) * _sign(l - m - 1))
        rhs = rhs + s1[k, l] * brace
    return s1[k + 1, m + 1], rhs


def _t5(tab, k, p):
    s2 = tab["s2"]
    rhs = ZERO
    for m in range(p, k + 1):
        brace = deg_rising(1, k - m) * (binomial(k, m) * _sign(k - m))
        brace = brace + LAM * deg_rising(1, k - m - 1) * (k * binomial(k - 1, m) * _sign(k - m - 1))
        rhs = rhs + brace * s2[m + 1, p + 1]
    return s2[k, p], rhs


def _t6(tab, k, l):
    s1 = tab["s1"]
    rhs = ZERO
    for p in range(l, k + 1):
        rhs = rhs + s1[k + 1, p + 1] * deg_falling(ONE_MINUS_LAM, p - l) * binomial(p, l)
    return s1[k, l], rhs


def _t7(tab, k, l):
    s2 = tab["s2"]
    base = linear(l + 1, -k)
    rhs = ZERO
    for m in range(l, k + 1):
        rhs = rhs + deg_rising(base, k - m) * s2[m, l]
    return s2[k + 1, l + 1], rhs


def _t8(tab, k, m):
    s1 = tab["s1"]
    base = linear(k, -(m + 1))
    rhs = ZERO
    for l in range(m, k + 1):
        rhs = rhs + classical_falling(base, k - l) * s1[l, m] * _sign(k - l)
    return s1[k + 1, m + 1], rhs


def _t9(tab, k, m):
    s2 = tab["s2"]
    rhs = ZERO
    for l in range(m + 1):
        rhs = rhs + linear(l, -(k + l)) * s2[k + l, l]
    return s2[m + k + 1, m], rhs


def _t10(tab, k, m):
    # cleared of the (1-l)_{k-m,l} denominator
    s1, s2 = tab["s1"], tab["s2"]
    lhs = ZERO
    for l in range(m, k + 1):
        lhs = lhs + s2[k + 1, l + 1] * s1[l, m]
    return lhs, deg_falling(ONE_MINUS_LAM, k - m) * binomial(k, m)


def _t11(tab, k, m):
    s1 = tab["s1"]
    acc = ZERO
    for l in range(m + 1):
        acc = acc + linear(k + l, -l) * s1[k + l, l]
    return s1[m + k + 1, m], -acc


def _prop1(tab, n, l, order):
    s1, s2 = tab["s1"], tab["s2"]
    acc = ZERO
    for k in range(l, n + 1):
        acc = acc + (s1[n, k] * s2[k, l] if order == 12 else s2[n, k] * s1[k, l])
    return acc, ONE if n == l else ZERO


def _upper(k: int, m: int) -> Iterator[dict]:
    for a in range(k + 1):
        for b in range(a + 1):
            yield {"k": a, "m": b}


def _square(k_max: int, m_max: int, sum_max: int) -> Iterator[dict]:
    for k in range(k_max + 1):
        for m in range(m_max + 1):
            if k + m <= sum_max:
                yield {"k": k, "m": m}


@dataclass(frozen=True)
class Theorem:
    id: str
    evaluate: Callable
    statement: str
    # names of the two index variables, in (outer, inner) order
    index_names: tuple[str, str] = ("k", "m")
    square: bool = False


THEOREMS: dict[str, Theorem] = {
    "t3": Theorem("t3", _t3, "sum_l C(k,l)(1-l)_{k-l,l} S2(l,m) = S2(k+1,m+1)"),
    "t4": Theorem("t4", _t4, "S1(k+1,m+1) = sum_l S1(k,l){C(l,m)<1>_{l-m,l}(-1)^{l-m} + l l_ C(l-1,m)(-1)^{l-m-1}<1>_{l-m-1,l}}"),
    "t5": Theorem("t5", _t5, "S2(k,p) = sum_m {C(k,m)(-1)^{k-m}<1>_{k-m,l} + l_ k C(k-1,m)(-1)^{k-m-1}<1>_{k-m-1,l}} S2(m+1,p+1)", ("k", "p")),
    "t6": Theorem("t6", _t6, "S1(k,l) = sum_p S1(k+1,p+1) C(p,l)(1-l)_{p-l,l}", ("k", "l")),
    "t7": Theorem("t7", _t7, "S2(k+1,l+1) = sum_m <l+1-k l_>_{k-m,l} S2(m,l)", ("k", "l")),
    "t8": Theorem("t8", _t8, "S1(k+1,m+1) = sum_l (-1)^{k-l}(k-(m+1)l_)_{k-l} S1(l,m)"),
    "t9": Theorem("t9", _t9, "S2(m+k+1,m) = sum_l (l-(k+l)l_) S2(k+l,l)", square=True),
    "t10": Theorem("t10", _t10, "sum_l S2(k+1,l+1) S1(l,m) = C(k,m)(1-l)_{k-m,l}"),
    "t11": Theorem("t11", _t11, "S1(m+k+1,m) = -sum_l (k+l-l l_) S1(k+l,l)", square=True),
}


def theorem_instances(theorem_id: str, k_max: int, m_max: int | None = None,
                      sum_max: int | None = None) -> Iterator[dict]:
    th = THEOREMS[theorem_id]
    if th.square:
        m_max = k_max if m_max is None else m_max
        sum_max = k_max + 1 if sum_max is None else sum_max
        yield from _square(k_max, m_max, sum_max)
        return
    outer, inner = th.index_names
    for idx in _upper(k_max, k_max):
        yield {outer: idx["k"], inner: idx["m"]}


def table_size_needed(theorem_id: str, k_max: int, m_max: int | None = None,
                      sum_max: int | None = None) -> int:
    if THEOREMS[theorem_id].square:
        m_max = k_max if m_max is None else m_max
        sum_max = k_max + 1 if sum_max is None else sum_max
        return min(sum_max, k_max + m_max) + 1
    return k_max + 1


def _tables(need: int, s1: StirlingTable | None, s2: StirlingTable | None) -> dict:
    out = {}
    for name, given, build in (("s1", s1, build_s1_table), ("s2", s2, build_s2_table)):
        if given is None:
            given = build(need)
        elif given.n_max < need:
            raise ValueError(f"{name} table has {given.n_max} rows, need {need}")
        out[name] = given
    return out


def check_theorem(theorem_id: str, k_max: int, m_max: int | None = None,
                  sum_max: int | None = None, s1=None, s2=None) -> IdentityReport:
    th = THEOREMS[theorem_id]
    need = table_size_needed(theorem_id, k_max, m_max, sum_max)
    tables = _tables(need, s1, s2)
    if th.square:
        mm = k_max if m_max is None else m_max
        sm = k_max + 1 if sum_max is None else sum_max
        desc = f"0<=k<={k_max}, 0<=m<={mm}, k+m<={sm}"
    else:
        o, i = th.index_names
        desc = f"0<={i}<={o}<={k_max}"
    return run_check(theorem_id, desc, theorem_instances(theorem_id, k_max, m_max, sum_max),
                     th.evaluate, tables)


def check_theorem_3(k_max, **kw):
    return check_theorem("t3", k_max, **kw)


def check_theorem_4(k_max, **kw):
    return check_theorem("t4", k_max, **kw)


def check_theorem_5(k_max, **kw):
    return check_theorem("t5", k_max, **kw)


def check_theorem_6(k_max, **kw):
    return check_theorem("t6", k_max, **kw)


def check_theorem_7(k_max, **kw):
    return check_theorem("t7", k_max, **kw)


def check_theorem_8(k_max, **kw):
    return check_theorem("t8", k_max, **kw)


def check_theorem_9(k_max, m_max=None, **kw):
    return check_theorem("t9", k_max, m_max=m_max, **kw)


def check_theorem_10(k_max, **kw):
    return check_theorem("t10", k_max, **kw)


def check_theorem_11(k_max, m_max=None, **kw):
    return check_theorem("t11", k_max, m_max=m_max, **kw)


# ---- orthogonality and inverse pairs ---------------------------------------


def _transform_lower(table, seq):
    return [sum((table[n, k] * seq[k] for k in range(n + 1)), ZERO) for n in range(len(seq))]


def _transform_upper(table, seq):
    top = len(seq) - 1
    return [sum((table[k, n] * seq[k] for k in range(n, top + 1)), ZERO) for n in range(len(seq))]


def check_orthogonality(n_max: int, s1=None, s2=None, seed: int = 0,
                        sequence: list[int] | None = None) -> IdentityReport:
    """Both orthogonality sums plus round trips through both inverse pairs.

    The round trips push a random integer sequence (or ``sequence``) through
    the second-kind transform and back through the first-kind one.
    """
    tables = _tables(n_max, s1, s2)
    if sequence is None:
        rng = random.Random(seed)
        sequence = [rng.randint(-50, 50) for _ in range(n_max + 1)]
    b = [LambdaPoly.const(v) for v in sequence]

    cache: dict = {}

    def roundtrip(tab, pair):
        key = (id(tab["s1"]), id(tab["s2"]), pair)
        if key not in cache:
            if pair == 1:
                a = _transform_lower(tab["s2"], b)
                cache[key] = _transform_lower(tab["s1"], a)
            else:
                a = _transform_upper(tab["s2"], b)
                cache[key] = _transform_upper(tab["s1"], a)
        return cache[key]

    def evaluate(tab, n, l=0, order=0, pair=0):
        if pair:
            return roundtrip(tab, pair)[n], b[n]
        return _prop1(tab, n, l, order)

    def instances():
        for order in (12, 21):
            for n in range(n_max + 1):
                for l in range(n + 1):
                    yield {"n": n, "l": l, "order": order}
        for pair in (1, 2):
            for n in range(len(b)):
                yield {"n": n, "pair": pair}

    return run_check("prop1", f"0<=l<=n<={n_max}; round trips of length {len(b)}",
                     instances(), evaluate, tables)


# ---- operator identities ---------------------------------------------------


def check_eq14(k_max: int, s2=None) -> IdentityReport:
    """``(n)_{k,l}`` normal orders to ``sum_l S2(k,l) (a+)^l a^l``."""
    tables = _tables(k_max, None, s2)

    def evaluate(tab, k):
        return deg_power_number_op(k), diagonal_form(tab["s2"][k, l] for l in range(k + 1))

    return run_check("eq14", f"0<=k<={k_max}", ({"k": k} for k in range(k_max + 1)), evaluate, tables)


def check_eq17(k_max: int, s1=None) -> IdentityReport:
    """``sum_m S1(k,m)(n)_{m,l}`` equals ``(a+)^k a^k`` and the classical ``(n)_k``."""
    tables = _tables(k_max, s1, None)

    def evaluate(tab, k, variant):
        lhs = inverse_normal_expansion(k, s1=tab["s1"])
        if variant == 1:
            return lhs, NormalForm.monomial(k, k)
        return lhs, npoly_to_nf(number_falling(ZERO, k, step=ONE))

    inst = ({"k": k, "variant": v} for k in range(k_max + 1) for v in (1, 2))
    return run_check("eq17", f"0<=k<={k_max}", inst, evaluate, tables)


def check_eq19(k_max: int) -> IdentityReport:
    """``a+ (n+1-l)_{k,l} a = (n)_{k+1,l}``."""

    def evaluate(tab, k):
        return sandwich(number_falling(ONE_MINUS_LAM, k)), deg_power_number_op(k + 1)

    return run_check("eq19", f"0<=k<={k_max}", ({"k": k} for k in range(k_max + 1)), evaluate, {})


def check_eq23(k_max: int) -> IdentityReport:
    """``a+ (n)_{k,l} a = n (n-1)_{k,l}``."""

    def evaluate(tab, k):
        rhs = NPoly.variable() * number_falling(-ONE, k)
        return sandwich(number_falling(ZERO, k)), npoly_to_nf(rhs)

    return run_check("eq23", f"0<=k<={k_max}", ({"k": k} for k in range(k_max + 1)), evaluate, {})


def check_commutators() -> IdentityReport:
    """``[a, n] = a`` and ``[n, a+] = a+``."""
    cases = {1: (A_OP, NUMBER_OP, A_OP), 2: (NUMBER_OP, ADAG_OP, ADAG_OP)}

    def evaluate(tab, case):
        x, y, expect = cases[case]
        return commutator(x, y), expect

    return run_check("comm", "[a,n], [n,a+]", ({"case": c} for c in cases), evaluate, {})


def check_eq13(n_max: int, m_max: int) -> IdentityReport:
    """Acting on ``x^m``: ``(n)_{k,l}`` multiplies it by ``(m)_{k,l}``."""

    def evaluate(tab, n, m):
        got = monomial_action(deg_power_number_op(n), m)
        val = deg_falling(m, n)
        return got, ([] if val.is_zero() else [(m, val)])

    inst = ({"n": n, "m": m} for n in range(n_max + 1) for m in range(m_max + 1))
    return run_check("eq13", f"0<=n<={n_max}, 0<=m<={m_max}", inst, evaluate, {})


# ---- generating function ---------------------------------------------------


def check_gf(order: int, s2=None) -> IdentityReport:
    """Scaled coefficients of ``(e_l(t)-1)^k/k!`` against column k, all ``k <= order``."""
    tables = _tables(order, None, s2)
    cols = {}

    def evaluate(tab, k, n):
        if k not in cols:
            cols[k] = scaled_gf_coefficients(k, order)
        return cols[k][n], (tab["s2"][n, k] if n >= k else ZERO)

    inst = ({"k": k, "n": n} for k in range(order + 1) for n in range(order + 1))
    return run_check("gf", f"0<=k<=T={order}, 0<=n<=T", inst, evaluate, tables)


def check_altsum(n_max: int, s2=None) -> IdentityReport:
    import math

    tables = _tables(n_max, None, s2)

    def evaluate(tab, n, k):
        rhs = tab["s2"][n, k] * math.factorial(k) if n >= k else ZERO
        return alternating_sum(n, k), rhs

    inst = ({"n": n, "k": k} for n in range(n_max + 1) for k in range(n_max + 1))
    return run_check("altsum", f"0<=n,k<={n_max}", inst, evaluate, tables)


# ---- registry ---------------------------------------------------------------

CHECK_IDS = (
    "prop1", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "t11",
    "eq13", "eq14", "eq17", "eq19", "eq23", "comm", "gf", "altsum",
)


def run_named(check_id: str, k_max: int, s1=None, s2=None) -> IdentityReport:
    if check_id in THEOREMS:
        return check_theorem(check_id, k_max, s1=s1, s2=s2)
    if check_id == "prop1":
        return check_orthogonality(k_max, s1=s1, s2=s2)
    if check_id == "eq13":
        return check_eq13(k_max, k_max + 3)
    if check_id == "eq14":
        return check_eq14(k_max, s2=s2)
    if check_id == "eq17":
        return check_eq17(k_max, s1=s1)
    if check_id == "eq19":
        return check_eq19(k_max)
    if check_id == "eq23":
        return check_eq23(k_max)
    if check_id == "comm":
        return check_commutators()
    if check_id == "gf":
        return check_gf(k_max, s2=s2)
    if check_id == "altsum":
        return check_altsum(k_max, s2=s2)
    raise KeyError(check_id)


def check_all(k_max: int, s1=None, s2=None, only=None) -> list[IdentityReport]:
    """Run every registered check (or those in ``only``) in registry order."""
    ids = CHECK_IDS if only is None else [i for i in CHECK_IDS if i in set(only)]
    return [run_named(i, k_max, s1=s1, s2=s2) for i in ids]
