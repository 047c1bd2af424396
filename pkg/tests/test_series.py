import math
from fractions import Fraction

import pytest

from degstirling.exactnum import ONE, LambdaPoly
from degstirling.factorials import deg_falling
from degstirling.series import (
    RangeError,
    TruncatedSeries,
    alternating_sum,
    alternating_sum_check,
    degenerate_exp,
    gf_check,
    scaled_gf_coefficients,
    series_mul,
    series_pow,
)
from degstirling.stirling import build_s2_table


def test_degenerate_exp_examples():
    e = degenerate_exp(1, 4)
    assert e[0] == ONE
    assert e[2] == LambdaPoly([Fraction(1, 2), Fraction(-1, 2)])
    x = LambdaPoly([3])
    ex = degenerate_exp(x, 5)
    for n in range(6):
        assert ex[n].eval(0) == Fraction(3**n, math.factorial(n))


def test_degenerate_exp_classical_limit():
    e = degenerate_exp(1, 10)
    assert [c.eval(0) for c in e.coeffs] == [Fraction(1, math.factorial(n)) for n in range(11)]


def test_series_arithmetic_examples():
    s = TruncatedSeries([1, 2, 3], 4)
    assert series_pow(s, 0) == TruncatedSeries.const(ONE, 4)
    assert series_pow(TruncatedSeries.t(3), 2) == TruncatedSeries([0, 0, 1], 3)
    one_plus = TruncatedSeries([1, 1], 4)
    one_minus = TruncatedSeries([1, -1], 4)
    assert series_mul(one_plus, one_minus) == TruncatedSeries([1, 0, -1], 4)


def test_mixed_orders_truncate():
    a = TruncatedSeries([1, 1, 1, 1], 3)
    b = TruncatedSeries([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b) == TruncatedSeries([2, 2], 1)


def test_gf_examples():
    assert gf_check(0, 5).passed
    coeffs = scaled_gf_coefficients(0, 5)
    assert coeffs[0] == ONE and all(c.is_zero() for c in coeffs[1:])
    c1 = scaled_gf_coefficients(1, 6)
    s2 = build_s2_table(6)
    for n in range(1, 7):
        assert c1[n] == deg_falling(1, n) == s2[n, 1]
    assert scaled_gf_coefficients(2, 4)[2] == ONE


def test_gf_range_error():
    with pytest.raises(RangeError):
        gf_check(5, 4)


@pytest.mark.parametrize("k", range(0, 17))
def test_gf_all_columns(k):
    r = gf_check(k, 16)
    assert r.passed, r.to_text()


def test_alternating_sum_examples():
    # -(0)_{2,l} + (1)_{2,l} = 1 - l
    assert alternating_sum(2, 1) == LambdaPoly([1, -1])
    assert alternating_sum(1, 2).is_zero()
    assert alternating_sum_check(1, 2).passed
    for k in range(0, 9):
        assert alternating_sum(k, k) == LambdaPoly([math.factorial(k)])


def test_alternating_sum_full_square():
    for n in range(17):
        for k in range(17):
            assert alternating_sum_check(n, k).passed


def test_gf_detects_bad_table():
    s2 = build_s2_table(6)
    bad = s2.with_entry(4, 2, s2[4, 2] + 1)
    r = gf_check(2, 6, s2=bad)
    assert not r.passed
    assert r.counterexample.indices == {"n": 4}
    assert ("s2", 4, 2) in r.counterexample.cells
