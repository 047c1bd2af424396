from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degstirling.exactnum import (
    LAM,
    ONE,
    ZERO,
    DivisionByZero,
    LambdaPoly,
    parse_rational,
    poly_add,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_scale,
    rat_add,
    rat_inv,
    rat_mul,
)

rationals = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)
polys = st.lists(rationals, max_size=5).map(LambdaPoly)


def test_rational_examples():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat_mul(Fraction(2, 3), Fraction(3, 2)) == 1
    with pytest.raises(DivisionByZero):
        rat_inv(Fraction(0))
    assert rat_inv(Fraction(-2, 3)) == Fraction(-3, 2)


def test_rational_normalization():
    q = parse_rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    z = parse_rational("0/7")
    assert (z.numerator, z.denominator) == (0, 1)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_poly_examples():
    one_minus = LambdaPoly([1, -1])
    assert poly_mul(one_minus, one_minus) == LambdaPoly([1, -2, 1])
    assert poly_add(one_minus, poly_neg(one_minus)) == ZERO
    assert poly_add(one_minus, poly_neg(one_minus)).coeffs == ()
    assert poly_scale(one_minus, 3) == LambdaPoly([3, -3])


def test_poly_eval_examples():
    assert poly_eval(LambdaPoly([1, -1]), 0) == 1
    assert poly_eval(LambdaPoly([1, -1]), 1) == 0
    assert poly_eval(LambdaPoly([1, -2, 1]), Fraction(1, 2)) == Fraction(1, 4)


def test_trailing_zeros_stripped():
    p = LambdaPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert LambdaPoly([0, 0]).degree == -1
    assert LambdaPoly([1, 1]) - LAM == ONE


def test_human_and_json_forms():
    p = LambdaPoly([1, -2, 1])
    assert p.to_human() == "1 - 2*l + l^2"
    assert LambdaPoly([0, Fraction(-1, 2)]).to_human() == "-1/2*l"
    assert ZERO.to_human() == "0"
    assert p.to_json() == {"coeffs": ["1/1", "-2/1", "1/1"]}
    assert LambdaPoly.from_json(p.to_json()) == p
    assert LambdaPoly.from_json({"coeffs": ["1/2", "3"]}) == LambdaPoly([Fraction(1, 2), 3])


def test_integral_detection():
    assert LambdaPoly([2, -3]).is_integral()
    assert not LambdaPoly([Fraction(1, 2)]).is_integral()
    # a Fraction with unit denominator counts as integral
    assert LambdaPoly([Fraction(4, 2)]).is_integral()


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, polys, rationals)
def test_eval_is_homomorphism(p, q, c):
    assert (p * q).eval(c) == p.eval(c) * q.eval(c)
    assert (p + q).eval(c) == p.eval(c) + q.eval(c)


@given(polys, st.integers(min_value=0, max_value=5))
def test_power_matches_repeated_product(p, n):
    expect = ONE
    for _ in range(n):
        expect = expect * p
    assert p**n == expect
