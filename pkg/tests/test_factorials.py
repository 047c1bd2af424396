import math

import pytest

from degstirling.exactnum import LAM, ONE, LambdaPoly
from degstirling.factorials import (
    XPoly,
    binomial,
    classical_falling,
    classical_falling_xpoly,
    deg_falling,
    deg_falling_xpoly,
    deg_rising,
)

ONE_MINUS_LAM = LambdaPoly([1, -1])


def test_deg_falling_examples():
    assert deg_falling(ONE_MINUS_LAM, 0) == ONE
    # (1 - l)(1 - 2l) = 1 - 3l + 2l^2
    assert deg_falling(ONE_MINUS_LAM, 2) == LambdaPoly([1, -3, 2])
    assert deg_falling(LAM, 2).is_zero()


def test_deg_rising_examples():
    assert deg_rising(1, 2) == LambdaPoly([1, 1])
    assert deg_rising(1, 0) == ONE
    # (1 - l)(1 - l + l)
    assert deg_rising(ONE_MINUS_LAM, 2) == ONE_MINUS_LAM
    assert deg_rising(1, -1).is_zero()


def test_classical_falling_examples():
    assert classical_falling(3, 2) == LambdaPoly([6])
    assert classical_falling(ONE_MINUS_LAM, 0) == ONE
    # (1 - l)(-l) = -l + l^2
    assert classical_falling(ONE_MINUS_LAM, 2) == LambdaPoly([0, -1, 1])
    with pytest.raises(ValueError):
        classical_falling(ONE, -1)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1
    assert binomial(4, -1) == 0
    assert binomial(-1, 0) == 0


def test_binomial_pascal():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_xpoly_examples():
    x = XPoly.variable()
    assert deg_falling_xpoly(2) == x * x - x * LAM
    assert deg_falling_xpoly(2).coeffs == (LambdaPoly(), -LAM, ONE)
    assert classical_falling_xpoly(2) == x * x - x
    assert deg_falling_xpoly(0) == XPoly.const(1)


@pytest.mark.parametrize("n", range(0, 9))
def test_deg_falling_xpoly_is_monic_and_reduces_to_power(n):
    p = deg_falling_xpoly(n)
    assert p.degree == n and p.coeff(n) == ONE
    at_zero = p.eval_lambda(0)
    assert at_zero == XPoly([0] * n + [1])


def test_classical_falling_xpoly_integer_points():
    for m in range(0, 9):
        for n in range(0, m + 1):
            val = classical_falling_xpoly(n).eval_lambda(0).eval_at(m)
            assert val == LambdaPoly([math.factorial(m) // math.factorial(m - n)])


@pytest.mark.parametrize("p", [ONE, LAM, ONE_MINUS_LAM, LambdaPoly([3, -2]), LambdaPoly([0, 0, 1])])
def test_deg_falling_product_recursion(p):
    for n in range(0, 8):
        assert deg_falling(p, n + 1) == deg_falling(p, n) * (p - LAM * n)
        assert deg_rising(p, n + 1) == deg_rising(p, n) * (p + LAM * n)


def test_xpoly_eval_matches_scalar_falling():
    # (x)_{n,l} evaluated at x = p agrees with deg_falling(p, n)
    for n in range(6):
        assert deg_falling_xpoly(n).eval_at(ONE_MINUS_LAM) == deg_falling(ONE_MINUS_LAM, n)
