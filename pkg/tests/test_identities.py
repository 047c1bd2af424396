from fractions import Fraction

import pytest

from degstirling.exactnum import ONE, ZERO, LambdaPoly
from degstirling.identities import (
    CHECK_IDS,
    THEOREMS,
    check_all,
    check_orthogonality,
    check_theorem,
    check_theorem_3,
    check_theorem_4,
    check_theorem_5,
    check_theorem_6,
    check_theorem_7,
    check_theorem_8,
    check_theorem_9,
    check_theorem_10,
    check_theorem_11,
    theorem_instances,
)
from degstirling.stirling import build_s1_table, build_s2_table, classical_s1, classical_s2


def _tables(n):
    return {"s1": build_s1_table(n), "s2": build_s2_table(n)}


L1 = LambdaPoly([1, -1])  # 1 - l
LM1 = LambdaPoly([-1, 1])  # l - 1


@pytest.mark.parametrize(
    "tid, idx, expect",
    [
        ("t3", {"k": 1, "m": 0}, L1),
        ("t3", {"k": 3, "m": 3}, ONE),
        ("t4", {"k": 1, "m": 0}, LM1),
        ("t5", {"k": 1, "p": 0}, ZERO),
        ("t6", {"k": 1, "l": 0}, ZERO),
        ("t7", {"k": 1, "l": 0}, L1),
        ("t7", {"k": 2, "l": 0}, LambdaPoly([1, -3, 2])),
        ("t8", {"k": 1, "m": 0}, LM1),
        ("t9", {"k": 0, "m": 1}, L1),
        ("t9", {"k": 3, "m": 0}, ZERO),
        ("t10", {"k": 1, "m": 0}, L1),
        ("t10", {"k": 2, "m": 1}, LambdaPoly([2, -2])),
        ("t11", {"k": 0, "m": 1}, LM1),
        ("t11", {"k": 0, "m": 0}, ZERO),
    ],
)
def test_hand_computed_instances(tid, idx, expect):
    lhs, rhs = THEOREMS[tid].evaluate(_tables(6), **idx)
    assert lhs == rhs == expect


def test_orthogonality_examples():
    s1, s2 = build_s1_table(2), build_s2_table(2)
    assert s1[2, 1] * s2[1, 1] + s1[2, 2] * s2[2, 1] == ZERO
    assert check_orthogonality(2, sequence=[1, 2, 3]).passed
    assert check_orthogonality(12, seed=3).passed


@pytest.mark.parametrize(
    "fn", [check_theorem_3, check_theorem_4, check_theorem_5, check_theorem_6, check_theorem_7,
           check_theorem_8, check_theorem_9, check_theorem_10, check_theorem_11],
)
def test_each_theorem_small_range(fn):
    r = fn(12)
    assert r.passed, r.to_text()
    assert r.instances > 0


def test_degenerate_ranges():
    for r in check_all(0):
        assert r.passed, r.to_text()


def test_check_all_k5():
    reports = check_all(5)
    assert [r.identity_id for r in reports] == list(CHECK_IDS)
    assert all(r.passed for r in reports)


def test_table_too_small_rejected():
    with pytest.raises(ValueError):
        check_theorem("t3", 6, s2=build_s2_table(5))


def test_square_ranges():
    idx = list(theorem_instances("t9", 3, m_max=2, sum_max=4))
    assert {"k": 3, "m": 1} in idx and {"k": 3, "m": 2} not in idx
    assert all(i["m"] <= 2 for i in idx)


SPECIAL_LAMBDAS = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2, 3)]


@pytest.mark.parametrize("tid", sorted(THEOREMS))
def test_specialization_consistency(tid):
    tabs = _tables(10)
    for idx in theorem_instances(tid, 8):
        lhs, rhs = THEOREMS[tid].evaluate(tabs, **idx)
        for lam in SPECIAL_LAMBDAS:
            assert lhs.eval(lam) == rhs.eval(lam)


class _Classical:
    """Constant tables holding the ordinary Stirling numbers."""

    def __init__(self, rows, kind):
        self.rows = rows
        self.kind = kind

    def __getitem__(self, idx):
        n, k = idx
        if k < 0 or k > n:
            return ZERO
        return LambdaPoly([self.rows[n][k]])


@pytest.mark.parametrize("tid", sorted(THEOREMS))
def test_lambda_zero_reduction(tid):
    from degstirling.stirling import Kind

    tabs = {"s1": _Classical(classical_s1(12), Kind.FIRST), "s2": _Classical(classical_s2(12), Kind.SECOND)}
    for idx in theorem_instances(tid, 9):
        lhs, rhs = THEOREMS[tid].evaluate(tabs, **idx)
        assert lhs.eval(0) == rhs.eval(0)


def test_report_json_shape():
    s2 = build_s2_table(7)
    bad = s2.with_entry(3, 1, s2[3, 1] + 1)
    r = check_theorem("t3", 5, s2=bad)
    doc = r.to_json()
    assert doc["status"] == "fail"
    assert set(doc) == {"id", "range", "instances", "status", "counterexample"}
    assert ["s2", 3, 1] in doc["counterexample"]["cells"]
    assert check_theorem("t3", 5).to_json().get("counterexample") is None
