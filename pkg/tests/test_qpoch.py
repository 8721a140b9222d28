"""q-rising factorials, their ratios and the negative-index convention."""

import pytest

from rrcf.poly import B, ONE, Q, RationalFunction
from rrcf.qpoch import (
    BaseKind,
    PochBase,
    Q_BASE,
    neg_bq_base,
    poch,
    poch_neg_bq,
    poch_q,
    poch_ratio_negb,
    poch_ratio_q,
)


def test_poch_empty_product_is_one():
    assert poch(Q_BASE, 0) == ONE
    assert poch(neg_bq_base(3), 0) == ONE


def test_poch_q_two_terms():
    assert poch_q(2) == (ONE - Q) * (ONE - Q**2)
    assert poch_q(2) == ONE - Q - Q**2 + Q**3


def test_poch_neg_bq_two_terms():
    assert poch_neg_bq(1, 2) == (ONE + B * Q) * (ONE + B * Q**2)
    assert poch_neg_bq(1, 2) == ONE + B * Q + B * Q**2 + B**2 * Q**3


def test_base_one_vanishes_for_positive_index():
    # a = q^0 = 1 makes every factor after the first (1 - 1) = 0
    unit_base = PochBase(BaseKind.Q_POWER, 0)
    assert poch(unit_base, 0) == ONE
    for k in range(1, 5):
        assert poch(unit_base, k).is_zero


def test_poch_rejects_negative_index():
    with pytest.raises(IndexError):
        poch(Q_BASE, -1)


@pytest.mark.parametrize("kind_m", [(BaseKind.Q_POWER, 1), (BaseKind.NEG_B_Q_POWER, 0), (BaseKind.NEG_B_Q_POWER, 1)])
def test_pascal_recurrence(kind_m):
    kind, m = kind_m
    base = PochBase(kind, m)
    a = -(B * Q**m) if kind is BaseKind.NEG_B_Q_POWER else Q**m
    for k in range(0, 13):
        assert poch(base, k + 1) == poch(base, k) * (ONE - a * Q**k)


def test_ratio_q_cancels_prefix():
    assert poch_ratio_q(3, 1) == RationalFunction((ONE - Q**2) * (ONE - Q**3))


def test_ratio_q_equal_indices():
    for k in range(0, 6):
        assert poch_ratio_q(k, k) == RationalFunction(ONE)


def test_ratio_q_negative_denominator_index_is_zero():
    # 1/(q;q)_m = 0 for m = -1, -2, ...
    for k in range(0, 9):
        for m in range(-4, 0):
            assert poch_ratio_q(k, m).is_zero


def test_ratio_q_negative_numerator_index_raises():
    with pytest.raises(IndexError):
        poch_ratio_q(-1, 2)


def test_ratio_q_reciprocal_case():
    r = poch_ratio_q(1, 3)
    assert r == RationalFunction(ONE, (ONE - Q**2) * (ONE - Q**3))


def test_ratio_q_times_denominator_restores_numerator():
    for k1 in range(0, 13):
        for k2 in range(0, k1 + 1):
            assert poch_ratio_q(k1, k2) * poch_q(k2) == RationalFunction(poch_q(k1))


def test_ratio_negb_examples():
    assert poch_ratio_negb(1, 0, 1) == RationalFunction(ONE, ONE + B * Q)
    assert poch_ratio_negb(0, 1, 0) == RationalFunction(ONE + B)
    for k in range(0, 6):
        assert poch_ratio_negb(1, k, k) == RationalFunction(ONE)


def test_ratio_negb_rejects_negative_indices():
    with pytest.raises(IndexError):
        poch_ratio_negb(1, -1, 0)
    with pytest.raises(IndexError):
        poch_ratio_negb(1, 0, -1)


def test_gaussian_binomial_integrality():
    # (q;q)_n / ((q;q)_k (q;q)_{n-k}) is a polynomial: exact division succeeds
    for n in range(0, 11):
        for k in range(0, n + 1):
            ratio = poch_ratio_q(n, n - k)
            gauss = ratio.num.exact_div(poch_q(k))
            assert gauss * poch_q(k) == ratio.num
            assert ratio.den == ONE
