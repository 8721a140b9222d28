"""q-rising factorials (a;q)_k for the two base shapes this library needs.

``(a;q)_0 = 1`` and for k > 0, ``(a;q)_k = (1-a)(1-aq)...(1-aq^(k-1))``.
Supported bases are ``a = q^m`` and ``a = -b*q^m`` with m >= 0, which cover
``(q;q)_k``, ``(-b;q)_k``, ``(-bq;q)_k`` and ``(-bq^s;q)_k``.

Ratios of two such factorials cancel to finite products.  For the ``(q;q)``
family the standard extension to negative lower index applies: the reciprocal
``1/(q;q)_m`` is zero for m = -1, -2, ..., so a ratio with a negative
denominator index is the zero rational function.  The ``(-b*q^m;q)`` ratios
never leave non-negative indices in this library's formulas, so there a
negative index raises instead of silently vanishing.

Everything is a pure function of its arguments; the memo table behind
:func:`poch` is a thread-safe ``lru_cache``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .poly import ONE, B, Polynomial, Q, RationalFunction

__all__ = [
    "BaseKind",
    "PochBase",
    "Q_BASE",
    "neg_bq_base",
    "poch",
    "poch_q",
    "poch_neg_bq",
    "poch_ratio_q",
    "poch_ratio_negb",
]


class BaseKind(Enum):
    Q_POWER = "q_power"
    NEG_B_Q_POWER = "neg_b_q_power"


class PochBase(NamedTuple):
    """Base a = q^m (Q_POWER) or a = -b*q^m (NEG_B_Q_POWER), m >= 0."""

    kind: BaseKind
    m: int


Q_BASE = PochBase(BaseKind.Q_POWER, 1)


def neg_bq_base(m: int) -> PochBase:
    return PochBase(BaseKind.NEG_B_Q_POWER, m)


@lru_cache(maxsize=None)
def _poch_cached(kind: BaseKind, m: int, k: int) -> Polynomial:
    if k == 0:
        return ONE
    prev = _poch_cached(kind, m, k - 1)
    j = m + k - 1
    if kind is BaseKind.Q_POWER:
        return prev * (ONE - Q**j)
    return prev * (ONE + B * Q**j)


def poch(base: PochBase, k: int) -> Polynomial:
    """(a;q)_k as a polynomial, k >= 0.

    Q_POWER m: prod_{j=0}^{k-1} (1 - q^(m+j)); NEG_B_Q_POWER m:
    prod_{j=0}^{k-1} (1 + b*q^(m+j)).
    """
    if base.m < 0:
        raise ValueError(f"base power must be non-negative, got {base.m}")
    if k < 0:
        raise IndexError(f"poch index must be non-negative, got {k}")
    return _poch_cached(base.kind, base.m, k)


def poch_q(k: int) -> Polynomial:
    """(q;q)_k."""
    return poch(Q_BASE, k)


def poch_neg_bq(m: int, k: int) -> Polynomial:
    """(-b*q^m;q)_k."""
    return poch(neg_bq_base(m), k)


def poch_ratio_q(k_num: int, k_den: int) -> RationalFunction:
    """(q;q)_{k_num} / (q;q)_{k_den} with the negative-index convention.

    k_den < 0 gives the zero rational function.  A negative k_num never
    occurs inside this library's sum bounds, so it raises IndexError.
    """
    if k_num < 0:
        raise IndexError(f"numerator index must be non-negative, got {k_num}")
    if k_den < 0:
        return RationalFunction.zero()
    if k_den <= k_num:
        prod = ONE
        for j in range(k_den + 1, k_num + 1):
            prod = prod * (ONE - Q**j)
        return RationalFunction(prod)
    prod = ONE
    for j in range(k_num + 1, k_den + 1):
        prod = prod * (ONE - Q**j)
    return RationalFunction(ONE, prod)


def poch_ratio_negb(m_base: int, k_num: int, k_den: int) -> RationalFunction:
    """(-b*q^m_base;q)_{k_num} / (-b*q^m_base;q)_{k_den}, indices >= 0.

    Negative indices signal a caller bug here and raise IndexError rather
    than extending the vanishing convention to the b-ratios.
    """
    if m_base < 0:
        raise ValueError(f"base power must be non-negative, got {m_base}")
    if k_num < 0 or k_den < 0:
        raise IndexError(f"poch ratio indices must be non-negative, got ({k_num}, {k_den})")
    if k_den <= k_num:
        prod = ONE
        for j in range(k_den, k_num):
            prod = prod * (ONE + B * Q ** (m_base + j))
        return RationalFunction(prod)
    prod = ONE
    for j in range(k_num, k_den):
        prod = prod * (ONE + B * Q ** (m_base + j))
    return RationalFunction(ONE, prod)
