"""Floating-point convergence demonstration for the continued fraction.

For |q| < 1 the convergents 1 + lq/(1+bq) + ... + lq^n/(1+bq^n) approach the
ratio of the two basic hypergeometric series

    sum_k q^(k^2)   l^k / ((q;q)_k (-bq;q)_k)
    --------------------------------------------- ,
    sum_k q^(k^2+k) l^k / ((q;q)_k (-bq;q)_k)

and this module tabulates that approach numerically: the truncated series
ratio is the reference value (its own oracle, checked by agreement between
two truncation levels), and the convergents are evaluated by the backward
recurrence in double precision.

Everything here is scalar float math; pure functions, no shared state.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

__all__ = [
    "NonConvergent",
    "NumericBreakdown",
    "NumericPoint",
    "ConvergenceRow",
    "ConvergenceReport",
    "series_ratio_entry15",
    "cf_numeric",
    "convergence_demo",
]

TERM_STOP_DEFAULT = 1e-18
COMPARE_TOL_DEFAULT = 1e-10


class NonConvergent(ValueError):
    """The series/continued fraction requires |q| < 1."""


class NumericBreakdown(ArithmeticError):
    """A continued-fraction tail vanished to machine precision."""


@dataclass(frozen=True)
class NumericPoint:
    """An evaluation point (q, lam, b) with |q| < 1, plus tolerance knobs."""

    q: float
    lam: float
    b: float
    term_stop: float = TERM_STOP_DEFAULT
    compare_tol: float = COMPARE_TOL_DEFAULT

    def __post_init__(self) -> None:
        if not abs(self.q) < 1.0:
            raise NonConvergent(f"|q| must be < 1, got q={self.q}")


def _series_ratio_with_terms(pt: NumericPoint, max_terms: int) -> tuple[float, int]:
    q, lam, b = pt.q, pt.lam, pt.b
    num = den = 0.0
    poch_q = poch_b = 1.0  # (q;q)_k and (-bq;q)_k, running
    q_sq = 1.0  # q^(k^2)
    q_k = 1.0  # q^k
    lam_k = 1.0  # lam^k
    used = 0
    for k in range(max_terms + 1):
        if k > 0:
            q_sq *= q_k * q_k * q  # q^(k^2) = q^((k-1)^2) * q^(2k-1)
            q_k *= q
            lam_k *= lam
            poch_q *= 1.0 - q_k
            poch_b *= 1.0 + b * q_k
        t = q_sq * lam_k / (poch_q * poch_b)
        num += t
        den += t * q_k
        used = k
        if k > 0 and abs(t) < pt.term_stop * abs(num) and abs(t * q_k) < pt.term_stop * abs(den):
            break
    return num / den, used


def series_ratio_entry15(pt: NumericPoint, max_terms: int) -> float:
    """Ratio of the two series, both truncated after at most max_terms terms.

    Stops early once a term falls below term_stop relative to both partial
    sums; |q| < 1 is enforced by NumericPoint.
    """
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    return _series_ratio_with_terms(pt, max_terms)[0]


def cf_numeric(pt: NumericPoint, n: int) -> float:
    """The n-th convergent 1 + lq/(1+bq) + ... + lq^n/(1+bq^n), by backward recurrence."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    q, lam, b = pt.q, pt.lam, pt.b
    t = 1.0 + b * q**n
    for j in range(n - 1, 0, -1):
        if abs(t) < 1e-280:
            raise NumericBreakdown(f"tail T_{j + 1} vanished at (q={q}, lam={lam}, b={b})")
        t = 1.0 + b * q**j + lam * q ** (j + 1) / t
    if abs(t) < 1e-280:
        raise NumericBreakdown(f"tail T_1 vanished at (q={q}, lam={lam}, b={b})")
    return 1.0 + lam * q / t


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    convergent: float
    deviation: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Deviation of each convergent from the truncated series ratio."""

    point: NumericPoint
    series_ratio: float
    truncation_terms: int
    rows: tuple[ConvergenceRow, ...] = field(default_factory=tuple)

    def final_deviation(self) -> float:
        return self.rows[-1].deviation

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "convergent", "deviation"])
        for row in self.rows:
            writer.writerow([row.n, repr(row.convergent), repr(row.deviation)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "q": self.point.q,
            "lambda": self.point.lam,
            "b": self.point.b,
            "series_ratio": self.series_ratio,
            "truncation_terms": self.truncation_terms,
            "rows": [
                {"n": r.n, "convergent": r.convergent, "deviation": r.deviation}
                for r in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConvergenceReport":
        return cls(
            point=NumericPoint(q=data["q"], lam=data["lambda"], b=data["b"]),
            series_ratio=data["series_ratio"],
            truncation_terms=data["truncation_terms"],
            rows=tuple(
                ConvergenceRow(r["n"], r["convergent"], r["deviation"]) for r in data["rows"]
            ),
        )


def convergence_demo(pt: NumericPoint, n_max: int, max_terms: int = 50) -> ConvergenceReport:
    """Tabulate |convergent(n) - series ratio| for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    ratio, used = _series_ratio_with_terms(pt, max_terms)
    if not math.isfinite(ratio):
        raise NumericBreakdown(f"series ratio is not finite at (q={pt.q}, lam={pt.lam}, b={pt.b})")
    rows = []
    for n in range(1, n_max + 1):
        value = cf_numeric(pt, n)
        rows.append(ConvergenceRow(n, value, abs(value - ratio)))
    return ConvergenceReport(point=pt, series_ratio=ratio, truncation_terms=used, rows=tuple(rows))
