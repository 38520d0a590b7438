"""Preperiod and period of an observed, ultimately periodic sequence.

Indices are 1-based: a preperiod of 1 means the whole observed prefix is
purely periodic.  A candidate (start, period) is only accepted when the tail
from ``start`` covers at least three full periods, so every report is backed
by three confirmation windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from ..coeffs import u_at
from ..decomp import row_start
from ..lseries import Params

WINDOWS = 3


@dataclass(frozen=True)
class PeriodicityReport:
    preperiod: int | None
    period: int | None
    conclusive: bool
    observed: int

    def to_json(self) -> dict:
        return {
            "preperiod": self.preperiod,
            "period": self.period,
            "conclusive": self.conclusive,
            "observed": self.observed,
        }


def _tail_start(seq: Sequence[Hashable], period: int) -> int:
    """Smallest 0-based z with seq[i] == seq[i + period] for all i >= z."""
    z = len(seq) - period
    while z > 0 and seq[z - 1] == seq[z - 1 + period]:
        z -= 1
    return z


def find_preperiod(seq: Sequence[Hashable]) -> PeriodicityReport:
    """Lexicographically minimal (preperiod, period) supported by the data.

    For each period the earliest consistent start is found by scanning back
    from the end, which makes the whole search O(len^2).
    """
    n = len(seq)
    if n == 0:
        raise ValueError("empty sequence")
    best: tuple[int, int] | None = None
    for period in range(1, n // WINDOWS + 1):
        z = _tail_start(seq, period)
        if n - z >= WINDOWS * period and (best is None or z < best[0]):
            best = (z, period)
    if best is None:
        return PeriodicityReport(None, None, False, n)
    return PeriodicityReport(best[0] + 1, best[1], True, n)


def brute_force_preperiod(seq: Sequence[Hashable]) -> tuple[int, int] | None:
    """Direct minimisation over every (start, period); reference for tests."""
    n = len(seq)
    for z in range(n):
        for period in range(1, (n - z) // WINDOWS + 1):
            if all(seq[i] == seq[i + period] for i in range(z, n - period)):
                return z + 1, period
    return None


def u_row(j: int, params: Params, m_max: int) -> list:
    """(u([1^m 0^j]_q)) for m = 1..m_max, computed through decompositions."""
    if j < 0 or m_max < 1:
        raise ValueError("need j >= 0 and m_max >= 1")
    q = params.q
    return [u_at(row_start(j, m, q), params) for m in range(1, m_max + 1)]


def in_of_row(j: int, params: Params, m_max: int) -> PeriodicityReport:
    return find_preperiod(u_row(j, params, m_max))


def escalation_cap(j: int, q: int) -> int:
    return max(4 * q * q + 64, 4 * q ** max(j - 1, 0) + 64)


def stable_preperiod(j: int, params: Params, m_start: int | None = None, cap: int | None = None) -> PeriodicityReport:
    """Preperiod of the j-th row, doubling the observed length until stable.

    A report is accepted once it is conclusive and unchanged after doubling the
    row.  Past ``cap`` the last report is returned as inconclusive.
    """
    q = params.q
    cap = cap or escalation_cap(j, q)
    m = min(m_start or q ** max(j - 1, 0) + 16, cap)
    row = u_row(j, params, m)
    report = find_preperiod(row)
    while True:
        m2 = min(2 * m, cap)
        if m2 == m:
            # no room left to confirm the last report
            return PeriodicityReport(report.preperiod, report.period, False, report.observed)
        row = row + u_row_range(j, params, m + 1, m2)
        longer = find_preperiod(row)
        if report.conclusive and longer.conclusive and (longer.preperiod, longer.period) == (report.preperiod, report.period):
            return longer
        m, report = m2, longer


def u_row_range(j: int, params: Params, m_lo: int, m_hi: int) -> list:
    q = params.q
    return [u_at(row_start(j, m, q), params) for m in range(m_lo, m_hi + 1)]
