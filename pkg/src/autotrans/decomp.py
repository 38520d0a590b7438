"""Greedy decomposition of b against the system q^l - 1, and the b/k/c tables.

A decomposition of b is b = r + sum_{l in E} (q^l - 1) with r in the window
[[sbar^k]_q, [1^k 0]_q] and every l in E larger than k.  :func:`decompose`
walks the greedy chain b_1 > b_2 > ... and marks the chain positions whose value
lies in some window; those positions are exactly the decompositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .lseries import Params
from .qwords import block_value, render_number


def window(l: int, params: Params) -> tuple[int, int]:
    """The closed window [[sbar^l]_q, [1^l 0]_q]; l = 0 gives {0}."""
    q = params.q
    return block_value(params.sbar, l, 0, q), block_value(1, l, 1, q)


def interval_index(b: int, params: Params) -> int | None:
    """The unique l >= 0 with [sbar^l]_q <= b <= [1^l 0]_q, or None."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    return _interval_index(b, params.q, params.sbar)


@lru_cache(maxsize=1 << 16)
def _interval_index(b: int, q: int, sbar: int) -> int | None:
    # windows are disjoint and increasing; stop once the lower end passes b
    l = 0
    while True:
        lo = block_value(sbar, l, 0, q)
        if lo > b:
            return None
        if b <= block_value(1, l, 1, q):
            return l
        l += 1


def max_l(b: int, q: int) -> int | None:
    """Largest l >= 1 with q^l - 1 <= b, or None when b < q - 1."""
    if b < q - 1:
        return None
    l = 1
    while q ** (l + 1) - 1 <= b:
        l += 1
    return l


@dataclass(frozen=True)
class Decomposition:
    """Output of the greedy procedure on b.

    ``chain`` is b_1 = b, b_2, ...; ``lvals[i]`` is the exponent subtracted to go
    from chain[i] to chain[i+1].  ``I`` holds 1-based chain positions lying in a
    window and ``kvals`` the matching window indices.
    """

    b: int
    q: int
    sbar: int
    chain: tuple[int, ...]
    lvals: tuple[int, ...]
    I: tuple[int, ...]
    kvals: tuple[int, ...]
    stop_l: int | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.chain)

    def k_at(self, n: int) -> int | None:
        """Window index of chain position n (1-based), None if outside every window."""
        try:
            return self.kvals[self.I.index(n)]
        except ValueError:
            return None

    def c_at(self, n: int) -> int | None:
        k = self.k_at(n)
        if k is None:
            return None
        return self.chain[n - 1] - block_value(self.sbar, k, 0, self.q)

    def decompositions(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """Every (r, k, E) with b = r + sum_{l in E}(q^l - 1), E listed decreasingly."""
        return [(self.chain[i - 1], k, self.lvals[: i - 1]) for i, k in zip(self.I, self.kvals)]

    def rendered_chain(self) -> list[str]:
        return [render_number(v, self.q) for v in self.chain]


def decompose(b: int, params: Params) -> Decomposition:
    if b < 0:
        raise ValueError("b must be nonnegative")
    return _decompose(b, params.q, params.sbar)


@lru_cache(maxsize=1 << 14)
def _decompose(b: int, q: int, sbar: int) -> Decomposition:
    chain = [b]
    lvals: list[int] = []
    I: list[int] = []
    kvals: list[int] = []
    stop_l = None

    def mark(value: int):
        k = _interval_index(value, q, sbar)
        if k is not None:
            I.append(len(chain))
            kvals.append(k)

    mark(b)
    while (l := max_l(chain[-1], q)) is not None:
        nxt = chain[-1] - (q**l - 1)
        if nxt > block_value(1, l - 1, 1, q):
            stop_l = l
            break
        lvals.append(l)
        chain.append(nxt)
        mark(nxt)
    return Decomposition(b, q, sbar, tuple(chain), tuple(lvals), tuple(I), tuple(kvals), stop_l)


def enumerate_decompositions(b: int, params: Params) -> set[tuple[int, int, tuple[int, ...]]]:
    """Brute-force every decomposition of b (independent of the greedy chain).

    Tries each window index k and each subset E of {k+1, ..., L} with
    L = max{l : q^l - 1 <= b}.  Exponential in L; desk scale only.
    """
    q = params.q
    top = max_l(b, q) or 0
    found = set()
    k = 0
    while True:
        lo, hi = window(k, params)
        if lo > b:
            break
        candidates = range(k + 1, top + 1)
        for r in range(len(candidates) + 1):
            for E in itertools.combinations(candidates, r):
                rest = b - sum(q**l - 1 for l in E)
                if lo <= rest <= hi:
                    found.add((rest, k, tuple(sorted(E, reverse=True))))
        k += 1
    return found


def k_of(b: int, params: Params) -> int | None:
    return interval_index(b, params)


def c_of(b: int, params: Params) -> int | None:
    k = interval_index(b, params)
    if k is None:
        return None
    return b - block_value(params.sbar, k, 0, params.q)


def row_start(j: int, m: int, q: int) -> int:
    """[1^m 0^j]_q, the first cell of row m."""
    return block_value(1, m, j, q)


@dataclass(frozen=True)
class CellTable:
    """Rows m = 1..m_max of the chains started at [1^m 0^j]_q."""

    j: int
    params: Params
    rows: tuple[Decomposition, ...]

    @property
    def m_max(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        """Number of columns shown: the longest chain plus one trailing column."""
        return max(len(r) for r in self.rows) + 1

    def row(self, m: int) -> Decomposition:
        if not 1 <= m <= self.m_max:
            raise IndexError(f"row {m} outside 1..{self.m_max}")
        return self.rows[m - 1]

    def b(self, m: int, n: int) -> int | None:
        chain = self.row(m).chain
        return chain[n - 1] if 1 <= n <= len(chain) else None

    def l(self, m: int, n: int) -> int | None:
        """The exponent subtracted at position n (None past the last step)."""
        lv = self.row(m).lvals
        return lv[n - 1] if 1 <= n <= len(lv) else None

    def k(self, m: int, n: int) -> int | None:
        return self.row(m).k_at(n) if self.b(m, n) is not None else None

    def c(self, m: int, n: int) -> int | None:
        return self.row(m).c_at(n) if self.b(m, n) is not None else None


def b_table(j: int, params: Params, m_max: int) -> CellTable:
    if j < 1 or m_max < 1:
        raise ValueError("need j >= 1 and m_max >= 1")
    q = params.q
    rows = tuple(decompose(row_start(j, m, q), params) for m in range(1, m_max + 1))
    return CellTable(j, params, rows)


def N_set(j: int, m: int, params: Params) -> set[int]:
    if j < 1 or m < 1:
        raise ValueError("need j, m >= 1")
    return set(decompose(row_start(j, m, params.q), params).I)
