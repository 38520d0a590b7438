"""Deterministic finite automata with output, and distinct-row counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Sequence

from ..qwords import block_value, digits_of


@dataclass(frozen=True)
class Dfao:
    """A k-DFAO.  ``delta`` maps (state, digit) to a state, ``tau`` state to output.

    Input is read least significant digit first unless ``lsd_first`` is False.
    """

    k: int
    delta: Mapping[tuple[Hashable, int], Hashable]
    initial: Hashable
    tau: Mapping[Hashable, Hashable]
    lsd_first: bool = True
    states: frozenset = field(init=False)

    def __post_init__(self):
        states = frozenset(self.tau)
        if self.initial not in states:
            raise ValueError("initial state has no output")
        for st in states:
            for d in range(self.k):
                target = self.delta.get((st, d))
                if target not in states:
                    raise ValueError(f"transition from {st!r} on {d} is missing or leaves the state set")
        object.__setattr__(self, "states", states)

    def run(self, word: Sequence[int], start: Hashable | None = None) -> Hashable:
        state = self.initial if start is None else start
        for d in word:
            state = self.delta[(state, d)]
        return state

    def __call__(self, n: int) -> Hashable:
        return dfao_eval(self, n)


def dfao_eval(d: Dfao, n: int) -> Hashable:
    if n < 0:
        raise ValueError("n must be nonnegative")
    digits = digits_of(n, d.k)  # most significant first
    if d.lsd_first:
        digits = digits[::-1]
    return d.tau[d.run(digits)]


def thue_morse() -> Dfao:
    delta = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    return Dfao(2, delta, 0, {0: 0, 1: 1})


def repunit_rows(seq: Callable[[int], Hashable], k: int) -> Callable[[int, int], list]:
    """Row source j -> (seq([1^n 0^j]_k)) for n = 1..n_max."""

    def rows(j: int, n_max: int) -> list:
        return [seq(block_value(1, n, j, k)) for n in range(1, n_max + 1)]

    return rows


def row_set_stats(row_source: Callable[[int, int], Sequence[Hashable]], j_max: int, n_max: int) -> int:
    """Number of distinct length-n_max rows over j = 0..j_max."""
    return len({tuple(row_source(j, n_max)) for j in range(j_max + 1)})
