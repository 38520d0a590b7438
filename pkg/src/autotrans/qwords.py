"""Base-q words and the integers they denote.

A word is a tuple of digits, most significant first.  Words are formal: leading
zeros are kept, and the empty word has value 0.
"""

from __future__ import annotations

import string
from typing import Sequence

Word = tuple[int, ...]

_DIGIT_CHARS = string.digits + string.ascii_lowercase


def word_value(w: Sequence[int], q: int) -> int:
    value = 0
    for d in w:
        if not 0 <= d < q:
            raise ValueError(f"digit {d} out of range for base {q}")
        value = value * q + d
    return value


def repeat(x: int, m: int) -> Word:
    """The word x^m."""
    return (x,) * m


def block_value(x: int, m: int, j: int, q: int) -> int:
    """Value of the word x^m 0^j, i.e. x * (q^m - 1)/(q - 1) * q^j."""
    if not 0 <= x < q:
        raise ValueError(f"digit {x} out of range for base {q}")
    return x * ((q**m - 1) // (q - 1)) * q**j


def digits_of(n: int, q: int) -> Word:
    if n < 0:
        raise ValueError("negative integer has no base-q word")
    out = []
    while n:
        n, r = divmod(n, q)
        out.append(r)
    return tuple(reversed(out))


def digit_sum(n: int, q: int) -> int:
    total = 0
    while n:
        n, r = divmod(n, q)
        total += r
    return total


def render_word(w: Sequence[int], q: int) -> str:
    """Digit string as printed in the tables; empty word prints as ``0``.

    Bases above 36 fall back to dot-separated decimal digits.
    """
    if not w:
        return "0"
    if q <= len(_DIGIT_CHARS):
        return "".join(_DIGIT_CHARS[d] for d in w)
    return ".".join(map(str, w))


def render_number(n: int, q: int) -> str:
    return render_word(digits_of(n, q), q)


def parse_word(text: str, q: int) -> Word:
    if "." in text:
        digits = tuple(int(part) for part in text.split("."))
    else:
        digits = tuple(_DIGIT_CHARS.index(ch) for ch in text.lower())
    if any(d >= q for d in digits):
        raise ValueError(f"{text!r} is not a base-{q} word")
    return digits
