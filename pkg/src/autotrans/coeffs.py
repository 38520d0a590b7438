"""Coefficients of the working series through the decomposition chain.

Each decomposition of b contributes one summand

    (-1)^(k(s-1)) * C([s^k]_q, c) * (-a)^c * (-1)^(n-1)

where n is the chain position, k its window index and c = b_n - [sbar^k]_q.
Summands are kept symbolic in a as :class:`DMonomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .decomp import Decomposition, decompose, row_start
from .fq import FqElem, minus_one_pow, pow_int
from .lseries import Params
from .qwords import block_value, digit_sum


def lucas_binom(M: int, K: int, p: int) -> int:
    """C(M, K) mod p as the product of digitwise binomials in base p."""
    return lucas_binom_base(M, K, p, p)


def lucas_binom_base(M: int, K: int, base: int, p: int) -> int:
    """Digitwise product of C(M_i, K_i) mod p in the given base.

    Valid whenever ``base`` is a power of p, since (1 + x)^(p^e) = 1 + x^(p^e)
    in characteristic p.
    """
    if M < 0 or K < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if K > M:
        return 0
    result = 1
    while K:
        M, mi = divmod(M, base)
        K, ki = divmod(K, base)
        if ki > mi:
            return 0
        result = result * comb(mi, ki) % p
        if not result:
            return 0
    return result % p


@dataclass(frozen=True)
class DMonomial:
    """sign * binom * (-a)^exponent with binom in [0, p).

    ``sign`` and ``binom`` are kept apart only so tables print the way they are
    read by hand (``-2(-a)^5`` rather than ``1(-a)^5`` in F_3); arithmetic only
    ever uses ``scalar``.
    """

    sign: int
    binom: int
    exponent: int
    p: int

    def __post_init__(self):
        binom = self.binom % self.p
        object.__setattr__(self, "binom", binom)
        if binom == 0:
            object.__setattr__(self, "sign", 1)
            object.__setattr__(self, "exponent", 0)
        elif self.p == 2:
            object.__setattr__(self, "sign", 1)
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")

    @classmethod
    def zero(cls, p: int) -> "DMonomial":
        return cls(1, 0, 0, p)

    @property
    def scalar(self) -> int:
        return self.sign * self.binom % self.p

    def is_zero(self) -> bool:
        return self.binom == 0

    def same_as(self, other: "DMonomial", q: int) -> bool:
        """Equality as functions of a in F_q, without evaluating."""
        if self.scalar != other.scalar:
            return False
        if self.is_zero():
            return True
        e1, e2 = self.exponent, other.exponent
        return e1 == e2 or (e1 >= 1 and e2 >= 1 and (e1 - e2) % (q - 1) == 0)

    def evaluate(self, params: Params) -> FqElem:
        return d_eval(self, params)

    def render(self, q: int) -> str:
        """Print as in the hand-computed tables: ``2(-a)^3``, ``-(-a)``, ``-1``, ``0``.

        The exponent is replaced by the base-q digit sum of c, which agrees with
        c on F_q (x^q = x) and is zero only for c = 0.
        """
        if self.is_zero():
            return "0"
        prefix = "-" if self.sign < 0 else ""
        e = digit_sum(self.exponent, q)
        if e == 0:
            return f"{prefix}{self.binom}"
        mag = "" if self.binom == 1 else str(self.binom)
        power = "(-a)" if e == 1 else f"(-a)^{e}"
        return f"{prefix}{mag}{power}"

    def to_json(self) -> dict:
        return {"scalar": str(self.sign * self.binom), "exp": str(self.exponent)}


def summand(dec: Decomposition, n: int, params: Params) -> DMonomial:
    """The contribution of chain position n (1-based) of a decomposition."""
    p = params.p
    k = dec.k_at(n)
    if k is None:
        return DMonomial.zero(p)
    c = dec.chain[n - 1] - block_value(params.sbar, k, 0, params.q)
    top = block_value(params.s, k, 0, params.q)
    t = k * (params.s - 1) + n - 1
    return DMonomial(-1 if t % 2 else 1, lucas_binom(top, c, p), c, p)


def d_value(j: int, m: int, n: int, params: Params) -> DMonomial:
    """The summand in cell (m, n) of the table started at [1^m 0^j]_q."""
    dec = decompose(row_start(j, m, params.q), params)
    if not 1 <= n <= len(dec):
        raise IndexError(f"position {n} beyond chain of length {len(dec)} (j={j}, m={m})")
    return summand(dec, n, params)


def d_cell(j: int, m: int, n: int, params: Params) -> DMonomial:
    """Like :func:`d_value` but zero past the end of the chain."""
    dec = decompose(row_start(j, m, params.q), params)
    if n > len(dec):
        return DMonomial.zero(params.p)
    return summand(dec, n, params)


def d_eval(mono: DMonomial, params: Params) -> FqElem:
    ctx = params.ctx
    if mono.is_zero():
        return ctx.zero
    return ctx(mono.scalar) * pow_int(-params.a, mono.exponent)


def u_at(b: int, params: Params) -> FqElem:
    """Coefficient of x^b in the working series, summed over decompositions of b."""
    dec = decompose(b, params)
    total = params.ctx.zero
    for n in dec.I:
        total = total + d_eval(summand(dec, n, params), params)
    return total


def d2_closed(m: int, n: int, params: Params) -> DMonomial:
    """Closed form of the j = 2 summands, case by case in n."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    q, s, sbar, p = params.q, params.s, params.sbar, params.p

    def mono(binom: int, exponent: int) -> DMonomial:
        t = (s - 1) * (m - n) + (n - 1)
        return DMonomial(-1 if t % 2 else 1, binom, exponent, p)

    if n == 1:
        return mono(comb(s, s - 1), (s - 1) + (m + 1 - n) * s)
    if n <= sbar:
        return DMonomial.zero(p)
    if n <= q:
        if m < n - 1:
            return DMonomial.zero(p)
        return mono(comb(s, n - 1 - sbar), (n - 1 - sbar) + (m + 1 - n) * s)
    if n == q + 1:
        if m < n - 2:
            return DMonomial.zero(p)
        return mono(1, (m + 2 - n) * s)
    return DMonomial.zero(p)


def periodic_ratio(params: Params) -> FqElem:
    """(-1)^(s-1) (-a)^s, the factor between consecutive rows in a fixed column."""
    return minus_one_pow(params.ctx, params.s - 1) * pow_int(-params.a, params.s)
