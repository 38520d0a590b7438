"""Truncated power series in x = 1/T over F_q, and the series built from them.

A :class:`Series` of precision N stores the coefficients of x^0..x^(N-1) as an
``(N, e)`` integer array of F_p coordinates.  Dense products go through
``np.convolve`` (exact in int64 at desk scale); the sparse factors
``1 - c x^d`` that make up every product in sight are applied as shift-subtract
passes, and division by ``1 - x^d`` as a cumulative sum over residue classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .fq import FieldContext, FqElem, frobenius, minus_one_pow
from .qwords import block_value


class PrecisionError(IndexError):
    """A coefficient was requested beyond the known precision."""


class NotAUnitError(ZeroDivisionError):
    """Inverse requested for a series with zero constant term."""


@dataclass(frozen=True)
class Params:
    ctx: FieldContext
    s: int
    a: FqElem

    def __post_init__(self):
        q = self.ctx.q
        if not 1 < self.s < q:
            raise ValueError(f"need 1 < s < q, got s={self.s}, q={q}")
        if self.a.ctx != self.ctx:
            raise ValueError("a must be an element of the parameter field")

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def sbar(self) -> int:
        return self.ctx.q - self.s

    def with_a(self, a: FqElem) -> "Params":
        return Params(self.ctx, self.s, a)

    def describe(self) -> dict:
        return {"q": self.q, "p": self.p, "e": self.ctx.e, "s": self.s, "a": self.a.literal}


def make_params(p: int, s: int, a: int | str | FqElem = 0, e: int = 1) -> Params:
    ctx = FieldContext(p, e)
    if isinstance(a, str):
        a = ctx.parse(a)
    return Params(ctx, s, ctx(a))


class Series:
    """Element of F_q[[x]] known modulo x^prec."""

    __slots__ = ("ctx", "data")

    def __init__(self, ctx: FieldContext, data: np.ndarray):
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != 2 or data.shape[1] != ctx.e:
            raise ValueError(f"expected an (N, {ctx.e}) coordinate array, got shape {data.shape}")
        self.ctx = ctx
        self.data = data % ctx.p
        self.data.flags.writeable = False

    @classmethod
    def zero(cls, ctx: FieldContext, prec: int) -> "Series":
        return cls(ctx, np.zeros((prec, ctx.e), dtype=np.int64))

    @classmethod
    def one(cls, ctx: FieldContext, prec: int) -> "Series":
        return cls.monomial(ctx.one, 0, prec)

    @classmethod
    def monomial(cls, c: FqElem, d: int, prec: int) -> "Series":
        data = np.zeros((prec, c.ctx.e), dtype=np.int64)
        if d < prec:
            data[d] = c.coeffs
        return cls(c.ctx, data)

    @classmethod
    def from_coeffs(cls, ctx: FieldContext, coeffs) -> "Series":
        coeffs = [ctx(c) for c in coeffs]
        data = np.array([c.coeffs for c in coeffs], dtype=np.int64).reshape(len(coeffs), ctx.e)
        return cls(ctx, data)

    @property
    def prec(self) -> int:
        return self.data.shape[0]

    def __len__(self):
        return self.prec

    def __getitem__(self, n: int) -> FqElem:
        return coeff(self, n)

    def __iter__(self) -> Iterator[FqElem]:
        for row in self.data:
            yield FqElem(self.ctx, tuple(int(v) for v in row))

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise PrecisionError(f"cannot raise precision from {self.prec} to {prec}")
        return Series(self.ctx, self.data[:prec])

    def __add__(self, other: "Series") -> "Series":
        return s_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return s_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return Series(self.ctx, _scale(self.data, other))
        return s_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return Series(self.ctx, -self.data)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ctx == other.ctx and self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.ctx, self.data.tobytes()))

    def __repr__(self):
        shown = ", ".join(c.literal for c in list(self)[:8])
        more = ", ..." if self.prec > 8 else ""
        return f"Series({self.ctx!r}, prec={self.prec}, [{shown}{more}])"

    def coord_lists(self) -> list[list[int]]:
        return self.data.tolist()

    def first_difference(self, other: "Series") -> int | None:
        """Index of the first differing coefficient over the common precision."""
        n = min(self.prec, other.prec)
        diff = np.nonzero(np.any(self.data[:n] != other.data[:n], axis=1))[0]
        return int(diff[0]) if diff.size else None


def _check_same_field(f: Series, g: Series):
    if f.ctx != g.ctx:
        raise ValueError("series over different fields")


def s_add(f: Series, g: Series) -> Series:
    _check_same_field(f, g)
    n = min(f.prec, g.prec)
    return Series(f.ctx, f.data[:n] + g.data[:n])


def s_sub(f: Series, g: Series) -> Series:
    _check_same_field(f, g)
    n = min(f.prec, g.prec)
    return Series(f.ctx, f.data[:n] - g.data[:n])


def _scale(data: np.ndarray, c: FqElem) -> np.ndarray:
    ctx = c.ctx
    if ctx.e == 1:
        return (data * c.coeffs[0]) % ctx.p
    return (data @ ctx.mul_matrix(c)) % ctx.p


def _convolve(f: np.ndarray, g: np.ndarray, ctx: FieldContext, n: int) -> np.ndarray:
    p, e = ctx.p, ctx.e
    f, g = f[:n], g[:n]
    if e == 1:
        return (np.convolve(f[:, 0], g[:, 0])[:n] % p).reshape(n, 1)
    acc = np.zeros((n, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        for j in range(e):
            acc[:, i + j] += np.convolve(f[:, i], g[:, j])[:n]
    acc %= p
    return (acc @ ctx.reduction_matrix) % p


def s_mul(f: Series, g: Series) -> Series:
    _check_same_field(f, g)
    n = min(f.prec, g.prec)
    return Series(f.ctx, _convolve(f.data, g.data, f.ctx, n))


def s_inv(f: Series) -> Series:
    """Multiplicative inverse by Newton iteration g <- g(2 - fg)."""
    ctx = f.ctx
    c0 = f[0]
    if c0.is_zero():
        raise NotAUnitError("constant term is zero")
    g = np.zeros((1, ctx.e), dtype=np.int64)
    g[0] = (c0 ** (ctx.q - 2)).coeffs
    prec = 1
    while prec < f.prec:
        prec = min(2 * prec, f.prec)
        g = np.vstack([g, np.zeros((prec - g.shape[0], ctx.e), dtype=np.int64)])
        fg = _convolve(f.data, g, ctx, prec)
        two_minus = -fg
        two_minus[0] = (two_minus[0] + 2 * np.array(ctx.one.coeffs)) % ctx.p
        g = _convolve(g, two_minus, ctx, prec)
    return Series(ctx, g)


def coeff(f: Series, n: int) -> FqElem:
    if not 0 <= n < f.prec:
        raise PrecisionError(f"coefficient {n} requested from series of precision {f.prec}")
    return FqElem(f.ctx, tuple(int(v) for v in f.data[n]))


# sparse kernels on raw coordinate arrays


def _mul_one_minus(data: np.ndarray, c: FqElem, d: int) -> np.ndarray:
    """data * (1 - c x^d), truncated to the same length."""
    if d >= data.shape[0] or c.is_zero():
        return data
    out = data.copy()
    out[d:] = (out[d:] - _scale(data[:-d], c)) % c.ctx.p
    return out


def _div_one_minus(data: np.ndarray, d: int, p: int) -> np.ndarray:
    """data / (1 - x^d): running sums along each residue class mod d."""
    n, e = data.shape
    if d >= n:
        return data
    rows = -(-n // d)
    padded = np.zeros((rows * d, e), dtype=np.int64)
    padded[:n] = data
    summed = np.cumsum(padded.reshape(rows, d, e), axis=0) % p
    return summed.reshape(rows * d, e)[:n]


def _shift(data: np.ndarray, d: int, prec: int) -> np.ndarray:
    """x^d * data, placed in a fresh array of length prec."""
    out = np.zeros((prec, data.shape[1]), dtype=np.int64)
    if d < prec:
        m = min(prec - d, data.shape[0])
        out[d : d + m] = data[:m]
    return out


def _binom_power_data(a: FqElem, exponent: int, prec: int) -> np.ndarray:
    ctx = a.ctx
    data = np.zeros((prec, ctx.e), dtype=np.int64)
    data[0] = ctx.one.coeffs
    if a.is_zero() or exponent == 0 or prec == 0:
        return data
    p = ctx.p
    power, i = 1, 0
    # (1 - a x)^(p^i) = 1 - a^(p^i) x^(p^i)
    while exponent and power < prec:
        exponent, digit = divmod(exponent, p)
        if digit:
            c = frobenius(a, i)
            for _ in range(digit):
                data = _mul_one_minus(data, c, power)
        power *= p
        i += 1
    return data


def binom_power(a: FqElem, exponent: int, prec: int) -> Series:
    """(1 - a x)^exponent modulo x^prec, via the base-p digits of the exponent."""
    if exponent < 0:
        raise ValueError("negative exponent")
    return Series(a.ctx, _binom_power_data(a, exponent, prec))


def _apply_tail(data: np.ndarray, q: int, k: int, ctx: FieldContext) -> np.ndarray:
    one = ctx.one
    j = k + 1
    while q**j - 1 < data.shape[0]:
        data = _mul_one_minus(data, one, q**j - 1)
        j += 1
    return data


def tail_product(params: Params, k: int, prec: int) -> Series:
    """prod_{j > k} (1 - x^(q^j - 1)) modulo x^prec."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = params.ctx
    return Series(ctx, _apply_tail(Series.one(ctx, prec).data, params.q, k, ctx))


def _terms(params: Params, prec: int):
    """Yield (k, sign, shift, exponent) for every summand whose leading power is below prec."""
    q, s, sbar = params.q, params.s, params.sbar
    k = 0
    while True:
        shift = block_value(sbar, k, 0, q)
        if shift >= prec:
            return
        yield k, minus_one_pow(params.ctx, k * (s - 1)), shift, block_value(s, k, 0, q)
        k += 1


def series_star(params: Params, prec: int) -> Series:
    """The working expansion of (alpha/Pi) L(1, chi_s), summand by summand.

    Summand k is (-1)^(k(s-1)) x^[sbar^k] (1 - a x)^[s^k] prod_{j>k}(1 - x^(q^j-1)).
    """
    if prec < 1:
        raise ValueError("precision must be positive")
    ctx = params.ctx
    total = np.zeros((prec, ctx.e), dtype=np.int64)
    for k, sign, shift, exponent in _terms(params, prec):
        width = prec - shift
        term = _binom_power_data(params.a, exponent, width)
        term = _apply_tail(term, params.q, k, ctx)
        total[shift:] += _scale(term, sign)
    return Series(ctx, total)


def series_L_direct(params: Params, prec: int) -> Series:
    """L(1, chi_s) from its defining sum, rewritten in x = 1/T.

    With (T - a)^S = T^S (1 - a x)^S and L_k = T^[1^k 0] prod_{i<=k}(1 - x^(q^i - 1)),
    summand k becomes (-1)^(k(s-1)) x^[sbar^k] (1 - a x)^[s^k] / prod_{i<=k}(1 - x^(q^i-1)).
    """
    if prec < 1:
        raise ValueError("precision must be positive")
    ctx, q, p = params.ctx, params.q, params.p
    total = np.zeros((prec, ctx.e), dtype=np.int64)
    for k, sign, shift, exponent in _terms(params, prec):
        width = prec - shift
        term = _binom_power_data(params.a, exponent, width)
        for i in range(1, k + 1):
            term = _div_one_minus(term, q**i - 1, p)
        total[shift:] += _scale(term, sign)
    return Series(ctx, total)


def series_alpha(params: Params, prec: int) -> Series:
    """prod_{j >= 0} (1 - x^(q^(j+1) - q^j))."""
    ctx, q = params.ctx, params.q
    data = Series.one(ctx, prec).data
    j = 0
    while q ** (j + 1) - q**j < prec:
        data = _mul_one_minus(data, ctx.one, q ** (j + 1) - q**j)
        j += 1
    return Series(ctx, data)


def series_Pi(params: Params, prec: int) -> Series:
    """prod_{j >= 1} (1 - [j]/[j+1]) in x = 1/T.

    Each factor is 1 - x^(q^(j+1) - q^j) (1 - x^(q^j - 1)) / (1 - x^(q^(j+1) - 1)),
    applied to the running product without ever forming it densely.
    """
    ctx, q, p = params.ctx, params.q, params.p
    data = Series.one(ctx, prec).data
    j = 1
    while q ** (j + 1) - q**j < prec:
        lead = q ** (j + 1) - q**j
        ratio = _div_one_minus(data, q ** (j + 1) - 1, p)
        ratio = _mul_one_minus(ratio, ctx.one, q**j - 1)
        data = (data - _shift(ratio, lead, prec)) % p
        j += 1
    return Series(ctx, data)


SERIES_BUILDERS = {
    "star": series_star,
    "L": series_L_direct,
    "alpha": series_alpha,
    "pi": series_Pi,
}
