"""Exact arithmetic in the finite field GF(p^e).

Elements are stored in the polynomial basis 1, t, ..., t^(e-1) over F_p, as a
tuple of ``e`` coordinates in ``[0, p)``, constant coordinate first.  The
defining polynomial is the lexicographically smallest monic irreducible of
degree ``e`` (coefficient tuples compared constant-first), so two runs always
agree on the basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_divides(divisor: Sequence[int], poly: Sequence[int], p: int) -> bool:
    """True when monic ``divisor`` divides ``poly`` over F_p (constant-first lists)."""
    rem = list(poly)
    dd = len(divisor) - 1
    for shift in range(len(rem) - 1 - dd, -1, -1):
        lead = rem[shift + dd] % p
        if lead:
            for i, c in enumerate(divisor):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
    return not any(r % p for r in rem[:dd])


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over F_p.

    Tries every monic divisor of degree at most half the degree; only meant for
    desk-scale fields.
    """
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_divides(list(low) + [1], poly, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldContext:
    """The field F_q with q = p^e.

    ``modulus`` holds e+1 coefficients, constant first.  For e = 1 it is the
    placeholder (0, 1) and plays no role.
    """

    p: int
    e: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise ValueError("extension degree must be positive")
        if self.p**self.e > MAX_ORDER:
            raise ValueError(f"field order {self.p}^{self.e} exceeds {MAX_ORDER}")
        if not self.modulus:
            mod = (0, 1) if self.e == 1 else smallest_irreducible(self.p, self.e)
            object.__setattr__(self, "modulus", mod)
        elif self.e > 1 and (len(self.modulus) != self.e + 1 or not is_irreducible(self.modulus, self.p)):
            raise ValueError(f"modulus {self.modulus} is not a monic irreducible of degree {self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    # construction helpers

    def __call__(self, value: int | Sequence[int] | "FqElem") -> "FqElem":
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            coords = (int(value) % self.p,) + (0,) * (self.e - 1)
            return FqElem(self, coords)
        coords = tuple(int(c) for c in value)
        if len(coords) > self.e:
            raise ValueError(f"expected at most {self.e} coordinates, got {len(coords)}")
        if any(not 0 <= c < self.p for c in coords):
            raise ValueError(f"coordinates must lie in [0, {self.p})")
        return FqElem(self, coords + (0,) * (self.e - len(coords)))

    def parse(self, literal: str) -> "FqElem":
        """Parse a comma-separated coordinate literal such as ``"2"`` or ``"1,1"``."""
        try:
            parts = [int(x) for x in literal.split(",")]
        except ValueError:
            raise ValueError(f"bad field element literal {literal!r}") from None
        return self(parts)

    @cached_property
    def zero(self) -> "FqElem":
        return FqElem(self, (0,) * self.e)

    @cached_property
    def one(self) -> "FqElem":
        return self(1)

    @cached_property
    def gen(self) -> "FqElem":
        """The class of t; only meaningful when e > 1."""
        return self((0, 1)) if self.e > 1 else self.zero

    def elements(self) -> Iterator["FqElem"]:
        for low in itertools.product(range(self.p), repeat=self.e):
            yield FqElem(self, tuple(reversed(low)))

    def from_index(self, index: int) -> "FqElem":
        coords = []
        for _ in range(self.e):
            index, r = divmod(index, self.p)
            coords.append(r)
        return FqElem(self, tuple(coords))

    # numeric tables used by the series kernels

    @cached_property
    def reduction_matrix(self) -> np.ndarray:
        """Row k holds the coordinates of t^k for k = 0..2e-2."""
        e, p = self.e, self.p
        rows = np.zeros((2 * e - 1, e), dtype=np.int64)
        cur = [1] + [0] * (e - 1)
        for k in range(2 * e - 1):
            rows[k] = cur
            # multiply by t and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % p for c, m in zip(cur, self.modulus)]
        return rows

    def mul_matrix(self, c: "FqElem") -> np.ndarray:
        """Matrix M with coords(x * c) = coords(x) @ M (mod p)."""
        rows = []
        basis = self.one
        for _ in range(self.e):
            rows.append((basis * c).coeffs)
            basis = basis * self.gen
        return np.array(rows, dtype=np.int64)


@dataclass(frozen=True)
class FqElem:
    ctx: FieldContext
    coeffs: tuple[int, ...]

    def __repr__(self):
        return f"{self.ctx!r}({self.literal})"

    @property
    def literal(self) -> str:
        """Comma-separated coordinates, the inverse of :meth:`FieldContext.parse`."""
        if self.ctx.e == 1:
            return str(self.coeffs[0])
        return ",".join(map(str, self.coeffs))

    @property
    def index(self) -> int:
        return sum(c * self.ctx.p**i for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other) -> "FqElem":
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise ValueError("operands belong to different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return neg(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, inv(other))

    def __pow__(self, n: int):
        return pow_int(self, n)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return self == self.ctx(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.e, self.coeffs))


def field_new(p: int, e: int = 1) -> FieldContext:
    return FieldContext(p, e)


def add(x: FqElem, y: FqElem) -> FqElem:
    p = x.ctx.p
    return FqElem(x.ctx, tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))


def neg(x: FqElem) -> FqElem:
    p = x.ctx.p
    return FqElem(x.ctx, tuple((-a) % p for a in x.coeffs))


def mul(x: FqElem, y: FqElem) -> FqElem:
    ctx = x.ctx
    p, e = ctx.p, ctx.e
    if e == 1:
        return FqElem(ctx, ((x.coeffs[0] * y.coeffs[0]) % p,))
    prod = [0] * (2 * e - 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                prod[i + j] += a * b
    red = ctx.reduction_matrix
    out = [0] * e
    for k, c in enumerate(prod):
        if c:
            for i in range(e):
                out[i] += c * int(red[k, i])
    return FqElem(ctx, tuple(c % p for c in out))


def inv(x: FqElem) -> FqElem:
    if x.is_zero():
        raise ZeroDivisionError(f"inverse of zero in {x.ctx!r}")
    # x^(q-2) = x^(-1) on the multiplicative group
    return _square_multiply(x, x.ctx.q - 2)


def _square_multiply(x: FqElem, n: int) -> FqElem:
    result = x.ctx.one
    base = x
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def pow_int(x: FqElem, n: int) -> FqElem:
    """x^n for an arbitrary nonnegative integer n, with 0^0 = 1.

    For x != 0 the exponent is reduced mod q-1 first, which keeps exponents of
    size q^m cheap.
    """
    if n < 0:
        raise ValueError("negative exponent")
    if n == 0:
        return x.ctx.one
    if x.is_zero():
        return x.ctx.zero
    return _square_multiply(x, n % (x.ctx.q - 1))


def minus_one_pow(ctx: FieldContext, t: int) -> FqElem:
    """(-1)^t; identically 1 in characteristic 2."""
    return ctx.one if t % 2 == 0 else neg(ctx.one)


def frobenius(x: FqElem, i: int = 1) -> FqElem:
    """x^(p^i)."""
    for _ in range(i % x.ctx.e):
        x = _square_multiply(x, x.ctx.p)
    return x


def all_elements(ctx: FieldContext) -> Iterable[FqElem]:
    return list(ctx.elements())
