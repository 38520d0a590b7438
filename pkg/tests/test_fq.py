import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autotrans.fq import (
    FieldContext,
    field_new,
    frobenius,
    inv,
    is_irreducible,
    minus_one_pow,
    pow_int,
    smallest_irreducible,
)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]


def naive_mul(x, y, modulus, p):
    """Schoolbook product followed by long division; shares no code with the library."""
    e = len(modulus) - 1
    prod = [0] * (2 * len(x) - 1)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            prod[i + j] = (prod[i + j] + xi * yj) % p
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(modulus):
                prod[deg - e + i] = (prod[deg - e + i] - c * m) % p
    return tuple(prod[:e])


def has_root_free_factorisation(poly, p):
    """Brute-force irreducibility: no monic factor of degree <= deg/2 divides poly."""
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            rem = list(poly)
            for deg in range(e, d - 1, -1):
                c = rem[deg]
                if c:
                    for i, fc in enumerate(f):
                        rem[deg - d + i] = (rem[deg - d + i] - c * fc) % p
            if not any(rem[:d]):
                return False
    return True


@pytest.mark.parametrize("p,e", [(3, 1), (2, 2), (5, 1)])
def test_field_new_builds_requested_order(p, e):
    ctx = field_new(p, e)
    assert ctx.q == p**e
    assert len(list(ctx.elements())) == p**e


def test_f4_modulus_is_x2_x_1():
    assert field_new(2, 2).modulus == (1, 1, 1)


def test_invalid_fields_rejected():
    for p, e in [(4, 1), (1, 1), (3, 0)]:
        with pytest.raises(ValueError):
            FieldContext(p, e)
    with pytest.raises(ValueError):
        FieldContext(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)])
def test_smallest_irreducible_against_brute_force(p, e):
    mod = smallest_irreducible(p, e)
    assert has_root_free_factorisation(mod, p)
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if cand == mod:
            break
        assert not has_root_free_factorisation(cand, p)
    assert is_irreducible(mod, p)


def test_prime_field_examples():
    F3 = field_new(3)
    assert F3(2) + F3(2) == F3(1)
    assert inv(F3(2)) == F3(2)
    assert pow_int(F3(2), 77) == F3(2)
    assert pow_int(F3(0), 5) == F3(0)
    assert pow_int(F3(0), 0) == F3(1)


def test_f4_generator_squares_to_t_plus_one():
    F4 = field_new(2, 2)
    t = F4.gen
    assert t * t == F4.parse("1,1")


def test_minus_one_pow():
    F3, F4 = field_new(3), field_new(2, 2)
    assert minus_one_pow(F3, 3) == F3(2)
    assert minus_one_pow(F3, 4) == F3(1)
    assert minus_one_pow(F4, 1) == F4.one


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inv(field_new(5).zero)


def test_literal_round_trip_and_bad_literals():
    F9 = field_new(3, 2)
    for x in F9.elements():
        assert F9.parse(x.literal) == x
        assert F9.from_index(x.index) == x
    for bad in ["", "a", "1,1,1", "3"]:
        with pytest.raises(ValueError):
            F9.parse(bad)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_multiplication_table_matches_naive(p, e):
    ctx = field_new(p, e)
    elems = list(ctx.elements())
    for x in elems:
        for y in elems:
            if e == 1:
                expected = ((x.coeffs[0] * y.coeffs[0]) % p,)
            else:
                expected = naive_mul(x.coeffs, y.coeffs, ctx.modulus, p)
            assert (x * y).coeffs == expected


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, e):
    ctx = field_new(p, e)
    elems = list(ctx.elements())
    q = ctx.q
    for x in elems:
        assert x + (-x) == ctx.zero
        assert pow_int(x, q) == x
        if not x.is_zero():
            assert x * inv(x) == ctx.one
            assert pow_int(x, q - 1) == ctx.one
    # the multiplicative group is cyclic: some element has order exactly q - 1
    orders = []
    for x in elems:
        if x.is_zero():
            continue
        k, y = 1, x
        while y != ctx.one:
            y, k = y * x, k + 1
        orders.append(k)
    assert max(orders) == q - 1


def elements_of(ctx):
    return st.integers(0, ctx.q - 1).map(ctx.from_index)


FIELDS = [field_new(p, e) for p, e in [(3, 1), (2, 2), (3, 2), (2, 3), (5, 1), (7, 2)]]


@st.composite
def field_triple(draw):
    ctx = draw(st.sampled_from(FIELDS))
    return ctx, draw(elements_of(ctx)), draw(elements_of(ctx)), draw(elements_of(ctx))


@given(field_triple())
def test_ring_laws(data):
    ctx, x, y, z = data
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@given(field_triple())
def test_frobenius_is_additive_and_multiplicative(data):
    ctx, x, y, _ = data
    assert frobenius(x + y) == frobenius(x) + frobenius(y)
    assert frobenius(x * y) == frobenius(x) * frobenius(y)
    assert frobenius(x, ctx.e) == x


@settings(max_examples=200)
@given(st.sampled_from(FIELDS).flatmap(lambda c: st.tuples(st.just(c), elements_of(c))),
       st.integers(0, 10**30), st.integers(0, 10**30))
def test_pow_int_exponent_laws(data, m, n):
    ctx, x = data
    assert pow_int(x, m + n) == pow_int(x, m) * pow_int(x, n)
    if n < 300:
        naive = ctx.one
        for _ in range(n):
            naive = naive * x
        assert pow_int(x, n) == naive
