"""Finite field construction and arithmetic.

Frozen constants in this file were derived by hand from the stored
modulus: F_9 = F_3[t]/(t^2 + 1) and F_25 = F_5[t]/(t^2 + t + 1), so for
example (t+1)^2 = 2t and (t+1)^4 = 2 in F_9.
"""

import pytest

from hasseforms import (
    discrete_log,
    make_field,
    norm_to_prime,
    primitive_element,
    quadratic_character,
)
from hasseforms.errors import (
    CtxMismatchError,
    DegreeTooLargeError,
    EvenCharacteristicError,
    NotPrimeError,
    ZeroElementError,
)


@pytest.fixture(scope="module")
def f9():
    return make_field(3, 2)


@pytest.fixture(scope="module")
def f25():
    return make_field(5, 2)


def test_rejects_even_characteristic():
    with pytest.raises(EvenCharacteristicError):
        make_field(2)
    with pytest.raises(EvenCharacteristicError):
        make_field(2, 5)


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 15, 21])
def test_rejects_composite_characteristic(bad):
    with pytest.raises(NotPrimeError):
        make_field(bad)


def test_rejects_oversized_order():
    with pytest.raises(DegreeTooLargeError):
        make_field(3, 21)  # 3^21 > 2^32


def test_prime_field_basics():
    ctx = make_field(7)
    assert (ctx.p, ctx.n, ctx.q) == (7, 1, 7)
    assert ctx.modulus is None
    assert ctx(10) == 3
    assert ctx(-1) == 6
    assert int(ctx(6)) == 6
    assert not ctx.zero and ctx.one


def test_frozen_moduli(f9, f25):
    # little-endian coefficient tuples including the leading 1
    assert f9.modulus == (1, 0, 1)
    assert f25.modulus == (1, 1, 1)
    assert make_field(3, 3).modulus == (1, 0, 2, 1)


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (7, 2), (19, 2)])
def test_modulus_is_monic_without_roots(p, n):
    ctx = make_field(p, n)
    c = ctx.modulus
    assert len(c) == n + 1 and c[-1] == 1
    for x in range(p):
        acc = 0
        for coef in reversed(c):
            acc = (acc * x + coef) % p
        assert acc != 0


def test_element_iteration_is_rank_order(f9, f25):
    for ctx in (f9, f25):
        els = list(ctx.iter_elements())
        assert len(els) == ctx.q
        assert els[0] == ctx.zero
        assert [e.rank for e in els] == list(range(ctx.q))
        assert all(ctx.from_rank(e.rank) == e for e in els)


def test_frozen_f9_arithmetic(f9):
    t = f9((0, 1))
    s = t + 1
    assert t * t == -1
    assert s * s == 2 * t
    assert s ** 4 == 2
    assert s * s.inverse() == 1
    assert (s / s) == 1
    assert -s == 2 * t + 2


def test_unit_group_relations(f25):
    nonzero = [x for x in f25.iter_elements() if x]
    for x in nonzero:
        assert x * x.inverse() == 1
        assert x ** 24 == 1
    for x in f25.iter_elements():
        assert x ** 25 == x  # Frobenius fixes the whole field, zero included
    with pytest.raises(ZeroDivisionError):
        f25.zero.inverse()


def test_int_coercion_rules(f9):
    t = f9((0, 1))
    assert int(f9(2)) == 2
    with pytest.raises(ValueError):
        int(t)
    assert 1 + t == t + 1
    assert 2 * t == t * 2


def test_cross_field_operations_rejected():
    a = make_field(5)(1)
    b = make_field(7)(1)
    with pytest.raises(CtxMismatchError):
        a + b
    with pytest.raises(CtxMismatchError):
        a * b


def test_elements_are_immutable(f9):
    t = f9((0, 1))
    with pytest.raises(AttributeError):
        t.coeffs = ()


def test_generators_frozen_and_maximal(f9, f25):
    assert make_field(5).generator == 2
    assert make_field(7).generator == 3
    assert f9.generator == f9((1, 1))
    for ctx in (make_field(5), make_field(7), f9, f25):
        g = ctx.generator
        powers = {(g ** k).rank for k in range(ctx.q - 1)}
        assert len(powers) == ctx.q - 1
        assert primitive_element(ctx) == g


def test_quadratic_character_matches_square_table(f9, f25):
    for ctx in (make_field(7), f9, f25):
        squares = {(x * x).rank for x in ctx.iter_elements() if x}
        for x in ctx.iter_elements():
            expect = 0 if not x else (1 if x.rank in squares else -1)
            assert quadratic_character(x) == expect


def test_quadratic_character_counts():
    # exactly half the nonzero elements are squares, up to desk scale
    for p, n in ((7, 1), (3, 2), (5, 2), (3, 3), (7, 2), (19, 2)):
        ctx = make_field(p, n)
        plus = sum(1 for x in ctx.iter_elements() if quadratic_character(x) == 1)
        assert plus == (ctx.q - 1) // 2


def test_quadratic_character_multiplicative(f9):
    nonzero = [x for x in f9.iter_elements() if x]
    for a in nonzero:
        for b in nonzero:
            assert quadratic_character(a * b) == quadratic_character(a) * quadratic_character(b)


def test_norm_to_prime(f9, f25):
    t = f9((0, 1))
    assert norm_to_prime(t + 1) == 2
    nonzero = [x for x in f9.iter_elements() if x]
    for a in nonzero:
        int(norm_to_prime(a))  # lands in the prime subfield
        for b in nonzero:
            assert norm_to_prime(a * b) == norm_to_prime(a) * norm_to_prime(b)
    image = {int(norm_to_prime(x)) for x in f25.iter_elements() if x}
    assert image == {1, 2, 3, 4}


def test_norm_multiplicative_f49():
    ctx = make_field(7, 2)
    nonzero = [x for x in ctx.iter_elements() if x]
    for a in nonzero:
        na = norm_to_prime(a)
        for b in nonzero:
            assert norm_to_prime(a * b) == na * norm_to_prime(b)


def test_discrete_log_inverts_generator(f9, f25):
    for ctx in (make_field(7), f9, f25):
        g = ctx.generator
        for x in ctx.iter_elements():
            if not x:
                continue
            e = discrete_log(x)
            assert 0 <= e < ctx.q - 1
            assert g ** e == x
        with pytest.raises(ZeroElementError):
            discrete_log(ctx.zero)


def test_ring_laws(f9, f25):
    els9 = list(f9.iter_elements())
    for a in els9:
        for b in els9:
            assert a + b == b + a
            assert a * b == b * a
    for a in els9:
        for b in els9:
            for c in els9:
                assert a * (b + c) == a * b + a * c
                assert (a + b) + c == a + (b + c)
    els25 = list(f25.iter_elements())
    for a in els25[:8]:
        for b in els25:
            for c in els25:
                assert a * (b + c) == a * b + a * c


def test_ctx_equality_is_structural(f9):
    assert f9 == make_field(3, 2)
    assert f9 != make_field(3)
    assert hash(f9) == hash(make_field(3, 2))
