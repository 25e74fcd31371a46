import random
from fractions import Fraction

import pytest

from idealgen.fields import (FieldCtx, FieldMismatchError, contract,
                             element_order, embed, factor_prime_power,
                             field_for_order, frobenius, make_extension)
from helpers import random_element, random_nonzero

SMALL_FIELDS = [
    FieldCtx.prime(2), FieldCtx.prime(3), FieldCtx.prime(5),
    FieldCtx.prime(7), FieldCtx.prime(13),
    make_extension(2, 2), make_extension(2, 3), make_extension(2, 4),
    make_extension(3, 2),
]


def test_make_extension_degenerate_e1():
    assert make_extension(2, 1) == FieldCtx.prime(2)


def test_make_extension_f4_modulus():
    # the only monic irreducible quadratic over F_2, by brute-force trial division
    assert make_extension(2, 2).modulus == (1, 1, 1)


def test_make_extension_f16_modulus_is_first_irreducible():
    ctx = make_extension(2, 4)
    # independent check: enumerate monic quartics in constant-first lex order,
    # test irreducibility by exhaustive root / quadratic-divisor check
    def reducible(c0, c1, c2, c3):
        def ev(x):
            return (c0 + c1 * x + c2 * x * x + c3 * x ** 3 + x ** 4) % 2
        if ev(0) == 0 or ev(1) == 0:
            return True
        # the only irreducible quadratic is t^2+t+1; its square is t^4+t^2+1
        return (c0, c1, c2, c3) == (1, 0, 1, 0)
    first = None
    for c0 in range(2):
        for c1 in range(2):
            for c2 in range(2):
                for c3 in range(2):
                    if not reducible(c0, c1, c2, c3):
                        first = (c0, c1, c2, c3, 1)
                        break
                if first:
                    break
            if first:
                break
        if first:
            break
    assert ctx.modulus == first == (1, 0, 0, 1, 1)


def test_make_extension_rejects_nonprime():
    with pytest.raises(ValueError):
        make_extension(4, 2)
    with pytest.raises(ValueError):
        make_extension(1, 3)


def test_field_for_order():
    assert field_for_order(9).order == 9
    assert field_for_order(7) == FieldCtx.prime(7)
    with pytest.raises(ValueError):
        field_for_order(6)
    assert factor_prime_power(8) == (2, 3)


def test_ctx_equality_and_hash():
    a = make_extension(2, 2)
    b = FieldCtx.extension(2, 2, (1, 1, 1))
    assert a == b and hash(a) == hash(b)
    assert a != FieldCtx.prime(2)
    assert FieldCtx.rational() == FieldCtx.rational()


def test_modulus_verified_at_construction():
    with pytest.raises(ValueError):
        FieldCtx.extension(2, 2, (0, 0, 1))  # t^2 is reducible
    with pytest.raises(ValueError):
        FieldCtx.extension(2, 2, (1, 1, 0))  # not monic of degree 2


@pytest.mark.parametrize("ctx", [c for c in SMALL_FIELDS if c.order <= 16])
def test_field_axioms_exhaustive(ctx):
    elems = list(ctx.elements())
    one = ctx.one()
    for a in elems:
        assert a + ctx.zero() == a
        assert a * one == a
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a * a.inverse() == one
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
    rng = random.Random(1)
    for _ in range(300):
        a, b, c = (elems[rng.randrange(len(elems))] for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("ctx", [FieldCtx.rational(), FieldCtx.prime(101)])
def test_field_axioms_randomized(ctx):
    rng = random.Random(7)
    one = ctx.one()
    for _ in range(1000):
        a, b, c = (random_element(rng, ctx) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if not a.is_zero():
            assert a * a.inverse() == one


def test_cross_context_arithmetic_is_hard_error():
    a = FieldCtx.prime(5).element(2)
    b = FieldCtx.prime(7).element(2)
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * b
    # same order but different modulus would also mismatch
    c = make_extension(2, 2).element([1, 0])
    with pytest.raises(FieldMismatchError):
        c + FieldCtx.prime(2).element(1)


def test_rational_payload_reduced():
    Q = FieldCtx.rational()
    x = Q.element(Fraction(4, 6))
    assert x.val == Fraction(2, 3) and x.val.denominator == 3
    assert Q.element(0).val == Fraction(0, 1)


def test_frobenius_examples():
    F4 = make_extension(2, 2)
    t = F4.element([0, 1])
    assert frobenius(t) == t + 1  # t^2 reduced by t^2+t+1
    assert frobenius(F4.element(1)) == F4.element(1)
    # k-fold application is the identity
    F8 = make_extension(2, 3)
    for a in F8.elements():
        b = a
        for _ in range(3):
            b = frobenius(b)
        assert b == a


def test_frobenius_is_ring_homomorphism():
    rng = random.Random(3)
    for ctx in (make_extension(2, 4), make_extension(3, 2)):
        for _ in range(200):
            a, b = random_element(rng, ctx), random_element(rng, ctx)
            assert frobenius(a + b) == frobenius(a) + frobenius(b)
            assert frobenius(a * b) == frobenius(a) * frobenius(b)


def test_frobenius_rejects_rationals():
    with pytest.raises(ValueError):
        frobenius(FieldCtx.rational().element(2))


def test_element_order_examples():
    F5 = FieldCtx.prime(5)
    assert element_order(F5.element(1)) == 1
    assert element_order(F5.element(2)) == 4  # powers 2, 4, 3, 1
    assert element_order(FieldCtx.prime(11).element(2)) == 10


def test_element_order_brute_force_and_divides():
    for ctx in SMALL_FIELDS:
        q = ctx.order
        for a in ctx.elements():
            if a.is_zero():
                continue
            n = element_order(a)
            assert (q - 1) % n == 0
            # brute force cross-check
            acc = ctx.one()
            for k in range(1, n):
                acc = acc * a
                assert acc != ctx.one()
            assert acc * a == ctx.one()


def test_element_order_rejects_zero_and_infinite():
    with pytest.raises(ValueError):
        element_order(FieldCtx.prime(5).zero())
    with pytest.raises(ValueError):
        element_order(FieldCtx.rational().element(2))


def test_enumeration_roundtrip():
    for ctx in SMALL_FIELDS:
        for i in range(ctx.order):
            assert ctx.element_index(ctx.element_at(i)) == i
    Q = FieldCtx.rational()
    assert Q.element_at(5).val == Fraction(5)


def test_embed_contract_prime_tower():
    F2 = FieldCtx.prime(2)
    F16 = make_extension(2, 4)
    for v in (0, 1):
        up = embed(F2.element(v), F16)
        assert contract(up, F2) == F2.element(v)
    with pytest.raises(ValueError):
        contract(F16.element([0, 1, 0, 0]), F2)


def test_embed_contract_extension_tower():
    F4 = make_extension(2, 2)
    F16 = make_extension(2, 4)
    for a in F4.elements():
        up = embed(a, F16)
        assert contract(up, F4) == a
    # embedding is a homomorphism
    rng = random.Random(5)
    for _ in range(100):
        a, b = random_element(rng, F4), random_element(rng, F4)
        assert embed(a * b, F16) == embed(a, F16) * embed(b, F16)
        assert embed(a + b, F16) == embed(a, F16) + embed(b, F16)
    with pytest.raises(ValueError):
        embed(F4.element([0, 1]), make_extension(2, 3))  # 2 does not divide 3


def test_pow_and_division():
    F7 = FieldCtx.prime(7)
    a = F7.element(3)
    assert a ** 0 == F7.one()
    assert a ** 6 == F7.one()
    assert a ** -1 == a.inverse()
    assert (a / a) == F7.one()
    with pytest.raises(ZeroDivisionError):
        F7.zero().inverse()
