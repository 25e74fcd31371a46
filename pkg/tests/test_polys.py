import random
from fractions import Fraction

import pytest

from idealgen.fields import FieldCtx, FieldMismatchError, make_extension
from idealgen.polys import (MultiPoly, NEG_INF, Point, PolyParseError,
                            iter_monomials, iter_monomials_of_degree,
                            monomial_count, parse_poly)
from helpers import random_element, random_poly

Q = FieldCtx.rational()
F5 = FieldCtx.prime(5)
F4 = make_extension(2, 2)


def test_listing_order_matches_row_layout():
    # 1, X1, X2, X1^2, X1X2, X2^2 for n=2
    assert list(iter_monomials(2, 2)) == [
        (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    # n=3 degree-2 block: X1^2, X1X2, X1X3, X2^2, X2X3, X3^2
    assert list(iter_monomials_of_degree(3, 2)) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert monomial_count(2, 3) == 10


def test_evaluate_examples():
    one = MultiPoly.one(Q, 2)
    assert one.evaluate(Point(Q, [3, 4])) == Q.one()
    xy = parse_poly("X1*X2", 2, Q)
    assert xy.evaluate(Point(Q, [1, 1])) == Q.one()
    # closed-form value at the simplex origin: (-1)^(d-f) (d-f)! = 2 for d=2
    f = parse_poly("(X1+X2-1)*(X1+X2-2)", 2, Q)
    assert f.evaluate(Point(Q, [0, 0])) == Q.element(2)


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(11)
    for ctx in (Q, F5, F4):
        for _ in range(60):
            f = random_poly(rng, ctx, 2, 3)
            g = random_poly(rng, ctx, 2, 3)
            pt = Point(ctx, [random_element(rng, ctx), random_element(rng, ctx)])
            assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
            assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


def test_evaluate_dimension_and_context_mismatch():
    f = parse_poly("X1", 1, Q)
    with pytest.raises(ValueError):
        f.evaluate(Point(Q, [1, 2]))
    with pytest.raises(FieldMismatchError):
        f.evaluate(Point(F5, [1]))


def test_degree_part_examples():
    f = parse_poly("X1^2 + X2", 2, Q)
    assert f.degree_part(2) == parse_poly("X1^2", 2, Q)
    assert f.degree_part(1) == parse_poly("X2", 2, Q)
    assert f.degree_part(0).is_zero()
    # parts sum back to f
    total = MultiPoly.zero(Q, 2)
    for k in range(3):
        total = total + f.degree_part(k)
    assert total == f


def test_degree_law_and_neg_inf():
    assert MultiPoly.zero(Q, 2).degree == NEG_INF
    rng = random.Random(2)
    for ctx in (Q, F5, F4):
        for _ in range(80):
            f = random_poly(rng, ctx, 2, 3)
            g = random_poly(rng, ctx, 2, 3)
            assert (f * g).degree == f.degree + g.degree  # integral domain


def test_coefficient_vector_examples():
    assert [c.val for c in MultiPoly.one(Q, 2).coefficient_vector(1)] == [
        Fraction(1), Fraction(0), Fraction(0)]
    f = parse_poly("X1 + 2*X2", 2, Q)
    assert [c.val for c in f.coefficient_vector(1)] == [
        Fraction(0), Fraction(1), Fraction(2)]
    xy = parse_poly("X1*X2", 2, Q)
    assert [c.val for c in xy.coefficient_vector(2)] == [
        Fraction(0)] * 4 + [Fraction(1), Fraction(0)]


def test_coefficient_vector_roundtrip_and_linearity():
    rng = random.Random(13)
    for ctx in (Q, F5):
        for _ in range(60):
            d = rng.randrange(0, 4)
            f = random_poly(rng, ctx, 3, d)
            vec = f.coefficient_vector(4)
            back = MultiPoly.from_coefficient_vector(ctx, 3, 4, vec)
            assert back == f
            g = random_poly(rng, ctx, 3, d)
            fv = f.coefficient_vector(4)
            gv = g.coefficient_vector(4)
            sv = (f + g).coefficient_vector(4)
            assert all(a + b == s for a, b, s in zip(fv, gv, sv))


def test_coefficient_vector_degree_overflow():
    f = parse_poly("X1^3", 1, Q)
    with pytest.raises(ValueError):
        f.coefficient_vector(2)


def test_galois_apply_examples():
    f = parse_poly("X1 + [0,1]", 1, F4)  # X + t
    assert f.galois_apply(1) == parse_poly("X1 + [1,1]", 1, F4)  # X + t + 1
    g = parse_poly("X1 + 1", 1, F4)  # prime-subfield coefficients
    assert g.galois_apply(1) == g
    assert f.galois_apply(2) == f  # full Galois orbit == identity
    with pytest.raises(ValueError):
        parse_poly("X1", 1, F5).galois_apply(1)


def test_galois_apply_commutes_with_ring_ops():
    rng = random.Random(5)
    for _ in range(60):
        f = random_poly(rng, F4, 2, 2)
        g = random_poly(rng, F4, 2, 2)
        assert (f * g).galois_apply(1) == f.galois_apply(1) * g.galois_apply(1)
        assert (f + g).galois_apply(1) == f.galois_apply(1) + g.galois_apply(1)


def test_parse_examples():
    f = parse_poly("X1*X2 - 2", 2, Q)
    assert f.terms == {(1, 1): Fraction(1), (0, 0): Fraction(-2)}
    g = parse_poly("(X1+X2-1)*(X1+X2-2)", 2, Q)
    expanded = parse_poly("X1^2 + 2*X1*X2 + X2^2 - 3*X1 - 3*X2 + 2", 2, Q)
    assert g == expanded
    assert parse_poly("X1^3", 1, Q) == MultiPoly(Q, 1, {(3,): 1})


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError):
        parse_poly("X1 + + X2", 2, Q)
    with pytest.raises(PolyParseError) as err:
        parse_poly("X3 + 1", 2, Q)
    assert "X3" in str(err.value) and err.value.pos == 0
    with pytest.raises(PolyParseError):
        parse_poly("1/2", 1, FieldCtx.prime(2))
    with pytest.raises(PolyParseError):
        parse_poly("[0,1]", 1, Q)  # brackets need an extension field
    with pytest.raises(PolyParseError):
        parse_poly("X1 @ X2", 2, Q)


def test_render_parse_roundtrip():
    rng = random.Random(17)
    for ctx in (Q, F5, F4):
        for _ in range(80):
            f = random_poly(rng, ctx, 2, 3)
            assert parse_poly(f.render(), 2, ctx) == f
    assert parse_poly(MultiPoly.zero(Q, 2).render(), 2, Q).is_zero()


def test_canonical_serialization_order():
    f = parse_poly("X2^2 + X1 + 3", 2, Q)
    monos = [m for m, _ in f.iter_terms()]
    assert monos == [(0, 0), (1, 0), (0, 2)]


def test_point_equality_hash():
    p1 = Point(Q, [0, 1])
    p2 = Point(Q, [Fraction(0), Fraction(1)])
    assert p1 == p2 and hash(p1) == hash(p2)
    assert p1 != Point(Q, [1, 0])
    assert len({p1, p2}) == 1
