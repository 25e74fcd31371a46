import pytest

from idealgen.fields import FieldCtx, make_extension
from idealgen.univariate import (UniPoly, count_irreducibles, cumulative_count,
                                 enumerate_irreducibles, extremal_degrees,
                                 extremal_set, mobius,
                                 verify_univariate_minimality)
from helpers import brute_force_irreducibles

F2 = FieldCtx.prime(2)


def test_mobius_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_count_examples():
    assert count_irreducibles(2, 1) == 2  # X, X+1
    assert count_irreducibles(2, 3) == 2  # (2^3 - 2)/3
    assert count_irreducibles(3, 2) == 3  # (3^2 - 3)/2
    assert cumulative_count(2, 2) == 3
    assert cumulative_count(2, 4) == 8
    assert cumulative_count(2, 1) == 2
    with pytest.raises(ValueError):
        count_irreducibles(6, 2)


@pytest.mark.parametrize("q,maxdeg", [(2, 6), (3, 6)])
def test_counts_match_brute_force(q, maxdeg):
    oracle = brute_force_irreducibles(q, maxdeg)
    by_degree = {}
    for h in oracle:
        by_degree[len(h) - 1] = by_degree.get(len(h) - 1, 0) + 1
    for k in range(1, maxdeg + 1):
        assert count_irreducibles(q, k) == by_degree.get(k, 0)


def test_enumeration_examples_and_order():
    table = enumerate_irreducibles(2, 5)
    assert [h.render() for h in table.entries] == [
        "X", "X + 1", "X^2 + X + 1", "X^3 + X + 1", "X^3 + X^2 + 1"]
    table3 = enumerate_irreducibles(3, 3)
    assert [h.render() for h in table3.entries] == ["X", "X + 1", "X + 2"]
    assert enumerate_irreducibles(2, 0).entries == []
    # nondecreasing degree, counts cross-checked against the formula
    table = enumerate_irreducibles(2, 14)
    degs = [h.degree for h in table.entries]
    assert degs == sorted(degs)
    assert table.counts_by_degree == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6}


def test_enumeration_over_prime_power_field():
    table = enumerate_irreducibles(4, 6)
    assert all(h.is_monic() for h in table.entries)
    assert [h.degree for h in table.entries] == [1, 1, 1, 1, 2, 2]
    assert table.counts_by_degree[1] == 4  # all linear monics over F_4
    assert count_irreducibles(4, 2) == 6


def test_extremal_set_q2_d3():
    rep = extremal_set(2, 3)
    assert rep.m == 3 and rep.max_degree == 3 and not rep.degenerate
    # f_i = prod of the other two of {X, X+1, X^2+X+1}
    want = {"X^3 + 1", "X^3 + X^2 + X", "X^2 + X"}
    assert {g.render() for g in rep.generators} == want
    assert verify_univariate_minimality(rep.generators).minimal


def test_extremal_set_q5_d3():
    rep = extremal_set(5, 3)
    assert rep.m == 4
    # each generator is a product of 3 of the 4 linear polys X..X+3
    assert all(g.degree == 3 for g in rep.generators)
    assert rep.max_degree == 3
    assert verify_univariate_minimality(rep.generators).minimal


def test_extremal_q2_d100():
    m, max_degree, counts = extremal_degrees(2, 100)
    assert m == 22
    assert max_degree == 99
    assert counts == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 8}


def test_extremal_smallest_d():
    with pytest.raises(ValueError):
        extremal_degrees(2, 0)
    # h_2 is always linear, so d = 1 already gives m = 2 and the degenerate
    # m = 1 branch stays a guard rather than a reachable outcome
    rep = extremal_set(2, 1)
    assert rep.m == 2 and rep.max_degree == 1 and not rep.degenerate
    assert {g.render() for g in rep.generators} == {"X", "X + 1"}


def test_divisibility_pattern():
    # h_j divides f_i iff i != j
    rep = extremal_set(2, 10)
    table = enumerate_irreducibles(2, rep.m).entries
    for i, f in enumerate(rep.generators):
        for j, h in enumerate(table):
            assert h.divides(f) == (i != j)


def test_maximality_and_monotonicity():
    prev_m = 0
    for d in range(1, 40):
        m, max_degree, _ = extremal_degrees(2, d)
        assert max_degree <= d
        # m+1 breaks the degree budget
        degs = [h.degree for h in enumerate_irreducibles(2, m + 1).entries]
        assert sum(degs[1:]) > d
        assert m >= prev_m
        prev_m = m


def test_q_bigger_than_d_gives_d_plus_1():
    for d in range(1, 5):
        m, _, _ = extremal_degrees(7, d)
        assert m == d + 1  # all of h_1..h_{d+1} are linear when q >= d+1


def test_minimality_verdicts():
    X = UniPoly(F2, [0, 1])
    X1 = UniPoly(F2, [1, 1])
    v = verify_univariate_minimality([X, X1, X * X1])
    assert v.unit_ideal and v.redundant_index == 2 and not v.minimal
    v2 = verify_univariate_minimality([X])
    assert not v2.unit_ideal and not v2.minimal
    v3 = verify_univariate_minimality([UniPoly.one(F2)])
    assert v3.minimal
    with pytest.raises(ValueError):
        verify_univariate_minimality([])


def test_unipoly_arithmetic():
    f = UniPoly(F2, [1, 1])  # X + 1
    g = UniPoly(F2, [1, 0, 1])  # X^2 + 1 = (X+1)^2
    q, r = g.divmod(f)
    assert q == f and r.is_zero()
    assert g.gcd(f) == f
    assert f.evaluate(F2.element(1)).is_zero()
    back = UniPoly.from_multipoly(f.to_multipoly())
    assert back == f
