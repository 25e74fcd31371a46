import random
from fractions import Fraction

import pytest

from idealgen.fields import FieldCtx, make_extension
from idealgen.linalg import (Matrix, SingularMatrixError, det, invert,
                             nullspace, rank_profile, solve, solve_many)
from idealgen.polys import parse_poly
from helpers import lagrange_coeffs, random_element, vandermonde_det_1var

Q = FieldCtx.rational()
F2 = FieldCtx.prime(2)
F5 = FieldCtx.prime(5)
F4 = make_extension(2, 2)


def _random_matrix(rng, ctx, rows, cols):
    return Matrix.from_elements(
        ctx, [[random_element(rng, ctx) for _ in range(cols)] for _ in range(rows)])


def test_rank_profile_examples():
    assert rank_profile(Matrix.from_elements(F2, [[1, 1], [1, 1]])) == (1, [0])
    assert rank_profile(Matrix.identity(Q, 2)) == (2, [0, 1])
    # coefficient vectors of {X, 2X, X+Y, Y} at d=1: greedy scan is forced
    gens = [parse_poly(s, 2, Q) for s in ("X1", "2*X1", "X1+X2", "X2")]
    rows = [g.coefficient_vector(1) for g in gens]
    assert rank_profile(Matrix.from_elements(Q, rows)) == (2, [0, 2])


def test_rank_profile_pivot_stability():
    # permuting non-pivot rows below all pivots does not change pivot_rows
    rows = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [2, 1, 0]]
    base = rank_profile(Matrix.from_elements(Q, rows))
    shuffled = rows[:2] + [rows[4], rows[2], rows[3]]
    assert rank_profile(Matrix.from_elements(Q, shuffled)) == base == (2, [0, 1])


def test_det_examples():
    assert det(Matrix.identity(Q, 3)) == Q.one()
    v = Matrix.from_elements(Q, [[1, 0], [1, 1]])
    assert det(v) == Q.one()
    v3 = Matrix.from_elements(Q, [[1, 0, 0], [1, 1, 1], [1, 2, 4]])
    assert det(v3).val == vandermonde_det_1var([0, 1, 2]) == 2


def test_det_fractional_entries():
    m = Matrix.from_elements(Q, [[Fraction(1, 2), Fraction(1, 3)],
                                 [Fraction(1, 5), Fraction(1, 7)]])
    assert det(m).val == Fraction(1, 14) - Fraction(1, 15)


def test_det_nonsquare_rejected():
    with pytest.raises(ValueError):
        det(Matrix.from_elements(Q, [[1, 2]]))


def test_solve_examples():
    assert [x.val for x in solve(Matrix.identity(Q, 2), [3, 4])] == [3, 4]
    m = Matrix.from_elements(Q, [[1, 0], [1, 1]])
    assert [x.val for x in solve(m, [0, 1])] == [0, 1]
    # Lagrange interpolation oracle: coefficients of x(x-1)/2
    v = Matrix.from_elements(Q, [[1, 0, 0], [1, 1, 1], [1, 2, 4]])
    got = [x.val for x in solve(v, [0, 0, 1])]
    assert got == lagrange_coeffs([0, 1, 2], 2)
    assert got == [Fraction(0), Fraction(-1, 2), Fraction(1, 2)]


def test_solve_singular():
    with pytest.raises(SingularMatrixError):
        solve(Matrix.from_elements(Q, [[1, 1], [1, 1]]), [1, 0])


def test_nullspace_examples():
    assert nullspace(Matrix.identity(Q, 3)) == []
    ns = nullspace(Matrix.from_elements(F2, [[1, 1]]))
    assert [[x.val for x in v] for v in ns] == [[1, 1]]
    empty = Matrix(Q, 0, 3, [])
    basis = nullspace(empty)
    assert [[x.val for x in v] for v in basis] == [
        [1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("ctx", [Q, F5, F4])
def test_randomized_invariants(ctx):
    rng = random.Random(23)
    for _ in range(40):
        r = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        m = _random_matrix(rng, ctx, r, c)
        rank, _ = rank_profile(m)
        rank_t, _ = rank_profile(m.transpose())
        assert rank == rank_t
        for v in nullspace(m):
            for i in range(r):
                acc = ctx.zero()
                for j in range(c):
                    acc = acc + m.entry(i, j) * v[j]
                assert acc.is_zero()
        assert len(nullspace(m)) == c - rank
        if r == c:
            d = det(m)
            assert (not d.is_zero()) == (rank == r)
            if not d.is_zero():
                b = [random_element(rng, ctx) for _ in range(r)]
                x = solve(m, b)
                for i in range(r):
                    acc = ctx.zero()
                    for j in range(r):
                        acc = acc + m.entry(i, j) * x[j]
                    assert acc == ctx.element(b[i])


def test_det_bareiss_agrees_with_gauss_over_gf():
    # same matrices read over Q (Bareiss path) and F5 (Gaussian path)
    rng = random.Random(31)
    for _ in range(50):
        n = rng.randrange(1, 5)
        ints = [[rng.randrange(0, 5) for _ in range(n)] for _ in range(n)]
        dq = det(Matrix.from_elements(Q, ints)).val
        d5 = det(Matrix.from_elements(F5, ints)).val
        assert dq.denominator == 1 and dq.numerator % 5 == d5


def test_invert_and_solve_many():
    rng = random.Random(37)
    for ctx in (Q, F5):
        for _ in range(20):
            n = rng.randrange(1, 5)
            m = _random_matrix(rng, ctx, n, n)
            rank, _ = rank_profile(m)
            if rank < n:
                continue
            inv = invert(m)
            for i in range(n):
                for j in range(n):
                    acc = ctx.zero()
                    for k in range(n):
                        acc = acc + m.entry(i, k) * inv.entry(k, j)
                    assert acc == (ctx.one() if i == j else ctx.zero())


def test_solve_many_singular():
    with pytest.raises(SingularMatrixError):
        solve_many(Matrix.from_elements(Q, [[0, 0], [0, 0]]), Matrix.identity(Q, 2))
