import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycomb.exact_arith import (
    DimensionError,
    IntPoly,
    ResourceError,
    affine_rank,
    det,
    det_sum_decomposition_check,
    poly_derivative,
    poly_eval,
    rank,
)
from polycomb.oracles import det_cofactor


def square_matrices(max_n=5, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def fraction_rank(m):
    a = [[Fraction(v) for v in row] for row in m]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def test_det_identity():
    assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1


def test_det_vandermonde():
    assert det([[1, t, t * t] for t in (1, 2, 3)]) == 2


def test_det_frozen_random_4x4():
    # seeded draw from [-9, 9]; value from the cofactor-expansion oracle
    m = [[-5, 8, 7, 4], [8, 0, 5, -4], [-6, 9, 7, -2], [7, -1, -8, -4]]
    assert det(m) == 4742


def test_det_needs_row_swap():
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det([[1, 2, 3], [4, 5, 6]])


def test_det_big_entries():
    big = 2**200
    assert det([[big, 1], [1, big]]) == big * big - 1


@given(square_matrices())
def test_det_matches_cofactor(m):
    assert det(m) == det_cofactor(m)


@given(square_matrices(max_n=6), st.data())
def test_det_equal_rows_is_zero(m, data):
    if len(m) < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, len(m) - 1), min_size=2, max_size=2, unique=True))
    m[j] = list(m[i])
    assert det(m) == 0


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_rational_elimination(m):
    assert rank(m) == fraction_rank(m)


def test_affine_rank():
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert affine_rank([(5, 5)]) == 0


class TestDetSum:
    def test_one_by_one(self):
        assert det_sum_decomposition_check([[1]], [[1]])

    def test_zero_matrix(self):
        b = [[2, -1, 0], [3, 3, 1], [0, 4, -2]]
        assert det_sum_decomposition_check([[0] * 3] * 3, b)

    def test_random_3x3(self):
        rng = random.Random(3)
        for _ in range(10):
            a = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            b = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            assert det_sum_decomposition_check(a, b)

    def test_size_mismatch(self):
        with pytest.raises(DimensionError):
            det_sum_decomposition_check([[1]], [[1, 0], [0, 1]])

    def test_cap(self):
        n = 13
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        with pytest.raises(ResourceError):
            det_sum_decomposition_check(eye, eye)

    @given(square_matrices(max_n=6), st.randoms(use_true_random=False))
    def test_holds_for_random_pairs(self, a, rnd):
        n = len(a)
        b = [[rnd.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_sum_decomposition_check(a, b)


def test_poly_eval_examples():
    assert poly_eval(IntPoly(), 5) == 0
    assert poly_eval(IntPoly((0, 6, -1)), 3) == 9
    assert poly_eval(IntPoly((0, 1, 1, 1)), 2) == 14


def test_poly_degree():
    assert IntPoly().degree == -1
    assert IntPoly((0, 0, 0)).degree == -1
    assert IntPoly((0, 3, 0)).degree == 1


def test_second_derivative_of_cubic():
    c1, c2, c3 = 7, -4, 5
    p = IntPoly((0, c1, c2, c3))
    assert poly_derivative(p, 2).coeffs == (2 * c2, 6 * c3)


def test_derivative_edge_cases():
    p = IntPoly((0, 0, 0, 0, 1))
    assert poly_derivative(p, 0) is p
    assert poly_derivative(p, 5).degree == -1
    with pytest.raises(ValueError):
        poly_derivative(p, -1)


@given(st.lists(st.integers(-50, 50), max_size=8), st.integers(-30, 30))
def test_derivatives_reproduce_unit_step(coeffs, t):
    # exact Taylor expansion: f(t+1) - f(t) = sum_k f^(k)(t) / k!
    p = IntPoly(tuple(coeffs))
    total = sum(Fraction(poly_eval(poly_derivative(p, k), t), factorial(k)) for k in range(1, len(coeffs) + 1))
    assert total == poly_eval(p, t + 1) - poly_eval(p, t)
