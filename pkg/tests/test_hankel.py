from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from limitsys.hankel import (
    HankelSpec,
    binom,
    det_poly,
    divisibility_holds,
    divisors,
    eq2_applies,
    eq2_matrix,
    eq2_trivial_solution,
    hankel_det,
    hankel_matrix,
    is_invertible,
    sweep,
)

from conftest import det_rational, rank_rational


def test_matrix_examples():
    assert hankel_matrix(HankelSpec(2, 1, 1)) == [[1, 2], [2, 1]]
    assert hankel_matrix(HankelSpec(2, 2, 1)) == [[2, 1], [1, 0]]
    assert hankel_matrix(HankelSpec(7, 3, 0)) == [[35]]


def test_invertibility_examples():
    assert hankel_det(HankelSpec(2, 2, 1)) == -1
    assert is_invertible(HankelSpec(2, 2, 1))
    assert all(is_invertible(HankelSpec(e, r, 0)) for e in range(6) for r in range(e + 1))


def test_binom_outside_range():
    assert binom(4, -1) == 0 and binom(4, 5) == 0 and binom(4, 2) == 6


def test_exhaustive_sweep():
    rows = list(sweep(12))
    assert len(rows) == sum(comb(e + 1, 2) for e in range(1, 13))
    assert all(det != 0 for *_, det in rows)


def test_sweep_lower_bound():
    assert {e for e, *_ in sweep(6, min_e=4)} == {4, 5, 6}


@given(st.integers(1, 9).flatmap(lambda e: st.tuples(st.just(e), st.integers(1, e))).flatmap(
    lambda er: st.tuples(st.just(er[0]), st.just(er[1]), st.integers(0, er[1]))
))
def test_det_matches_fractions_and_is_symmetric(ern):
    M = hankel_matrix(HankelSpec(*ern))
    assert M == [list(col) for col in zip(*M)]
    assert hankel_det(HankelSpec(*ern)) == det_rational(M)


@pytest.mark.parametrize("r,n", [(r, n) for r in range(1, 5) for n in range(1, r + 1)])
def test_polynomial_divisibility(r, n):
    assert divisibility_holds(r, n)


def test_det_polynomial_value():
    # det [[e(e-1)/2, e], [e, 1]] = -e^2 (e^2 - 1) / 12
    assert det_poly(2, 1) == [0, 0, Fraction(1, 12), 0, Fraction(-1, 12)]


def test_divisors_at_integer_points():
    assert divisors(HankelSpec(2, 1, 1)) == (2, 3)
    # P(e) is a product of binomials, so it vanishes exactly when some factor does
    assert divisors(HankelSpec(1, 2, 1))[0] == 0


def test_eq2_examples():
    assert eq2_applies(4, 4, 0, 0)
    assert eq2_matrix(4, 4, 0, 0) == [[4], [6], [4]]
    assert eq2_trivial_solution(4, 4, 0, 0)
    for i in range(5):
        for r in range(5):
            if i + r < 5 // 2 and r < 5 - i - 1:
                assert eq2_trivial_solution(5, 5, i, r)


def test_eq2_out_of_range_is_false():
    assert not eq2_trivial_solution(4, 4, 0, 3)
    assert not eq2_trivial_solution(4, 4, 5, 0)


@given(st.integers(2, 9), st.integers(2, 9), st.integers(0, 8), st.integers(0, 8))
def test_eq2_in_range_has_trivial_kernel(e, p, i, r):
    # the system only arises for truncation depth p <= e + 1
    if p <= e + 1 and i <= e - 1 and r < p - i - 1 and eq2_applies(e, p, i, r):
        M = eq2_matrix(e, p, i, r)
        assert rank_rational(M) == r + 1
        assert eq2_trivial_solution(e, p, i, r)
