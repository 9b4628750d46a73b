import numpy as np
from hypothesis import given, settings, strategies as st

from limitsys.exactalg import (
    PRIME,
    bigint_det,
    bigint_rank,
    ff_kernel_dim,
    ff_rank,
    mulmod,
    nullspace,
    rref,
    rref_extend,
)
from limitsys.hankel import HankelSpec, hankel_matrix

from conftest import det_rational, rank_mod_p, rank_rational

SMALL_P = 7


def matrices(max_rows=8, max_cols=8, lo=-20, hi=20):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_examples():
    assert ff_rank(np.eye(3, dtype=np.int64)) == 3
    assert ff_rank(np.zeros((4, 6), dtype=np.int64)) == 0
    assert ff_rank(hankel_matrix(HankelSpec(3, 2, 2))) == 3


def test_kernel_examples():
    assert ff_kernel_dim(np.eye(3, dtype=np.int64)) == 0
    assert ff_kernel_dim(np.zeros((2, 5), dtype=np.int64)) == 5


def test_det_examples():
    assert bigint_det([[1, 0], [0, 1]]) == 1
    assert bigint_det([[2, 1], [1, 0]]) == -1
    assert bigint_det([[10]]) == 10
    assert bigint_det([]) == 1


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_reference_small_prime(m):
    assert ff_rank(m, SMALL_P) == rank_mod_p(m, SMALL_P)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_transpose(m):
    a = np.array(m)
    assert ff_rank(a, SMALL_P) == ff_rank(a.T, SMALL_P)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_nullspace_is_kernel(m):
    a = np.array(m) % SMALL_P
    K = nullspace(a, SMALL_P)
    assert K.shape[0] == ff_kernel_dim(a, SMALL_P)
    if K.size:
        assert not (a @ K.T % SMALL_P).any()


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rref_canonical(m):
    a = np.array(m) % SMALL_P
    R, piv = rref(a, SMALL_P)
    # reduced: pivot columns form the identity
    assert np.array_equal(R[:, piv], np.eye(len(piv), dtype=np.int64))
    # same row space: stacking adds no rank
    assert rank_mod_p(np.vstack([R, a]).tolist(), SMALL_P) == len(piv)
    # shuffling the rows does not change the echelon form
    R2, piv2 = rref(a[::-1], SMALL_P)
    assert piv2 == piv and np.array_equal(R, R2)


@settings(max_examples=30, deadline=None)
@given(matrices(), matrices())
def test_extend_equals_rref_of_stack(m1, m2):
    a = np.array(m1) % SMALL_P
    b = np.array(m2) % SMALL_P
    if a.shape[1] != b.shape[1]:
        b = np.resize(b, (b.shape[0], a.shape[1]))
    R, piv = rref(a, SMALL_P)
    R2, piv2 = rref_extend(R, piv, b, SMALL_P)
    R3, piv3 = rref(np.vstack([a, b]), SMALL_P)
    assert piv2 == piv3 and np.array_equal(R2, R3)


def test_recursive_elimination_on_tall_matrix():
    rng = np.random.default_rng(1)
    a = rng.integers(0, PRIME, size=(300, 40))
    a[:, 7] = (a[:, 3] * 5 + a[:, 11]) % PRIME
    assert ff_rank(a) == 39
    R, piv = rref(a)
    assert np.array_equal(R, rref(a[rng.permutation(300)])[0])


def test_mulmod_is_exact():
    rng = np.random.default_rng(2)
    a = rng.integers(0, PRIME, size=(5, 9000))
    b = rng.integers(0, PRIME, size=(9000, 4))
    ref = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(9000)) % PRIME for j in range(4)] for i in range(5)]
    assert mulmod(a, b).tolist() == ref


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_fractions(m):
    assert bigint_det(m) == det_rational(m)


@settings(max_examples=60, deadline=None)
@given(matrices(6, 6, -5, 5))
def test_bigint_rank_matches_fractions(m):
    assert bigint_rank(m) == rank_rational(m)
