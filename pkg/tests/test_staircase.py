import math

import pytest
from hypothesis import given, strategies as st

from limitsys.staircase import Staircase, e1_staircase

FIG = Staircase([12, 9, 6, 3])  # e1 + 3 e2 >= 12


@st.composite
def staircases(draw, max_height=6, max_len=15):
    lengths = draw(st.lists(st.integers(1, max_len), min_size=0, max_size=max_height))
    return Staircase(sorted(lengths, reverse=True))


def test_figure_staircase():
    assert FIG.colength() == 30
    assert FIG.height == 4
    assert [FIG.ell_hat(i) for i in range(4)] == [3, 3, 3, 3]
    assert FIG.ell_hat_min() == 3
    assert FIG.is_gentle()
    assert FIG.h_r(1) == 4 and FIG.h_r(3) == 0
    assert FIG.tau(3) == Staircase([9, 6, 3])
    assert FIG.tau(FIG.ell()) == Staircase()
    assert FIG.delete_slice(4) == Staircase([11, 8, 5, 2])
    assert FIG.delete_slice(4).colength() == 26


def test_small_cases():
    box = Staircase([1])
    assert box.colength() == 1 and box.height == 1
    assert Staircase([5, 1]).is_gentle()
    assert Staircase([2, 1]).delete_slice(1) == Staircase([1, 1])
    assert Staircase([1]).delete_slice(1) == Staircase()
    assert Staircase().colength() == 0
    assert Staircase([3]).ell_hat_min() == math.inf


def test_e1():
    assert e1_staircase(16, 2) == Staircase([30, 15])
    assert e1_staircase(16, 2).colength() == 45
    assert e1_staircase(36, 3) == Staircase([105, 70, 35])
    assert e1_staircase(36, 3).colength() == 210
    assert e1_staircase(2, 1) == Staircase([1])


@pytest.mark.parametrize("n,e", [(16, 2), (36, 3), (64, 4), (10, 5)])
def test_e1_bookkeeping(n, e):
    E = e1_staircase(n, e)
    assert E.colength() + math.comb(e + 1, 2) == n * math.comb(e + 1, 2)
    assert all(E.ell_hat(i) == n - 1 for i in range(e))


def test_tilde():
    assert FIG.tilde(0) == FIG
    assert FIG.tilde(3) == Staircase([3, 3, 3, 3])
    assert Staircase([30, 20, 10]).tilde(3) == Staircase([24, 17, 10])


def test_invalid():
    with pytest.raises(ValueError):
        Staircase([1, 2])
    with pytest.raises(ValueError):
        FIG.delete_slice(5)
    with pytest.raises(ValueError):
        FIG.tau(-1)


def test_parse_and_render():
    assert Staircase.parse("12,9,6,3") == FIG
    assert Staircase.parse("") == Staircase()
    assert Staircase([3, 1]).render() == "#\n###"


@given(staircases())
def test_complement_matches_lattice(E):
    box = 20
    inside = {(a, b) for a in range(box) for b in range(box) if not E.contains(a, b)}
    assert inside == set(E.complement())
    assert len(inside) == E.colength()


@given(staircases())
def test_closed_upwards(E):
    for a, b in E.corners():
        assert E.contains(a, b)
        assert E.contains(a + 1, b) and E.contains(a, b + 1)
    # corners are exactly the minimal elements
    minimal = [
        (a, b)
        for a in range(E.ell() + 1)
        for b in range(E.height + 1)
        if E.contains(a, b) and not (a and E.contains(a - 1, b)) and not (b and E.contains(a, b - 1))
    ]
    assert sorted(minimal) == sorted(E.corners())


@given(staircases(), st.integers(0, 20))
def test_tau_shifts_complement(E, i):
    moved = {(a - i, b) for a, b in E.complement() if a >= i}
    assert set(E.tau(i).complement()) == moved


@given(staircases())
def test_h_counts_columns(E):
    for i in range(E.ell() + 1):
        assert E.h(i) == sum(1 for a, b in E.complement() if a == i)


@given(staircases(), st.integers(1, 6))
def test_delete_slice_removes_one_column(E, k):
    heights = [E.h(i) for i in range(E.ell())]
    if k not in heights:
        with pytest.raises(ValueError):
            E.delete_slice(k)
        return
    F = E.delete_slice(k)
    after = [F.h(i) for i in range(F.ell())]
    heights.remove(k)
    assert sorted(after) == sorted(heights)
    assert F.colength() == E.colength() - k


@given(staircases(), st.integers(0, 5))
def test_rkr_remark(E, r):
    if E.ell_hat_min() >= r + 1:
        assert E.is_r_gentle(r)


@given(staircases(), st.integers(1, 5))
def test_r_gentle_implies_lower(E, r):
    if E.is_r_gentle(r):
        assert E.is_r_gentle(r - 1)


@given(staircases())
def test_with_hats_roundtrip(E):
    assert E.with_hats(E.hats()) == E
