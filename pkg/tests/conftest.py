"""Slow, obviously-correct reference implementations used as test oracles."""

from fractions import Fraction

import pytest


def rank_mod_p(rows, p):
    """Plain Gaussian elimination on lists of ints."""
    a = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], p - 2, p)
        a[rank] = [v * inv % p for v in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(u - f * w) % p for u, w in zip(a[i], a[rank])]
        rank += 1
    return rank


def rank_rational(rows):
    a = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, len(a)):
            f = a[i][c] / a[rank][c]
            a[i] = [u - f * w for u, w in zip(a[i], a[rank])]
        rank += 1
    return rank


def det_rational(rows):
    a = [[Fraction(v) for v in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [u - f * w for u, w in zip(a[i], a[c])]
    assert det.denominator == 1
    return int(det)


@pytest.fixture
def oracles():
    return {"rank_mod_p": rank_mod_p, "rank_rational": rank_rational, "det_rational": det_rational}
