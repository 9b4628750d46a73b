"""Binomial Hankel matrices and the binomial linear systems they control."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactalg import bigint_det, bigint_rank


def binom(n, k):
    """Binomial coefficient, zero outside 0 <= k <= n (n >= 0)."""
    return comb(n, k) if 0 <= k <= n else 0


@dataclass(frozen=True)
class HankelSpec:
    e: int
    r: int
    n: int

    def in_range(self):
        return self.e >= self.r >= self.n >= 1


def hankel_matrix(spec):
    """(n+1) x (n+1) matrix with entry (i, j) = binom(e, r - n + i + j)."""
    e, r, n = spec.e, spec.r, spec.n
    return [[binom(e, r - n + i + j) for j in range(n + 1)] for i in range(n + 1)]


def hankel_det(spec):
    return bigint_det(hankel_matrix(spec))


def is_invertible(spec):
    return hankel_det(spec) != 0


def divisors(spec):
    """P(e) = prod binom(e, r-n+i) and Q(e) = prod binom(e+i, r-n+i), i = 0..n."""
    e, r, n = spec.e, spec.r, spec.n
    P = Q = 1
    for i in range(n + 1):
        P *= binom(e, r - n + i)
        Q *= binom(e + i, r - n + i)
    return P, Q


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    return [u + v for u, v in zip(a, list(b) + [Fraction(0)] * (n - len(b)))]


def _compose_shift(a, s):
    """a(e + s)."""
    out, power = [Fraction(0)], [Fraction(1)]
    for c in a:
        out = _padd(out, [c * v for v in power])
        power = _pmul(power, [Fraction(s), Fraction(1)])
    return out


def _prem(a, b):
    """Remainder of a modulo b (coefficient lists, lowest degree first)."""
    a = list(a)
    while len(a) >= len(b) and any(a):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, v in enumerate(b):
            a[shift + j] -= c * v
        a.pop()
    return a


def binom_poly(k):
    """binom(e, k) as a polynomial in e."""
    if k < 0:
        return [Fraction(0)]
    out = [Fraction(1)]
    for a in range(k):
        out = _pmul(out, [Fraction(-a, a + 1), Fraction(1, a + 1)])
    return out


def det_poly(r, n):
    """det H_{r,n}(e) as a polynomial in e, interpolated at e = 0..r(n+1)."""
    deg = r * (n + 1)
    values = [Fraction(hankel_det(HankelSpec(e, r, n))) for e in range(deg + 1)]
    # Newton forward differences
    coeffs = []
    diffs = values
    while diffs:
        coeffs.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    out = [Fraction(0)]
    for k, c in enumerate(coeffs):
        out = _padd(out, [c * v for v in binom_poly(k)])
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def divisibility_holds(r, n):
    """det H_{r,n}(e) is divisible in Q[e] by P(e) and by Q(e).

    P(e) = prod binom(e, r-n+i) and Q(e) = prod binom(e+i, r-n+i), i = 0..n.
    """
    det = det_poly(r, n)
    P = [Fraction(1)]
    Q = [Fraction(1)]
    for i in range(n + 1):
        P = _pmul(P, binom_poly(r - n + i))
        Q = _pmul(Q, _compose_shift(binom_poly(r - n + i), i))
    return not any(_prem(det, P)) and not any(_prem(det, Q))


def eq2_matrix(e, p, i, r):
    """Coefficients of the system in the unknowns a_{i,r-s,s}, s = 0..r.

    Row rho (for rho = 0..p-2-i-r) has entries binom(e, e-p+1+rho+s).
    """
    return [[binom(e, e - p + 1 + rho + s) for s in range(r + 1)] for rho in range(p - 1 - i - r)]


def eq2_applies(e, p, i, r):
    """The range in which the system is claimed to have only the trivial solution."""
    return e - i - 1 - r - (e - p + 1) >= r


def eq2_trivial_solution(e, p, i, r):
    """Whether the system has only the zero solution over the rationals."""
    if not (0 <= i <= e - 1 and 0 <= r < p - i - 1):
        return False
    M = eq2_matrix(e, p, i, r)
    return bigint_rank(M) == r + 1


def sweep(max_e, min_e=1):
    """Rows (e, r, n, det) for all e >= r >= n >= 1 with min_e <= e <= max_e."""
    for e in range(min_e, max_e + 1):
        for r in range(1, e + 1):
            for n in range(1, r + 1):
                yield e, r, n, hankel_det(HankelSpec(e, r, n))
