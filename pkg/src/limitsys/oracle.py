"""Hermite interpolation at random points over a prime field.

The matrix of the restriction map sends a plane curve of degree d to its
Taylor coefficients of order < e at each point.  Maximal rank modulo p at
one sample certifies maximal rank for general points in characteristic
zero; a deficient rank proves nothing and is reported as such.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .exactalg import PRIME, ff_rank

RETRIES = 2


@dataclass(frozen=True)
class InterpProblem:
    n: int
    e: object  # int, or one multiplicity per point
    d: int
    prime: int = PRIME
    seed: int = 0

    def multiplicities(self):
        if isinstance(self.e, int):
            return [self.e] * self.n
        mults = [int(v) for v in self.e]
        if len(mults) != self.n:
            raise ValueError("need one multiplicity per point")
        return mults

    def check(self):
        if self.n < 0 or self.d < 0:
            raise ValueError("n and d must be non-negative")
        if any(m < 0 for m in self.multiplicities()):
            raise ValueError("multiplicities must be non-negative")
        if self.prime <= self.d:
            raise ValueError(f"prime {self.prime} must exceed the degree {self.d}")
        if self.n > self.prime ** 2:
            raise ValueError(f"cannot sample {self.n} distinct points over F_{self.prime}")


def expected_rows(n, e):
    return n * comb(e + 1, 2)


def expected_cols(d):
    return comb(d + 2, 2)


def virtual_dim(n, e, d):
    """d(d+3)/2 minus the conditions imposed by n points of multiplicity e."""
    return expected_cols(d) - 1 - expected_rows(n, e)


def sample_points(n, prime, rng):
    """n distinct points of the affine plane over F_prime."""
    seen, pts = set(), []
    while len(pts) < n:
        a, b = (int(v) for v in rng.integers(0, prime, size=2))
        if (a, b) not in seen:
            seen.add((a, b))
            pts.append((a, b))
    return pts


def _shift_table(a, d, p):
    """T[i, u] = binom(u, i) a^(u-i) mod p: coefficient of (X-a)^i in X^u."""
    T = np.zeros((d + 1, d + 1), dtype=np.int64)
    pw = [1] * (d + 1)
    for k in range(1, d + 1):
        pw[k] = pw[k - 1] * a % p
    for u in range(d + 1):
        for i in range(u + 1):
            T[i, u] = comb(u, i) * pw[u - i] % p
    return T


def monomials(d):
    return [(u, k - u) for k in range(d + 1) for u in range(k, -1, -1)]


def interp_matrix(prob, points=None):
    """Rows: Taylor coefficients of order < e at each point; columns: monomials."""
    prob.check()
    p, d = prob.prime, prob.d
    if points is None:
        points = sample_points(prob.n, p, _rng(prob.seed, d))
    mons = monomials(d)
    us = np.array([u for u, _ in mons], dtype=np.int64)
    vs = np.array([v for _, v in mons], dtype=np.int64)
    rows = []
    for (a, b), m in zip(points, prob.multiplicities()):
        X = _shift_table(a, d, p)
        Y = _shift_table(b, d, p)
        for k in range(m):
            for i in range(k, -1, -1):
                j = k - i
                if i > d or j > d:
                    rows.append(np.zeros(len(mons), dtype=np.int64))
                else:
                    rows.append(X[i, us] * Y[j, vs] % p)
    if not rows:
        return np.zeros((0, len(mons)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _rng(seed, d, attempt=0):
    return np.random.default_rng([seed, d, attempt])


@dataclass
class RankReport:
    n: int
    e: object
    d: int
    rows: int
    cols: int
    rank: int
    attempts: int = 1

    @property
    def kernel_dim(self):
        return self.cols - self.rank

    @property
    def verdict(self):
        return "regular" if self.rank == min(self.rows, self.cols) else "special-at-sample"

    @property
    def regular(self):
        return self.verdict == "regular"

    def to_json(self):
        return {
            "n": self.n,
            "e": self.e if isinstance(self.e, int) else list(self.e),
            "d": self.d,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "verdict": self.verdict,
            "attempts": self.attempts,
        }


def regularity(prob):
    """Rank of the interpolation matrix, retrying other samples if deficient."""
    prob.check()
    best = None
    for attempt in range(RETRIES + 1):
        pts = sample_points(prob.n, prob.prime, _rng(prob.seed, prob.d, attempt))
        M = interp_matrix(prob, pts)
        rank = ff_rank(M, prob.prime) if M.size else 0
        rep = RankReport(prob.n, prob.e, prob.d, M.shape[0], M.shape[1], rank, attempt + 1)
        if best is None or rep.rank > best.rank:
            best = rep
        if rep.regular:
            return rep
    best.attempts = RETRIES + 1
    return best


def sweep(n, e, d_range, prime=PRIME, seed=0):
    """One RankReport per degree."""
    return [regularity(InterpProblem(n, e, d, prime, seed)) for d in d_range]


def sweep_csv(reports):
    lines = ["n,e,d,rows,cols,rank,kernel_dim,verdict"]
    for r in reports:
        lines.append(f"{r.n},{r.e},{r.d},{r.rows},{r.cols},{r.rank},{r.kernel_dim},{r.verdict}")
    return "\n".join(lines) + "\n"
