"""Exact linear algebra over prime fields and over the integers.

Matrices over F_p are numpy int64 arrays with entries in [0, p).  Row
reduction is recursive on row blocks so that the bulk of the work is a
handful of dense products; these are evaluated in float64, which is exact
as long as every partial sum stays below 2**53.
"""

import numpy as np
from numba import njit

PRIME = 1000003

_BASE_ROWS = 96
# p**2 * _MAX_INNER must stay below 2**53
_MAX_INNER = 8000


def as_ffmatrix(m, p=PRIME):
    """Return m as a two-dimensional int64 array reduced modulo p."""
    if isinstance(m, np.ndarray) and m.dtype.kind in "iu":
        a = m % p
    else:
        a = np.array(m, dtype=object)
        if a.size:
            a = a % p
    a = np.asarray(a, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    return a


def mulmod(a, b, p=PRIME):
    """Matrix product a @ b modulo p for reduced int64 inputs."""
    k = a.shape[1]
    if k == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    out = None
    for s in range(0, k, _MAX_INNER):
        part = a[:, s:s + _MAX_INNER].astype(np.float64) @ b[s:s + _MAX_INNER].astype(np.float64)
        part = np.fmod(part, p).astype(np.int64)
        out = part if out is None else (out + part) % p
    return out


@njit(cache=True)
def _gauss_jordan(a, p):
    """In-place reduced echelon form; returns the pivot columns."""
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = r
        while i < rows and a[i, c] == 0:
            i += 1
        if i == rows:
            continue
        if i != r:
            for j in range(c, cols):
                a[r, j], a[i, j] = a[i, j], a[r, j]
        # inverse by Fermat
        inv, base, e = 1, a[r, c], p - 2
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        for k in range(rows):
            f = a[k, c]
            if k != r and f:
                for j in range(c, cols):
                    a[k, j] = (a[k, j] - f * a[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


def _rref_small(a, p):
    a = np.ascontiguousarray(a, dtype=np.int64).copy()
    piv = _gauss_jordan(a, p)
    return a[: len(piv)], piv.tolist()


def _extend(R, piv, B, p):
    if len(piv) and B.shape[0]:
        B = (B - mulmod(B[:, piv], R, p)) % p
    R2, piv2 = _rref(B, p)
    if not piv2:
        return R, piv
    if len(piv):
        R = (R - mulmod(R[:, piv2], R2, p)) % p
    allrows = np.vstack([R, R2])
    allpiv = list(piv) + list(piv2)
    order = np.argsort(allpiv, kind="stable")
    return allrows[order], [allpiv[i] for i in order]


def _rref(a, p):
    rows = a.shape[0]
    if rows <= _BASE_ROWS:
        return _rref_small(a, p)
    half = rows // 2
    R, piv = _rref(a[:half], p)
    return _extend(R, piv, a[half:], p)


def rref(m, p=PRIME):
    """Reduced row echelon form: returns (nonzero rows, pivot columns).

    Pivots are the first nonzero column of each row, so the result is the
    canonical basis of the row space.
    """
    a = as_ffmatrix(m, p)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64), []
    return _rref(a, p)


def rref_extend(R, piv, rows, p=PRIME):
    """Row-reduce the span of an existing echelon basis plus extra rows."""
    rows = as_ffmatrix(rows, p)
    if rows.shape[0] == 0:
        return R, list(piv)
    if R.shape[0] == 0:
        return rref(rows, p)
    return _extend(R, list(piv), rows, p)


def ff_rank(m, p=PRIME):
    """Rank of m over the field with p elements."""
    return len(rref(m, p)[1])


def ff_kernel_dim(m, p=PRIME):
    """Dimension of the right kernel of m, i.e. cols - rank."""
    a = as_ffmatrix(m, p)
    return a.shape[1] - ff_rank(a, p)


def nullspace(m, p=PRIME):
    """Basis (as rows) of the right kernel {v : m v = 0}."""
    a = as_ffmatrix(m, p)
    n = a.shape[1]
    R, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
    if piv and free:
        out[:, piv] = (-R[:, free].T) % p
    return out


def bigint_det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[int(v) for v in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bigint_rank(m):
    """Rank over the rationals by fraction-free elimination."""
    a = [[int(v) for v in row] for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) // prev
            a[i][c] = 0
        prev = a[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank
