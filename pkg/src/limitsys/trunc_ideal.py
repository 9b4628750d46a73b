"""Ideals of finite-dimensional quotients of k[x, y, t] over a prime field.

Every algebra here has a linear basis and knows how to multiply basis
elements by polynomials in x, y, t.  Two kinds are provided:

* MonomialAlgebra: the basis is a finite order ideal of monomials in some
  native coordinates (u, v, w); products that leave the set vanish.  The
  truncated ring k[x, y, t]/((x, y)^Nxy, t^Pt) is the case u, v, w = x, y, t.
* QuotientAlgebra: the quotient of another algebra by one of its ideals,
  with the non-pivot columns of the ideal's echelon form as basis.

An Ideal is a subspace in canonical reduced echelon form that is stable
under multiplication.  For an ideal J of the underlying polynomial ring
with A = k[x, y, t]/J, ideals of A are the ideals of the ring containing J,
and dim A/K is the colength of the corresponding ideal.
"""

from itertools import product

import numpy as np

from .exactalg import PRIME, as_ffmatrix, mulmod, nullspace, rref, rref_extend

VARS = ("x", "y", "t")


def monomial_key(e):
    """Order by (x, y)-degree, then x before y, then t-degree."""
    a, b, c = e
    return (a + b, -a, c)


class Poly:
    """Polynomial in three variables over F_p, stored as {exponent: coefficient}."""

    __slots__ = ("terms", "p", "names")

    def __init__(self, terms=None, p=PRIME, names=VARS):
        self.p = p
        self.names = names
        clean = {}
        for e, c in (terms or {}).items():
            c %= p
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def var(cls, name, p=PRIME, names=VARS):
        e = [0, 0, 0]
        e[names.index(name)] = 1
        return cls({tuple(e): 1}, p, names)

    @classmethod
    def const(cls, c, p=PRIME, names=VARS):
        return cls({(0, 0, 0): c}, p, names)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        return Poly.const(int(other), self.p, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.p, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.p, self.names)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = (out.get(e, 0) + c1 * c2) % self.p
        return Poly(out, self.p, self.names)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.p, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        return self.terms.get(tuple(e), 0)

    def xy_order(self):
        """Lowest (x, y)-degree among the terms."""
        return min(a + b for a, b, _ in self.terms) if self.terms else None

    def subs(self, images):
        """Substitute a Poly for each variable (images in variable order)."""
        p = images[0].p
        out = Poly({}, p, images[0].names)
        powers = [{0: Poly.const(1, p, images[0].names)} for _ in range(3)]

        def power(k, n):
            cache = powers[k]
            if n not in cache:
                cache[n] = power(k, n - 1) * images[k]
            return cache[n]

        for e, c in self.terms.items():
            out = out + power(0, e[0]) * power(1, e[1]) * power(2, e[2]) * c
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        half = self.p // 2
        parts = []
        for e in sorted(self.terms, key=monomial_key):
            c = self.terms[e]
            c = c - self.p if c > half else c
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


def variables(p=PRIME):
    return tuple(Poly.var(n, p) for n in VARS)


def parameter_coords(f):
    """Express x, y, t in coordinates (x, f, t) for f = b*y + g(x, t), b != 0.

    Raises ValueError when f is not of that shape or has a constant term,
    which is when {x, f, t} fails to be a usable system of parameters here.
    """
    p = f.p
    b = f.coeff((0, 1, 0))
    if b == 0 or f.coeff((0, 0, 0)):
        raise ValueError(f"{f} does not complete x, t to a system of parameters")
    if any(e[1] and e != (0, 1, 0) for e in f.terms):
        raise ValueError(f"{f} must be linear in y with constant coefficient")
    names = ("x", "f", "t")
    u, v, w = (Poly.var(n, p, names) for n in names)
    rest = Poly({e: c for e, c in f.terms.items() if e != (0, 1, 0)}, p)
    inv = pow(b, p - 2, p)
    y_image = (v - rest.subs((u, v, w))) * inv
    return (u, y_image, w), names


class Algebra:
    """Common interface: dim, p, labels and multiplication by polynomials.

    grading, when not None, gives the degree of each basis element for a
    grading in which x, y and t all have degree 1.
    """

    p = PRIME
    grading = None

    def _set_grading(self, grading):
        self.grading = grading
        self._blocks = {}
        self._colon_memo = {}
        self._image_memo = {}
        if grading is not None:
            self._position = np.zeros(len(grading), dtype=np.int64)
            for d in np.unique(grading).tolist():
                idx = np.flatnonzero(grading == d)
                self._blocks[d] = idx
                self._position[idx] = np.arange(len(idx))

    def block_images(self, poly, d, e):
        """Products of the degree-d basis elements with poly (of degree e), on degree d + e."""
        src = self.block(d)
        E = np.zeros((len(src), self.dim), dtype=np.int64)
        E[np.arange(len(src)), src] = 1
        return self.right(E, poly)[:, self.block(d + e)]

    def poly_degree(self, poly):
        """Degree of poly as an element of a graded algebra, -1 for zero, None if inhomogeneous."""
        if self.grading is None:
            return None
        v = self.vector(poly)
        deg = self.row_degrees(v[None, :])
        return None if deg is None else int(deg[0])

    def block(self, d):
        """Basis indices of degree d (empty outside the grading range)."""
        return self._blocks.get(d, np.zeros(0, dtype=np.int64))

    def row_degrees(self, rows):
        """Degree of each nonzero row, or None if some row is not homogeneous."""
        if self.grading is None:
            return None
        nz = rows != 0
        keep = nz.any(axis=1)
        g = self.grading[None, :]
        lo = np.where(nz, g, np.iinfo(np.int64).max).min(axis=1)
        hi = np.where(nz, g, -1).max(axis=1)
        if np.any(lo[keep] != hi[keep]):
            return None
        return np.where(keep, lo, -1)

    def right(self, rows, poly):
        """Products of the elements in `rows` with poly, as rows."""
        raise NotImplementedError

    def left(self, poly, mat):
        """L_poly @ mat, where row b of L_poly is the product e_b * poly."""
        raise NotImplementedError

    def mult_matrix(self, poly):
        return self.right(np.eye(self.dim, dtype=np.int64), poly)

    def vector(self, poly):
        return self.right(self.one_vector()[None, :], poly)[0]

    def var(self, name):
        return Poly.var(name, self.p)


class MonomialAlgebra(Algebra):
    """Span of a finite order ideal of monomials in native coordinates.

    images[k] is the native polynomial standing for x, y, t respectively.
    """

    def __init__(self, exponents, p=PRIME, images=None, names=VARS):
        self.p = p
        self.names = names
        self.exponents = list(exponents)
        self.index = {e: i for i, e in enumerate(self.exponents)}
        if (0, 0, 0) not in self.index:
            raise ValueError("basis must contain 1")
        self.dim = len(self.exponents)
        self.exp_array = np.array(self.exponents, dtype=np.int64).reshape(-1, 3)
        self.images = images or tuple(Poly.var(n, p, names) for n in names)
        self._shift_cache = {}
        self._native_cache = {}
        linear = all(
            q.terms and all(sum(e) == 1 for e in q.terms) for q in self.images
        )
        self._set_grading(self.exp_array.sum(axis=1) if linear else None)

    @property
    def labels(self):
        return [
            "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k) or "1"
            for e in self.exponents
        ]

    def one_vector(self):
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index[(0, 0, 0)]] = 1
        return v

    def shift(self, m):
        """Index of e * m for each basis exponent e, or -1 when it vanishes."""
        m = tuple(m)
        if m not in self._shift_cache:
            target = self.exp_array + np.array(m, dtype=np.int64)
            self._shift_cache[m] = np.array(
                [self.index.get(tuple(r), -1) for r in target.tolist()], dtype=np.int64
            )
        return self._shift_cache[m]

    def native(self, poly):
        """Rewrite a polynomial in x, y, t in the native coordinates."""
        if poly.names == self.names and self.images is None:
            return poly
        if poly not in self._native_cache:
            self._native_cache[poly] = poly.subs(self.images)
        return self._native_cache[poly]

    def _terms(self, poly, native):
        q = poly if native else self.native(poly)
        return [(e, c) for e, c in q.terms.items()]

    def right(self, rows, poly, native=False):
        rows = np.atleast_2d(rows)
        out = np.zeros_like(rows)
        for e, c in self._terms(poly, native):
            tgt = self.shift(e)
            ok = tgt >= 0
            out[:, tgt[ok]] += c * rows[:, ok]
            out %= self.p
        return out

    def left(self, poly, mat, native=False):
        out = np.zeros((self.dim, mat.shape[1]), dtype=np.int64)
        for e, c in self._terms(poly, native):
            tgt = self.shift(e)
            ok = np.flatnonzero(tgt >= 0)
            out[ok] += c * mat[tgt[ok]]
            out %= self.p
        return out

    def block_images(self, poly, d, e):
        src, tgt = self.block(d), self.block(d + e)
        out = np.zeros((len(src), len(tgt)), dtype=np.int64)
        if not len(tgt):
            return out
        for m, c in self._terms(poly, False):
            dest = self.shift(m)[src]
            ok = np.flatnonzero(dest >= 0)
            out[ok, self._position[dest[ok]]] += c
        return out % self.p

    def t_depth(self):
        return int(self.exp_array[:, 2].max()) + 1

    def xy_degree(self):
        return int((self.exp_array[:, 0] + self.exp_array[:, 1]).max()) + 1


class TruncRing(MonomialAlgebra):
    """k[x, y, t]/((x, y)^Nxy, t^Pt) with the fixed monomial order."""

    def __init__(self, Nxy, Pt, p=PRIME):
        if Nxy < 1 or Pt < 1:
            raise ValueError("truncation orders must be positive")
        exps = [
            (a, d - a, c) for d in range(Nxy) for a in range(d, -1, -1) for c in range(Pt)
        ]
        exps.sort(key=monomial_key)
        super().__init__(exps, p)
        self.images = None
        self.Nxy = Nxy
        self.Pt = Pt

    def native(self, poly):
        return poly

    def __repr__(self):
        return f"TruncRing(Nxy={self.Nxy}, Pt={self.Pt})"


class QuotientAlgebra(Algebra):
    """parent / ideal, with basis the non-pivot columns of the ideal."""

    def __init__(self, ideal):
        parent = ideal.algebra
        self.parent = parent
        self.ideal = ideal
        self.p = parent.p
        pivset = set(ideal.pivots)
        self.std = [i for i in range(parent.dim) if i not in pivset]
        self.dim = len(self.std)
        self._mult_cache = {}
        homogeneous = parent.grading is not None and ideal.blocks() is not None
        self._set_grading(parent.grading[self.std] if homogeneous else None)

    @property
    def labels(self):
        plabels = self.parent.labels
        return [plabels[i] for i in self.std]

    def reduce(self, rows):
        """Normal form of parent rows, expressed in the quotient basis."""
        rows = np.atleast_2d(rows)
        R, piv = self.ideal.rows, self.ideal.pivots
        if piv:
            rows = (rows - mulmod(rows[:, piv], R, self.p)) % self.p
        return rows[:, self.std]

    def lift(self, rows):
        out = np.zeros((np.atleast_2d(rows).shape[0], self.parent.dim), dtype=np.int64)
        out[:, self.std] = rows
        return out

    def one_vector(self):
        return self.reduce(self.parent.one_vector())[0]

    def mult_matrix(self, poly):
        if poly not in self._mult_cache:
            if len(self._mult_cache) > 64:
                self._mult_cache.clear()
            basis = np.zeros((self.dim, self.parent.dim), dtype=np.int64)
            basis[np.arange(self.dim), self.std] = 1
            self._mult_cache[poly] = self.reduce(self.parent.right(basis, poly))
        return self._mult_cache[poly]

    def right(self, rows, poly):
        return mulmod(np.atleast_2d(rows), self.mult_matrix(poly), self.p)

    def block_images(self, poly, d, e):
        key = (poly, d)
        if key not in self._image_memo:
            self._image_memo[key] = self.mult_matrix(poly)[np.ix_(self.block(d), self.block(d + e))]
        return self._image_memo[key]

    def left(self, poly, mat):
        return mulmod(self.mult_matrix(poly), mat, self.p)

    def t_depth(self):
        return self.parent.t_depth()


def _merge_blocks(alg, old, new):
    """Blockwise echelon form of old + new; both map degree -> (rows, local pivots)."""
    out = dict(old)
    for d, B in new.items():
        if not B.shape[0]:
            continue
        R, piv = old.get(d, (None, []))
        n = len(alg.block(d))
        if len(piv) == n:
            continue
        if R is None:
            R = np.zeros((0, n), dtype=np.int64)
        Rn, pn = rref_extend(R, piv, B, alg.p)
        if len(pn) != len(piv):
            out[d] = (Rn, list(pn))
    return out


class Ideal:
    """Subspace of an algebra in canonical reduced echelon form.

    In a graded algebra a homogeneous ideal is kept as one echelon block per
    degree; the global rows and pivots are assembled on demand.
    """

    __slots__ = ("algebra", "_rows", "_pivots", "_blocks")

    def __init__(self, algebra, rows=None, pivots=None, blocks=None):
        self.algebra = algebra
        self._rows = rows
        self._pivots = None if pivots is None else list(pivots)
        self._blocks = blocks

    @classmethod
    def zero(cls, algebra):
        if algebra.grading is not None:
            return cls(algebra, blocks={})
        return cls(algebra, np.zeros((0, algebra.dim), dtype=np.int64), [])

    @classmethod
    def whole(cls, algebra):
        return cls(algebra, np.eye(algebra.dim, dtype=np.int64), list(range(algebra.dim)))

    @classmethod
    def span(cls, algebra, rows):
        return cls.zero(algebra)._extend(rows)

    @classmethod
    def generated(cls, algebra, gens):
        out = cls.zero(algebra)
        return out.plus(*gens)

    def _assemble(self):
        alg = self.algebra
        items = sorted((d, b) for d, b in self._blocks.items() if len(b[1]))
        parts, piv = [], []
        for d, (R, lp) in items:
            cols = alg.block(d)
            full = np.zeros((len(lp), alg.dim), dtype=np.int64)
            full[:, cols] = R
            parts.append(full)
            piv.extend(cols[lp].tolist())
        rows = np.vstack(parts) if parts else np.zeros((0, alg.dim), dtype=np.int64)
        order = np.argsort(piv, kind="stable")
        self._rows = rows[order]
        self._pivots = [piv[i] for i in order]

    @property
    def rows(self):
        if self._rows is None:
            self._assemble()
        return self._rows

    @property
    def pivots(self):
        if self._pivots is None:
            self._assemble()
        return self._pivots

    def blocks(self):
        """Per-degree echelon blocks, or None for an inhomogeneous ideal."""
        if self._blocks is None:
            alg = self.algebra
            if alg.grading is None or alg.row_degrees(self._rows) is None:
                self._blocks = False
            else:
                piv = np.asarray(self._pivots, dtype=np.int64)
                deg = alg.grading[piv]
                out = {}
                for d in np.unique(deg).tolist():
                    sel = np.flatnonzero(deg == d)
                    cols = alg.block(d)
                    out[d] = (self._rows[sel][:, cols], alg._position[piv[sel]].tolist())
                self._blocks = out
        return None if self._blocks is False else self._blocks

    @property
    def dim(self):
        if self._pivots is not None:
            return len(self._pivots)
        return sum(len(b[1]) for b in self._blocks.values())

    def colength(self):
        return self.algebra.dim - self.dim

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("ideals live in different rings")

    def _extend(self, rows):
        alg = self.algebra
        rows = as_ffmatrix(rows, alg.p).reshape(-1, alg.dim)
        if rows.shape[0] == 0:
            return self
        blocks = self.blocks()
        if blocks is not None:
            degs = alg.row_degrees(rows)
            if degs is not None:
                new = {d: rows[degs == d][:, alg.block(d)] for d in np.unique(degs[degs >= 0]).tolist()}
                return Ideal(alg, blocks=_merge_blocks(alg, blocks, new))
        R, piv = rref_extend(self.rows, self.pivots, rows, alg.p)
        return Ideal(alg, R, piv)

    def plus(self, *polys):
        """self + (polys)."""
        alg = self.algebra
        out = self
        for g in polys:
            if out.dim == alg.dim:
                break
            e = alg.poly_degree(g)
            blocks = out.blocks() if e is not None else None
            if blocks is None:
                out = out._extend(alg.mult_matrix(g))
            elif e >= 0:
                new = {d + e: alg.block_images(g, d, e) for d in alg._blocks if len(alg.block(d + e))}
                out = Ideal(alg, blocks=_merge_blocks(alg, blocks, new))
        return out

    def __add__(self, other):
        self._check(other)
        if other.dim > self.dim:
            return other._extend(self.rows)
        return self._extend(other.rows)

    def free(self):
        pivset = set(self.pivots)
        return [i for i in range(self.algebra.dim) if i not in pivset]

    def complement_map(self):
        """Matrix Q with v @ Q the coordinates of v modulo self."""
        free = self.free()
        Q = np.zeros((self.algebra.dim, len(free)), dtype=np.int64)
        Q[free, np.arange(len(free))] = 1
        if self.pivots and free:
            Q[self.pivots] = (-self.rows[:, free]) % self.algebra.p
        return Q

    def reduce(self, rows):
        """Coordinates of the given rows modulo self."""
        rows = np.atleast_2d(rows)
        if self.pivots:
            rows = (rows - mulmod(rows[:, self.pivots], self.rows, self.algebra.p)) % self.algebra.p
        return rows[:, self.free()]

    def _graded_colon(self, poly):
        alg = self.algebra
        e = alg.poly_degree(poly)
        blocks = self.blocks()
        if e is None or blocks is None:
            return None
        if e < 0:
            return Ideal.whole(alg)
        out = {}
        memo = alg._colon_memo
        for d, src in alg._blocks.items():
            n_tgt = len(alg.block(d + e))
            R, local = blocks.get(d + e, (None, []))
            if len(local) == n_tgt:
                out[d] = (np.eye(len(src), dtype=np.int64), list(range(len(src))))
                continue
            key = (poly, d, tuple(local), None if R is None else R.tobytes())
            if key not in memo:
                mask = np.ones(n_tgt, dtype=bool)
                mask[local] = False
                free = np.flatnonzero(mask)
                img = alg.block_images(poly, d, e)
                M = img[:, free]
                if len(local):
                    M = (M - mulmod(img[:, local], R[:, free], alg.p)) % alg.p
                K = nullspace(M.T, alg.p)
                memo[key] = rref(K, alg.p) if K.shape[0] else None
            if memo[key] is not None:
                out[d] = memo[key]
        return Ideal(alg, blocks=out)

    def colon(self, poly):
        """{g : g * poly in self}, as the preimage under multiplication."""
        if self.dim == self.algebra.dim:
            return self
        if self.algebra.grading is not None:
            out = self._graded_colon(poly)
            if out is not None:
                return out
        Q = self.complement_map()
        M = self.algebra.left(poly, Q)
        K = nullspace(M.T, self.algebra.p)
        return Ideal.span(self.algebra, K)

    def contains(self, poly):
        return not self.reduce(self.algebra.vector(poly)).any()

    def issubset(self, other):
        self._check(other)
        if self.dim > other.dim:
            return False
        return not self.dim or other._extend(self.rows).dim == other.dim

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.algebra is not self.algebra:
            return False
        if self.dim != other.dim:
            return False
        a, b = self.blocks(), other.blocks()
        if a is not None and b is not None:
            keys = {d for d, v in a.items() if v[1]} | {d for d, v in b.items() if v[1]}
            return all(
                d in a and d in b and a[d][1] == b[d][1] and np.array_equal(a[d][0], b[d][0])
                for d in keys
            )
        return self.pivots == other.pivots and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((id(self.algebra), tuple(self.pivots), self.rows.tobytes()))

    def is_closed(self):
        """Stable under multiplication by x, y and t."""
        if not self.dim:
            return True
        alg = self.algebra
        return all(self._extend(alg.right(self.rows, alg.var(n))).dim == self.dim for n in VARS)

    def set_t_zero(self):
        """I + (t); ideals containing t stand for ideals of the (x, y) ring."""
        return self.plus(self.algebra.var("t"))

    def dump(self):
        """One basis element per line, terms in the basis order."""
        labels = self.algebra.labels
        half = self.algebra.p // 2
        lines = []
        for row in self.rows:
            terms = []
            for j in np.flatnonzero(row):
                c = int(row[j])
                c = c - self.algebra.p if c > half else c
                terms.append(labels[j] if c == 1 else f"{c}*{labels[j]}")
            lines.append(" + ".join(terms).replace("+ -", "- "))
        return "\n".join(lines)

    def __repr__(self):
        return f"Ideal(dim={self.dim}, colength={self.colength()})"


def ideal_from_generators(ring, gens):
    return Ideal.generated(ring, gens)


def ideal_sum(I, J):
    return I + J


def ideal_plus_poly(I, f):
    return I.plus(f)


def colon(I, f):
    return I.colon(f)


def set_t_zero(I):
    return I.set_t_zero()


def power_ideal_gens(gens, k):
    """Generators of (gens)^k."""
    out = []
    seen = set()
    n = len(gens)
    for combo in product(range(n), repeat=k):
        key = tuple(sorted(combo))
        if key in seen:
            continue
        seen.add(key)
        g = Poly.const(1, gens[0].p)
        for i in key:
            g = g * gens[i]
        out.append(g)
    return out


def xy_power_gens(k, p=PRIME):
    """Monomial generators of (x, y)^k."""
    return [Poly({(a, k - a, 0): 1}, p) for a in range(k + 1)]


def contains_xy_power(ideal, k):
    """Whether every monomial of (x, y)-degree k (times any t-power) lies in the ideal."""
    alg = ideal.algebra
    return all(ideal.contains(g) for g in xy_power_gens(k, alg.p))


def exact_quotient(gens, Pt, Nxy=None, p=PRIME, max_Nxy=64):
    """The algebra k[[x, y, t]]/((gens) + (t^Pt)) together with its window.

    The window k[x, y, t]/((x, y)^N, t^Pt) is enlarged until the image of
    the ideal contains (x, y)^(N-1); by Nakayama the ideal then contains
    (x, y)^(N-1) in the power series ring, so the quotient of the window is
    the exact local quotient.  Returns (QuotientAlgebra, window ideal).
    """
    if Nxy is None:
        Nxy = max(2, max(sum(e) for g in gens for e in g.terms) + 1)
    while Nxy <= max_Nxy:
        ring = TruncRing(Nxy, Pt, p)
        J = Ideal.generated(ring, list(gens) + [Poly.var("t", p) ** Pt])
        if contains_xy_power(J, Nxy - 1):
            return QuotientAlgebra(J), J
        Nxy += 2
    raise ValueError("ideal is not primary to the maximal ideal within the window limit")


def dominant_ideal(I, f):
    """Ideal generated by dominant parts with respect to parameters (x, f, t).

    I is an ideal of a TruncRing; the result lives in the same window
    written in coordinates (x, f, t).  Dominant parts are the lowest
    t-order homogeneous pieces of the members of I.
    """
    ring = I.algebra
    if not isinstance(ring, TruncRing):
        raise TypeError("dominant parts are computed in a truncated ring")
    images, names = parameter_coords(f)
    target = MonomialAlgebra(ring.exponents, ring.p, names=names)
    target.images = images
    # change of basis: row i is the native expansion of basis monomial i
    T = np.zeros((ring.dim, target.dim), dtype=np.int64)
    for i, e in enumerate(ring.exponents):
        q = Poly({e: 1}, ring.p).subs(images)
        for m, c in q.terms.items():
            j = target.index.get(m)
            if j is not None:
                T[i, j] = c
    rows = mulmod(I.rows, T, ring.p) if I.dim else I.rows
    order = sorted(range(target.dim), key=lambda j: (target.exponents[j][2], j))
    R, piv = rref(rows[:, order], ring.p)
    back = np.empty_like(R)
    back[:, order] = R
    leads = np.zeros_like(back)
    tdeg = target.exp_array[:, 2]
    for k, pc in enumerate(piv):
        s = target.exponents[order[pc]][2]
        leads[k, tdeg == s] = back[k, tdeg == s]
    out = Ideal.zero(target)
    gens = []
    for row in leads:
        gens.append(Poly({target.exponents[j]: int(row[j]) for j in np.flatnonzero(row)}, ring.p, names))
    span = np.vstack([target.right(np.eye(target.dim, dtype=np.int64), g, native=True) for g in gens]) if gens else np.zeros((0, target.dim), dtype=np.int64)
    return out._extend(span) if gens else out


def native_ideal(algebra, native_gens):
    """Ideal of a monomial algebra generated by polynomials in its native coordinates."""
    eye = np.eye(algebra.dim, dtype=np.int64)
    rows = [algebra.right(eye, g, native=True) for g in native_gens]
    if not rows:
        return Ideal.zero(algebra)
    return Ideal.span(algebra, np.vstack(rows))
