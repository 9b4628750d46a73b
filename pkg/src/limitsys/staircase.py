"""Staircases in the lattice quadrant, stored by their stair lengths.

A staircase E is the set {(e1, e2) : e1 >= ell(e2)} for a non-increasing
sequence of lengths; its finite complement lists the standard monomials
x^e1 f^e2 of the associated monomial ideal.
"""

import math
from functools import total_ordering


@total_ordering
class Staircase:
    """Immutable staircase given by stair lengths ell(0) >= ell(1) >= ... > 0."""

    __slots__ = ("lengths",)

    def __init__(self, lengths=()):
        lengths = tuple(int(v) for v in lengths)
        while lengths and lengths[-1] == 0:
            lengths = lengths[:-1]
        if any(v <= 0 for v in lengths):
            raise ValueError(f"stair lengths must be positive: {lengths}")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"stair lengths must be non-increasing: {lengths}")
        object.__setattr__(self, "lengths", lengths)

    def __setattr__(self, name, value):
        raise AttributeError("Staircase is immutable")

    @classmethod
    def parse(cls, text):
        """Build from comma-separated lengths, e.g. "12,9,6,3"."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(v) for v in text.split(","))

    def __str__(self):
        return ",".join(map(str, self.lengths))

    def __repr__(self):
        return f"Staircase({list(self.lengths)})"

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.lengths == other.lengths

    def __lt__(self, other):
        return self.lengths < other.lengths

    def __hash__(self):
        return hash(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def ell(self, i=0):
        """Length of the i-th stair (zero above the top)."""
        return self.lengths[i] if i < len(self.lengths) else 0

    def h(self, i=0):
        """Height of the i-th slice: the number of stairs longer than i."""
        return sum(1 for v in self.lengths if v > i)

    @property
    def height(self):
        return len(self.lengths)

    def ell_hat(self, i):
        return self.ell(i) - self.ell(i + 1)

    def hats(self):
        """First differences ell_hat(0), ..., ell_hat(h-1)."""
        return [self.ell_hat(i) for i in range(self.height)]

    def colength(self):
        return sum(self.lengths)

    def ell_hat_min(self):
        """Minimum of ell_hat below the top stair; infinite when h <= 1."""
        if self.height <= 1:
            return math.inf
        return min(self.ell_hat(i) for i in range(self.height - 1))

    def complement(self):
        """The standard exponents (e1, e2) not in E."""
        return [(a, b) for b, v in enumerate(self.lengths) for a in range(v)]

    def corners(self):
        """Minimal generators (e1, e2) of E, one per jump in the lengths."""
        out = []
        for b in range(self.height + 1):
            if b == 0 or self.ell(b) < self.ell(b - 1):
                out.append((self.ell(b), b))
        return out

    def contains(self, e1, e2):
        return e1 >= self.ell(e2)

    def is_gentle(self):
        """Column heights drop by at most one from each column to the next."""
        return all(self.h(i) <= self.h(i + 1) + 1 for i in range(self.ell()))

    def h_r(self, r):
        """The least i with ell_hat(i) <= r."""
        i = 0
        while self.ell_hat(i) > r:
            i += 1
        return i

    def is_r_gentle(self, r):
        """ell_hat is non-increasing from h_r onwards."""
        start = self.h_r(r)
        return all(self.ell_hat(i) >= self.ell_hat(i + 1) for i in range(start, self.height))

    def tau(self, i):
        """Horizontal translation: lengths max(ell - i, 0)."""
        if i < 0:
            raise ValueError("translation must be non-negative")
        return Staircase(max(v - i, 0) for v in self.lengths)

    def delete_slice(self, k):
        """Remove one complement column of height exactly k."""
        if k < 1 or self.ell_hat(k - 1) < 1:
            raise ValueError(f"no column of height {k} in {self!r}")
        return Staircase(v - 1 if j < k else v for j, v in enumerate(self.lengths))

    def with_hats(self, hats):
        """Staircase whose first differences are the given list."""
        lengths = []
        acc = 0
        for d in reversed(hats):
            acc += d
            lengths.append(acc)
        return Staircase(reversed(lengths))

    def tilde(self, r):
        """Clamp every ell_hat below the top stair down by r, keeping the top stair."""
        if self.height == 0:
            return self
        hats = [max(d - r, 0) for d in self.hats()[:-1]] + [self.ell(self.height - 1)]
        return self.with_hats(hats)

    def render(self):
        """Text picture of the complement, top stair first."""
        return "\n".join("#" * v for v in reversed(self.lengths))


def e1_staircase(n, e):
    """Staircase of height e with every ell_hat equal to n - 1."""
    if n < 2 or e < 1:
        raise ValueError("need n >= 2 and e >= 1")
    return Staircase((n - 1) * (e - i) for i in range(e))
