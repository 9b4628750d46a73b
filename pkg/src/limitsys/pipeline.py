"""Specialization of linear systems with a staircase base condition.

A type (c, E, r) stands for the systems |L| through the cluster cut out by
the staircase E along a curve with contact order r to a (-1)-curve D, where
c = L.D.  Each step replaces a type by a more special one whose regularity
implies the regularity of the original; once the staircase has height at
most two, closed-form predicates finish the argument.

All decisions are made in exact integer arithmetic.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .staircase import Staircase, e1_staircase

REGULAR = "regular"
UNDECIDED = "undecided"
HYPOTHESIS_FAILURE = "hypothesis-failure"

EXIT_CODES = {REGULAR: 0, UNDECIDED: 2, HYPOTHESIS_FAILURE: 3}


class HypothesisFailure(ValueError):
    """A named precondition of a step does not hold."""

    def __init__(self, name, detail=""):
        super().__init__(f"{name}: {detail}" if detail else name)
        self.name = name
        self.detail = detail


class BookkeepingError(RuntimeError):
    """A certificate claim failed on concrete staircases (internal error)."""


@dataclass(frozen=True)
class SystemType:
    c: int
    E: Staircase
    r: int

    def to_json(self):
        return {"c": self.c, "E": list(self.E.lengths), "r": self.r}


def _require(cond, name, detail=""):
    if not cond:
        raise HypothesisFailure(name, detail)


def contact_length(E, r):
    """Length of the cut of the cluster with D: ell(h^r) + r h^r."""
    h = E.h_r(r)
    return E.ell(h) + r * h


def is_r_gentle(E, r):
    return E.ell_hat_min() >= r + 1 or E.is_r_gentle(r)


def consistent(t):
    """c >= ell_E(h^r_E) + r h^r_E; E must be r-gentle."""
    _require(t.r >= 1, "positive contact order", f"r={t.r}")
    _require(is_r_gentle(t.E, t.r), "r-gentle", f"E={t.E} r={t.r}")
    return t.c >= contact_length(t.E, t.r)


def contains(A, B):
    """A is a subset of B as lattice sets: every stair of A is at least as long."""
    return all(A.ell(i) >= B.ell(i) for i in range(max(A.height, B.height)))


def flatten(E, tr):
    """Lower ell_hat at tr_i - 1 by one for every entry of tr."""
    hats = E.hats()
    for k in tr:
        _require(1 <= k <= len(hats) and hats[k - 1] >= 1, "slice exists", f"height {k} in {E}")
        hats[k - 1] -= 1
    return E.with_hats(hats)


@dataclass
class StepCertificate:
    kind: str
    before: SystemType
    after: SystemType
    mu: int = 0
    s: list = field(default_factory=list)
    tr: list = field(default_factory=list)
    claims: dict = field(default_factory=dict)
    observations: dict = field(default_factory=dict)
    unloading: object = None

    @property
    def ok(self):
        good = all(self.claims.values())
        if self.unloading is not None:
            good = good and self.unloading.ok
        return good

    def to_json(self):
        out = {
            "kind": self.kind,
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "mu": self.mu,
            "s": self.s,
            "tr": self.tr,
            "claims": self.claims,
            "ok": self.ok,
        }
        if self.observations:
            out["observations"] = self.observations
        if self.unloading is not None:
            out["unloading"] = self.unloading.to_json()
        return out


def step_hypotheses(t):
    """Raise HypothesisFailure unless the typed step applies to t."""
    _require(consistent(t), "consistent", f"c={t.c} < {contact_length(t.E, t.r)}")
    hr = t.E.h_r(t.r)
    _require(hr >= 2, "h^r >= 2", f"h^r={hr}")
    _require(
        t.E.ell_hat_min() >= t.r + hr + 1,
        "ell_hat_min >= r + h^r + 1",
        f"ell_hat_min={t.E.ell_hat_min()} r={t.r} h^r={hr}",
    )


def trace_sequence(t):
    """(s_i, tr_i) for i = 1..mu, plus mu."""
    E, r, c = t.E, t.r, t.c
    s, tr = [], []
    i = 1
    while True:
        si = sum(E.h(j) for j in range(r * (i - 1), r * i))
        ti = c + i - si
        if ti < 1 or E.ell(ti - 1) <= r * i:
            break
        s.append(si)
        tr.append(ti)
        i += 1
    return s, tr, len(tr)


def step(t, check=True):
    """One typed step (c, E, r) -> (c + mu, E', r + 1) with its certificate."""
    if check:
        step_hypotheses(t)
    E, r, c = t.E, t.r, t.c
    s, tr, mu = trace_sequence(t)
    if mu == 0:
        after = SystemType(c, E, r + 1)
        cert = StepCertificate("trivstep", t, after)
        cert.claims["consistent"] = consistent(after)
        return cert
    Ep = flatten(E, tr).tau(mu * r)
    # same staircase by slice deletion
    alt = E.tau(mu * r)
    for k in tr:
        alt = alt.delete_slice(k)
    if alt != Ep:
        raise BookkeepingError(f"two constructions of E' differ: {alt} vs {Ep}")
    after = SystemType(c + mu, Ep, r + 1)
    cert = StepCertificate("steptypes", t, after, mu, s, tr)
    cl = cert.claims
    cl["colength"] = E.colength() == Ep.colength() + mu * c + comb(mu + 1, 2)
    cl["sandwich"] = contains(E.tau(mu * r), Ep) and contains(Ep, E.tau(mu * (r + 1)))
    cl["length"] = Ep.ell() == E.ell() - mu * (r + 1)
    cl["stairs"] = Ep.ell_hat_min() >= E.ell_hat_min() - 1
    top = E.ell(E.height - 1)
    if top > mu * r + 1:
        # the top stair loses one more unit only when a top-height slice is deleted
        drop = mu * r + (E.height in tr)
        cl["top"] = Ep.height == E.height and Ep.ell(Ep.height - 1) == top - drop
        cert.observations["top_minus_mu_r_plus_1"] = Ep.ell(Ep.height - 1) == top - (mu * r + 1)
    else:
        cert.observations["top"] = {"height": Ep.height, "top_length": Ep.ell(Ep.height - 1)}
    cl["increasing_traces"] = all(a < b for a, b in zip(tr, tr[1:]))
    cl["r+1-gentle"] = is_r_gentle(Ep, r + 1)
    cl["consistent"] = cl["r+1-gentle"] and consistent(after)
    if not cl["colength"]:
        raise BookkeepingError(f"colength identity fails for {t}")
    cert.unloading = unloading_check(E, r, c, mu)
    return cert


# unloading


@dataclass
class UnloadingRow:
    i: int
    kind: str
    j: int
    d: list
    FE: int
    trace: int

    @property
    def ok(self):
        return self.FE < self.trace


@dataclass
class UnloadingReport:
    m: list
    rows: list

    @property
    def ok(self):
        return all(row.ok for row in self.rows)

    def to_json(self):
        return {
            "m": self.m,
            "ok": self.ok,
            "rows": [
                {"i": w.i, "kind": w.kind, "j": w.j, "d": w.d, "FE": w.FE, "trace": w.trace, "ok": w.ok}
                for w in self.rows
            ],
        }


def block_sizes(E, r, mu):
    """m_i = min(r, ri - l_{i-1}, l_i - ri) with l_i = ell_E(h_E(ri) - 1), kept in [1, r]."""
    def l(i):
        return 0 if i == 0 else E.ell(E.h(r * i) - 1)

    return [max(1, min(r, r * i - l(i - 1), l(i) - r * i)) for i in range(1, mu + 1)]


def _d(E, r, i, j, nj):
    hj = E.h(j * r)
    if E.h(r * (j - 1)) == hj:
        k0 = 0
    else:
        k0 = E.ell(E.h(r * (j - 1)) - 1) - r * (j - 1)
    off = i - (nj + j + 1)
    return [hj if k - k0 <= off else hj - 1 for k in range(r)]


def unloading_check(E, r, c, mu=None):
    """Compare F_i . E_i with the trace at every position of the residual sequence."""
    if mu is None:
        mu = trace_sequence(SystemType(c, E, r))[2]
    m = block_sizes(E, r, mu)
    n = [0]
    for mj in m:
        n.append(n[-1] + mj - 1)
    rows = []
    for j in range(1, mu + 1):
        start = n[j - 1] + j
        # the start of block j lies at the end of the range of block j - 1
        d = [E.h(k) for k in range(r)] if j == 1 else _d(E, r, start, j - 1, n[j - 2])
        rows.append(UnloadingRow(start, "y", j, d, c + j, c + j + 1))
        for i in range(start + 1, start + m[j - 1]):
            d = _d(E, r, i, j, n[j - 1])
            rows.append(UnloadingRow(i, "x", j, d, E.h(j * r) - 1, E.h(i - j)))
    return UnloadingReport(m, rows)


# height two


def _two(l0, l1):
    return Staircase([max(l0, 0), max(l1, 0)])


def height2_step(c, E, s):
    """One step of the height-two descent; returns the new type."""
    _require(E.height <= 2, "height <= 2", str(E))
    _require(c == 2 * s, "c = 2s", f"c={c} s={s}")
    _require(E.ell_hat(0) >= s + 2, "ell_hat(0) >= s + 2", str(E))
    _require(E.ell(1) >= s, "ell(1) >= s", str(E))
    _require(consistent(SystemType(c, E, s)), "consistent input", str(E))
    if E.ell(1) <= 2 * s - 2:
        out = SystemType(c + 1, _two(E.ell() - s - 1, E.ell(1) - s), s + 1)
    else:
        out = SystemType(c + 2, _two(E.ell() - 2 * s - 2, E.ell(1) - 2 * s - 1), s + 1)
    if not consistent(out):
        raise BookkeepingError(f"height-two step produced an inconsistent type {out}")
    return out


def kstep(c, E, s, k):
    """k - 1 height-two steps of the second kind at once."""
    _require(k >= 1, "k >= 1", str(k))
    _require(E.height <= 2, "height <= 2", str(E))
    _require(E.ell_hat(0) >= s + 2 * k - 2, "ell_hat(0) >= s + 2k - 2", str(E))
    _require(E.ell() >= (2 * s + k) * (k - 1), "ell >= (2s+k)(k-1)", str(E))
    _require(E.ell(1) >= (2 * s + k - 1) * (k - 1), "ell(1) >= (2s+k-1)(k-1)", str(E))
    if k == 1:
        return SystemType(c, E, s)
    Ek = _two(E.ell() - (2 * s + k) * (k - 1), E.ell(1) - (2 * s + k - 1) * (k - 1))
    return SystemType(c + 2 * (k - 1), Ek, s + k - 1)


def bottom_predicate(c, E):
    _require(E.height <= 2, "height <= 2", str(E))
    return E.ell() > c and 2 * E.ell(1) <= c


def regheight2_predicate(c, E):
    """ell_hat(0) + c/2 > 1 + 3 sqrt(ell(1) + c^2/4), decided by squaring."""
    _require(E.height <= 2, "height <= 2", str(E))
    A = 2 * E.ell_hat(0) + c - 2
    return A > 0 and A * A > 9 * (4 * E.ell(1) + c * c)


def goesto2_check(n, e, r):
    """4r^2 + 2r + e(2en - 3e - n) <= sqrt(3) e (n-1)(2e-1)."""
    A = 4 * r * r + 2 * r + e * (2 * e * n - 3 * e - n)
    B = e * (n - 1) * (2 * e - 1)
    return A <= 0 or A * A <= 3 * B * B


def _gt_sqrt(a, b):
    """a > 3 sqrt(b) for rationals a, b >= 0."""
    return a > 0 and a * a > 9 * b


def goal2_holds(n, e, lhat0, scale=10**6):
    """The sufficient inequality in lhat0, n, e, with sqrt(n) bracketed by rationals.

    The difference of the two sides increases with sqrt(n), so a lower
    bracket that satisfies it proves it and an upper bracket that fails
    refutes it; otherwise the bracket is refined.
    """
    def holds(root):
        lhs = lhat0 + (2 * e * root - 1) / 4 - 1
        inner = Fraction(n, 2) * comb(e + 1, 2) - Fraction(lhat0, 2) - (2 * e * root - 1) / 8
        return inner < 0 or _gt_sqrt(lhs, inner)

    while True:
        lo = Fraction(isqrt(n * scale * scale), scale)
        hi = lo if lo * lo == n else lo + Fraction(1, scale)
        if holds(lo):
            return True
        if not holds(hi):
            return False
        scale *= 1000


# the decision


@dataclass
class Verdict:
    status: str
    n: int
    e: int
    chain: list = field(default_factory=list)
    final: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def to_json(self):
        return {
            "status": self.status,
            "n": self.n,
            "e": self.e,
            "degrees": "all" if self.status == REGULAR else None,
            "chain": [c.to_json() for c in self.chain],
            "final": self.final,
            "detail": self.detail,
        }


def initial_type(n, e):
    return SystemType(e, e1_staircase(n, e), 1)


def run_steps(n, e, stop_height=None, max_r=None):
    """Iterate typed steps from the initial type.

    Stops when the height reaches stop_height, when r reaches max_r, or when
    the step hypotheses fail.  Returns (types, certificates, failure).
    """
    t = initial_type(n, e)
    types, certs = [t], []
    while True:
        if stop_height is not None and t.E.height <= stop_height:
            return types, certs, None
        if max_r is not None and t.r >= max_r:
            return types, certs, None
        try:
            cert = step(t)
        except HypothesisFailure as exc:
            return types, certs, exc
        certs.append(cert)
        t = cert.after
        types.append(t)


def decide_regular(n, e):
    """Regularity of general systems through n points of multiplicity e, in all degrees."""
    if e <= 2 or n < 4 * e * e:
        return Verdict(HYPOTHESIS_FAILURE, n, e, detail="need e > 2 and n >= 4e^2")
    types, certs, failure = run_steps(n, e, stop_height=2)
    if failure is not None:
        return Verdict(UNDECIDED, n, e, certs, detail=f"step at r={types[-1].r}: {failure}")
    bad = next((c for c in certs if not c.ok), None)
    if bad is not None:
        return Verdict(UNDECIDED, n, e, certs, detail=f"certificate at r={bad.before.r} failed")
    t = types[-1]
    bottom = bottom_predicate(t.c, t.E)
    reg2 = t.E.height == 2 and regheight2_predicate(t.c, t.E)
    final = {
        "type": t.to_json(),
        "consistent": consistent(t),
        "bottom": bottom,
        "regheight2": reg2,
        "goal2": goal2_holds(n, e, n - t.r),
        "ineqlast": goesto2_check(n, e, t.r - 1),
        "lhat0_bound": t.E.ell_hat(0) >= n - t.r,
    }
    if final["consistent"] and (bottom or reg2):
        return Verdict(REGULAR, n, e, certs, final)
    return Verdict(UNDECIDED, n, e, certs, final, detail="final predicate fails")


@dataclass
class RminReport:
    n: int
    e: int
    r: int
    r_max: int
    mus: list
    claims: dict

    @property
    def ok(self):
        return all(self.claims.values())

    def to_json(self):
        return {"n": self.n, "e": self.e, "r": self.r, "r_max": self.r_max,
                "mu": self.mus, "claims": self.claims, "ok": self.ok}


def rmin_checks(n, e, r):
    """Check the bounds on E_r and the mu sequence against a concrete run."""
    types, certs, failure = run_steps(n, e, max_r=r)
    mus = [c.mu for c in certs]
    if failure is None:
        # continue until the hypotheses fail to locate r_max
        more_types, _, _ = run_steps(n, e, max_r=max(r, 2 * n))
        r_max = more_types[-1].r
    else:
        r_max = types[-1].r
    claims = {}
    E1 = types[0].E
    if r <= r_max:
        Er = types[r - 1].E
        M = sum(mus[: min(r - 1, r_max)])
        drop = E1.colength() - Er.colength()
        claims["ell_hat_min"] = Er.ell_hat_min() >= n - r
        claims["height"] = (r - 1) * (r + 2) * e >= 2 * (n - 1) * (e - Er.height)
        claims["codim"] = drop == e * M + comb(M + 1, 2)
        if comb(r, 2) * e + r >= n - 1:
            claims["big_codim"] = 2 * drop >= e * (n - 1)
    if comb(r, 2) * e + r < n - 1:
        claims["small_r_defined"] = r <= r_max
        claims["small_r_mu"] = all(mu == e for mu in mus[: r - 1]) and len(mus) >= r - 1
    return RminReport(n, e, r, r_max, mus, claims)
