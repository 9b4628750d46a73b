"""Translated monomial families I_E = (x^e1 f^e2 : (e1, e2) in E), f = x + y + t.

Closed formulas for their traces and residuals, the planner that builds an
exponent sequence preserving the number of conditions, and cross-checks of
all of it against the symbolic engine.
"""

from dataclasses import dataclass, field

import numpy as np

from . import limits
from .staircase import Staircase
from .trunc_ideal import Ideal, MonomialAlgebra, Poly, TruncRing, monomial_key, parameter_coords, variables


def default_f(p=None):
    x, y, t = variables() if p is None else variables(p)
    return x + y + t


def family_gens(E, f=None):
    """Corner generators x^e1 f^e2 of I_E."""
    f = default_f() if f is None else f
    x = Poly.var("x", f.p)
    return [x**a * f**b for a, b in E.corners()]


def staircase_algebra(E, P, f=None):
    """k[[x, y, t]]/(I_E + (t^P)) with the monomial basis x^a f^b t^c, (a, b) not in E."""
    f = default_f() if f is None else f
    images, names = parameter_coords(f)
    exps = sorted(((a, b, c) for a, b in E.complement() for c in range(P)), key=monomial_key)
    if not exps:
        exps = []
    return MonomialAlgebra(exps, f.p, images=images, names=names)


def family_setting(E, P, f=None):
    """The family as the zero ideal of its exact working algebra."""
    if E.height == 0:
        raise ValueError("the empty staircase gives the unit ideal")
    return Ideal.zero(staircase_algebra(E, P, f))


def family_ideal(E, ring=None, f=None, Pt=1):
    """I_E inside a truncated ring (default window Nxy = l(E) + h(E) + 2)."""
    if ring is None:
        ring = TruncRing(E.ell() + E.height + 2, Pt)
    return Ideal.generated(ring, family_gens(E, f))


def native_monomial_ideal(alg, E, extra_t=True):
    """I_E' (plus t) inside a staircase algebra, built from native monomials."""
    rows = []
    for i, (a, b, c) in enumerate(alg.exponents):
        if E.contains(a, b) or (extra_t and c > 0):
            rows.append(i)
    M = np.zeros((len(rows), alg.dim), dtype=np.int64)
    M[np.arange(len(rows)), rows] = 1
    return Ideal.span(alg, M)


def sigma(m, i):
    """Number of x entries among y_1..y_i of the block sequence."""
    if i <= 0:
        return 0
    acc, k = 0, 0
    for mj in m:
        if acc + mj <= i - 1:
            acc += mj
            k += 1
        else:
            break
    return i - 1 - k


def y_seq(m, length=None):
    """Names of the concatenated blocks (y, x, ..., x) of lengths m."""
    out = []
    for mj in m:
        out.append("y")
        out.extend("x" * (mj - 1))
    return out[:length] if length is not None else out


def y_polys(names, p=None):
    x, y, _ = variables() if p is None else variables(p)
    return [y if n == "y" else x for n in names]


def colon_formula(E, m, i):
    return E.tau(sigma(m, i))


def trace_formula_x(E):
    """x-trace: the ideal (y^h(E), x)/(x), of colength h(E)."""
    h = E.height
    return f"(y^{h}, x)", h


def trace_formula_y(E, p):
    """y-trace colength h_E(p - 1) and, when p is a stair length, the residual staircase."""
    if not E.is_gentle():
        raise ValueError(f"{E!r} is not gentle")
    tr = E.h(p - 1)
    if p not in E.lengths:
        raise ValueError(f"{p} is not a stair length of {E!r}")
    return tr, E.delete_slice(tr)


@dataclass
class PlanFailure:
    hypothesis: int
    index: int
    detail: str

    def to_json(self):
        return {"hypothesis": self.hypothesis, "index": self.index, "inequality": self.detail}


@dataclass
class StcresPlan:
    E: Staircase
    tr: list
    m: list
    p: list
    traces: list
    E_prime: Staircase
    ys: list = field(default_factory=list)

    def to_json(self):
        return {"p": self.p, "traces": self.traces, "E_prime": str(self.E_prime)}


def _n(m):
    """n_j = sum over j' < j of (m_j' - 1), for j = 1..mu+1 (index 0 is n_1)."""
    out = [0]
    for mj in m:
        out.append(out[-1] + mj - 1)
    return out


def stcres_hypotheses(E, tr, m):
    """PlanFailure records for gentleness (0) and the four numerical hypotheses."""
    mu = len(tr)
    n = _n(m)
    fails = []
    if not E.is_gentle():
        fails.append(PlanFailure(0, 0, "staircase is not gentle"))
    for i in range(1, mu):
        a = tr[i - 1]
        if E.ell_hat(a - 1) < a + 1:
            fails.append(PlanFailure(1, i, f"ell_hat({a - 1}) = {E.ell_hat(a - 1)} < {a + 1}"))
    for i in range(1, mu):
        a, b = tr[i - 1], tr[i]
        lhs = E.ell(a - 1) - E.ell(b - 1)
        rhs = E.h(n[i - 1])
        if lhs < rhs:
            fails.append(PlanFailure(2, i, f"ell({a - 1}) - ell({b - 1}) = {lhs} < h({n[i - 1]}) = {rhs}"))
    last = tr[-1]
    if E.ell(last - 1) <= n[mu - 1]:
        fails.append(PlanFailure(3, mu, f"ell({last - 1}) = {E.ell(last - 1)} <= {n[mu - 1]}"))
    if E.ell(last) > n[mu - 1] and E.ell_hat(last - 1) < last + 1:
        fails.append(PlanFailure(4, mu, f"ell_hat({last - 1}) = {E.ell_hat(last - 1)} < {last + 1}"))
    return fails


def stcres_plan(E, tr, m):
    """Exponents, predicted traces and final staircase, or a list of failures."""
    tr, m = list(tr), list(m)
    if len(tr) != len(m) or not tr:
        raise ValueError("tr and m must be non-empty and of equal length")
    if any(v <= 0 for v in tr) or any(v <= 0 for v in m):
        raise ValueError("tr and m must be positive")
    if any(a >= b for a, b in zip(tr, tr[1:])):
        raise ValueError("tr must be strictly increasing")
    fails = stcres_hypotheses(E, tr, m)
    if fails:
        return fails
    mu = len(tr)
    n = _n(m)
    hats = [E.ell_hat(i) for i in range(max(E.height, max(tr)))]
    for a in tr:
        hats[a - 1] -= 1
    flat = E.with_hats(hats)
    p, traces = [], []
    for j in range(1, mu + 1):
        nj = n[j - 1]
        a = tr[j - 1]
        if j < mu or E.ell(a) > nj:
            start = E.ell(a - 1) - nj
        else:
            start = 1
        p.append(start)
        traces.append(a)
        for k in range(1, m[j - 1]):
            # positions after the leading y of the block
            if j == mu:
                p.append(1)
            elif k == 1:
                p.append(E.ell(a - 1) - nj - E.h(nj))
            else:
                p.append(p[-1] - 1)
            i = nj + j + k
            # after the last y the columns are those of the flattened staircase
            traces.append((flat if j == mu else E).h(i - j - 1))
    E_prime = flat.tau(sum(m) - mu)
    if any(v < 1 for v in p) or any(a < b for a, b in zip(p, p[1:])):
        raise limits.ConsistencyError(f"constructed exponents {p} are not a valid plan")
    return StcresPlan(E, tr, m, p, traces, E_prime, y_seq(m))


@dataclass
class StcresCheck:
    ok: bool
    plan: object
    engine_traces: list = None
    residual_match: bool = False
    deficiency: int = None
    stable: bool = True

    def to_json(self):
        out = {"ok": self.ok}
        if isinstance(self.plan, StcresPlan):
            out.update(self.plan.to_json())
            out["engine_traces"] = self.engine_traces
            out["residual_match"] = self.residual_match
            out["deficiency"] = self.deficiency
            out["stable"] = self.stable
        else:
            out["failures"] = [f.to_json() for f in self.plan]
        return out


def run_plan(E, names, p, extra=0, f=None):
    """Engine ledger of the family along a plan, in an algebra with t-depth p1 + extra."""
    I = family_setting(E, p[0] + extra, f)
    ys = y_polys(names, I.algebra.p)
    return I, limits.iterate(I, ys, p)


def verify_stcres(E, tr, m, stability=True, p_override=None):
    """Run the plan through the engine and compare with the predictions."""
    plan = stcres_plan(E, tr, m)
    if not isinstance(plan, StcresPlan):
        return StcresCheck(False, plan)
    p = list(p_override) if p_override is not None else plan.p
    I, led = run_plan(E, plan.ys, p)
    target = native_monomial_ideal(I.algebra, plan.E_prime)
    match = led.residuals[-1] == target
    check = StcresCheck(
        ok=False,
        plan=plan,
        engine_traces=led.tr,
        residual_match=match,
        deficiency=led.deficiency[-1],
    )
    if stability:
        _, led2 = run_plan(E, plan.ys, p, extra=1)
        check.stable = led2.tr == led.tr and led2.res == led.res
    check.ok = (
        led.tr == plan.traces and match and led.deficiency[-1] == 0 and check.stable
    )
    return check


def residual_admissible(E, p):
    """p is a stair length l_E(i) whose stair is the top one or has l_hat(i) >= i + 2."""
    if p not in E.lengths:
        return False
    i = E.h(p - 1) - 1
    return i == E.height - 1 or E.ell_hat(i) >= i + 2


def gentle_staircases(max_colength):
    """All gentle staircases with 1 <= colength <= max_colength."""
    out = []

    def grow(prefix, remaining, cap):
        if prefix:
            out.append(Staircase(prefix))
        for k in range(min(remaining, cap), 0, -1):
            grow(prefix + (k,), remaining - k, k)

    grow((), max_colength, max_colength)
    return [E for E in out if E.is_gentle()]


def truncated_equal(I, J, D):
    """Equality of two homogeneous ideals in all degrees below D."""
    g = I.algebra.grading
    a = [k for k, c in enumerate(I.pivots) if g[c] < D]
    b = [k for k, c in enumerate(J.pivots) if g[c] < D]
    return [I.pivots[k] for k in a] == [J.pivots[k] for k in b] and np.array_equal(I.rows[a], J.rows[b])


COLON_WORDS = ("y", "yy", "yx", "yyy", "yyx", "yxy", "yxx")


def _word_blocks(word):
    m = []
    for ch in word:
        if ch == "y":
            m.append(1)
        else:
            m[-1] += 1
    return m


@dataclass
class StairReport:
    E: Staircase
    x_traces: list
    y_traces: list
    residuals: dict
    mismatches: list

    @property
    def ok(self):
        return not self.mismatches


def stairs_report(E, extra=0, colon_words=COLON_WORDS):
    """Compare the closed formulas with the engine on one staircase.

    Works in depth P = l(E) + 1 + extra and checks, for p = 1..P, the
    x-trace colength h(E), the x-residual I_tau(E,1) + (t^p), the y-trace
    colength h_E(p-1), the y-residual at admissible stair lengths, and the
    colon formula for the given y-words in the degrees the depth resolves.
    """
    P = E.ell() + 1 + extra
    I = family_setting(E, P)
    alg = I.algebra
    x, y, t = variables(alg.p)
    mismatches = []
    xs = limits.trace_colengths(I, x, P)
    for p, v in enumerate(xs, start=1):
        if v != E.height:
            mismatches.append(("x-trace", p, v, E.height))
    shifted = native_monomial_ideal(alg, E.tau(1), extra_t=False)
    for p in sorted({1, P // 2 or 1, P}):
        if limits.hres(I, x, p) != shifted.plus(t**p):
            mismatches.append(("x-residual", p))
    ys = limits.trace_colengths(I, y, P)
    gentle = E.is_gentle()
    if gentle:
        for p, v in enumerate(ys, start=1):
            if v != E.h(p - 1):
                mismatches.append(("y-trace", p, v, E.h(p - 1)))
    residuals = {}
    if gentle:
        for p in sorted(set(E.lengths)):
            if not residual_admissible(E, p):
                continue
            _, E2 = trace_formula_y(E, p)
            residuals[p] = E2
            if limits.res(I, y, p) != native_monomial_ideal(alg, E2):
                mismatches.append(("y-residual", p, str(E2)))
    for word in colon_words:
        g = Poly.const(1, alg.p)
        for ch in word:
            g = g * (y if ch == "y" else x)
        K = I.colon(g)
        target = native_monomial_ideal(alg, colon_formula(E, _word_blocks(word), len(word)), extra_t=False)
        if not truncated_equal(K, target, P - len(word)):
            mismatches.append(("colon", word))
    return StairReport(E, xs, ys, {p: str(F) for p, F in residuals.items()}, mismatches)


def random_admissible(rng, max_colength=30, max_mu=3, max_m=3, tries=10000):
    """Random (E, tr, m) with E gentle and the four planner hypotheses satisfied."""
    pool = gentle_staircases(max_colength)
    for _ in range(tries):
        E = rng.choice(pool)
        mu = rng.randint(1, min(max_mu, E.height))
        tr = sorted(rng.sample(range(1, E.height + 1), mu))
        m = [rng.randint(1, max_m) for _ in range(mu)]
        if not stcres_hypotheses(E, tr, m):
            return E, tr, m
    raise RuntimeError("no admissible data found")
