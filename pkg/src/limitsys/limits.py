"""Iterated traces and residuals of a one-parameter family of ideals.

All computations happen in an algebra A = k[[x, y, t]]/(I_t + (t^P)); every
ideal met along the way contains I_t + (t^p1), so working in A loses
nothing as long as P >= p1.  Trace ideals live in R/(y); they are stored as
ideals of A containing y and t, which the correspondence theorem identifies
with ideals of R/(y).  Likewise residuals are stored as ideals containing t.
"""

from dataclasses import dataclass, field

from .trunc_ideal import Ideal, Poly, QuotientAlgebra, exact_quotient, VARS


class TruncationError(RuntimeError):
    """The working algebra is too small for the requested exponents."""


class FlatnessError(RuntimeError):
    """The family fails the flatness check over k[[t]]."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def _t(alg, k):
    return Poly.var("t", alg.p) ** k


def _check_depth(I, p):
    depth = I.algebra.t_depth()
    if p > depth:
        raise TruncationError(f"exponent {p} exceeds t-depth {depth} of the working algebra")


def trace(I, y, p):
    """((I + (y)) : t^(p-1)) + (t); its colength is the trace colength."""
    _check_depth(I, p)
    K = I.plus(y)
    if p > 1:
        K = K.colon(_t(I.algebra, p - 1))
    return K.set_t_zero()


def hres(I, y, p):
    """(I + (t^p)) : y."""
    _check_depth(I, p)
    return I.plus(_t(I.algebra, p)).colon(y)


def res(I, y, p):
    return hres(I, y, p).set_t_zero()


def trace_colengths(I, y, qmax):
    """Trace colengths of I along y for p = 1..qmax, in one pass.

    In B = A/(I + (y)) the trace at p is ((0 : t^(p-1)) + tB) and B splits
    as a sum of cyclic k[t]-modules k[t]/(t^a), so its colength counts the
    summands with a >= p, which is dim(0 : t^p) - dim(0 : t^(p-1)).
    """
    _check_depth(I, qmax)
    B = QuotientAlgebra(I.plus(y))
    t = Poly.var("t", B.p)
    K = Ideal.zero(B)
    dims = [0]
    for _ in range(qmax):
        if K.dim == B.dim:
            dims.append(B.dim)
            continue
        K = K.colon(t)
        dims.append(K.dim)
    return [b - a for a, b in zip(dims, dims[1:])]


def is_flat(I):
    """Flatness proxy: dim A/(I + t^P) equals P times dim A/(I + t)."""
    P = I.algebra.t_depth()
    return I.plus(_t(I.algebra, P)).colength() == P * I.set_t_zero().colength()


def hres_chain(I, ys, ps):
    """[HRes_0 = I, HRes_1, ..., HRes_m] by the recursive definition."""
    chain = [I]
    for y, p in zip(ys, ps):
        H = chain[-1]
        if p <= 0:
            chain.append(Ideal.whole(I.algebra))
        else:
            chain.append(hres(H, y, p))
    return chain


def hres_closed(I, ys, ps, i):
    """(I + (t^p1, y1 t^p2, ..., y1...y_{i-1} t^p_i)) : (y1...y_i)."""
    alg = I.algebra
    gens = []
    prod = Poly.const(1, alg.p)
    for y, p in zip(ys[:i], ps[:i]):
        gens.append(prod * _t(alg, max(p, 0)))
        prod = prod * y
    return I.plus(*gens).colon(prod)


@dataclass
class LimitLedger:
    tr: list = field(default_factory=list)
    res: list = field(default_factory=list)
    hres: list = field(default_factory=list)
    deficiency: list = field(default_factory=list)
    traces: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    hres_ideals: list = field(default_factory=list)

    def to_json(self):
        return {"tr": self.tr, "res": self.res, "hres": self.hres, "deficiency": self.deficiency}


def check_plan(ps):
    if any(p < 1 for p in ps):
        raise ValueError("exponents must be positive")
    if any(a < b for a, b in zip(ps, ps[1:])):
        raise ValueError("exponents must be non-increasing")


def iterate(I, ys, ps, check_closed_form=True, check_flat=True):
    """Traces, residuals and condition counts for every level of the plan."""
    ys, ps = list(ys), list(ps)
    if len(ys) != len(ps):
        raise ValueError("ys and ps must have the same length")
    check_plan(ps)
    if ps:
        _check_depth(I, ps[0])
    if check_flat and not is_flat(I):
        raise FlatnessError("family is not flat over k[[t]] in the working algebra")
    led = LimitLedger()
    res0 = I.set_t_zero()
    led.res.append(res0.colength())
    led.residuals.append(res0)
    chain = [I]
    total_tr = 0
    for i, (y, p) in enumerate(zip(ys, ps), start=1):
        H = chain[-1]
        T = trace(H, y, p)
        Hn = hres(H, y, p)
        if check_closed_form:
            if hres_closed(I, ys, ps, i) != Hn:
                raise ConsistencyError(f"recursive and closed-form HRes differ at level {i}")
        chain.append(Hn)
        Rn = Hn.set_t_zero()
        led.traces.append(T)
        led.tr.append(T.colength())
        led.residuals.append(Rn)
        led.res.append(Rn.colength())
        led.hres.append(Hn.colength())
        total_tr += led.tr[-1]
        led.deficiency.append(led.res[0] - led.res[-1] - total_tr)
    led.hres_ideals = chain
    return led


@dataclass
class DeficiencyReport:
    direct: list
    claim1: list
    claim2: list

    @property
    def total(self):
        return self.direct[-1] if self.direct else 0


def deficiency(I, ys, ps, ledger=None):
    """Cumulative condition loss per level, computed three ways and compared."""
    ys, ps = list(ys), list(ps)
    if ledger is None:
        ledger = iterate(I, ys, ps, check_closed_form=False)
    direct = list(ledger.deficiency)
    alg = I.algebra
    upper = ledger.hres_ideals
    lower = hres_chain(I, ys, [p - 1 for p in ps])
    corr1 = []
    corr2 = []
    for j, (y, p) in enumerate(zip(ys, ps), start=1):
        if p <= 1:
            corr1.append(0)
            corr2.append(0)
            continue
        base = _t(alg, p - 1)
        big = lower[j - 1].plus(base, y).colength()
        small = upper[j - 1].plus(base, y).colength()
        corr1.append(small - big)
        hi = trace_colengths(upper[j - 1], y, p - 1)
        lo = trace_colengths(lower[j - 1], y, p - 1)
        corr2.append(sum(a - b for a, b in zip(hi, lo)))
    claim1 = _cumsum(corr1)
    claim2 = _cumsum(corr2)
    if not (direct == claim1 == claim2):
        raise ConsistencyError(f"deficiency mismatch: {direct} {claim1} {claim2}")
    return DeficiencyReport(direct, claim1, claim2)


def _cumsum(values):
    out, acc = [], 0
    for v in values:
        acc += v
        out.append(acc)
    return out


def _prefix_hres(I, ys, prefix):
    return hres_chain(I, ys[: len(prefix)], prefix)[-1]


def max_safe_p(I, ys, prefix):
    """Largest next exponent (at most the last prefix entry) keeping the count.

    The next level with exponent q loses sum over q' < q of the differences
    between the traces computed after prefix and after prefix - 1, so the
    answer is the first q' where these traces differ (or the last prefix
    entry if they never do).  Trace ideals are nested, so comparing their
    colengths decides equality.
    """
    prefix = list(prefix)
    if not prefix:
        raise ValueError("prefix must be non-empty")
    if len(ys) <= len(prefix):
        raise ValueError("need a divisor for the level after the prefix")
    check_plan(prefix)
    _check_depth(I, prefix[0])
    y = ys[len(prefix)]
    last = prefix[-1]
    if last == 1:
        return 1
    hi = trace_colengths(_prefix_hres(I, ys, prefix), y, last - 1)
    lo = trace_colengths(_prefix_hres(I, ys, [p - 1 for p in prefix]), y, last - 1)
    for q, (a, b) in enumerate(zip(hi, lo), start=1):
        if a != b:
            return q
    return last


def safe_exponents(I, ys, ps):
    """max_safe_p after each proper prefix of the plan."""
    return [max_safe_p(I, ys, ps[:i]) for i in range(1, len(ps))]


def val(I, ys, ps, i):
    """max over 1 <= q <= p_i of tr_i(p(q, i)) + q - p_i."""
    ys, ps = list(ys), list(ps)
    H = hres_chain(I, ys[: i - 1], ps[: i - 1])[-1]
    trs = trace_colengths(H, ys[i - 1], ps[i - 1])
    return max(tr + q - ps[i - 1] for q, tr in enumerate(trs, start=1))


def valuation(y):
    """(x, y)-adic order of a polynomial."""
    return y.xy_order()


def max_ideal_power(alg, k):
    """(x, y, t)^k as an ideal of the working algebra."""
    if k <= 0:
        return Ideal.whole(alg)
    gens = [
        Poly({(a, b, k - a - b): 1}, alg.p)
        for a in range(k + 1)
        for b in range(k + 1 - a)
    ]
    return Ideal.generated(alg, gens)


def family_setting(gens, P, Nxy=None):
    """Zero ideal of the exact algebra k[[x, y, t]]/((gens) + (t^P))."""
    A, window = exact_quotient(gens, P, Nxy)
    return Ideal.zero(A), window


def stable_quantities(gens, ys, ps, compute, Nxy=None):
    """Run compute(I) in the default algebra and an enlarged one; must agree.

    Returns the common value, raising TruncationError on disagreement.
    """
    P = max(ps) if ps else 1
    I, window = family_setting(gens, P, Nxy)
    first = compute(I)
    I2, _ = family_setting(gens, P + 1, window.algebra.Nxy + 2 if hasattr(window.algebra, "Nxy") else None)
    second = compute(I2)
    if first != second:
        raise TruncationError(f"unstable under window enlargement: {first} != {second}")
    return first
