"""Command-line front end.

Every subcommand prints one JSON document (or CSV where asked) and exits
with 0 on success, 2 for an undecided verdict, 3 when a hypothesis fails,
64 on bad usage and 70 when a computation raises.
"""

import argparse
import json
import random
import re
import sys

from . import hankel, limits, monomial_limits, oracle, pipeline
from .exactalg import PRIME
from .staircase import Staircase
from .trunc_ideal import Poly, power_ideal_gens

EX_OK, EX_UNDECIDED, EX_HYPOTHESIS, EX_USAGE, EX_SOFTWARE = 0, 2, 3, 64, 70


class UsageError(Exception):
    pass


# ideal syntax

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyt])|(.))")


def _tokens(text):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, var, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif var is not None:
            out.append(("var", var))
        elif sym in "+-*^(),":
            out.append((sym, sym))
        else:
            raise UsageError(f"unexpected character {sym!r} at {m.start(3)}")
        pos = m.end()
    out.append(("end", None))
    return out


class IdealParser:
    """Recursive-descent parser for ideals such as "(x+y+t, x^2)^4".

    ideal   := product ("+" product)*
    product := atom ("*" atom)*
    atom    := "(" poly ("," poly)* ")" ["^" INT]
    poly    := ["-"] term (("+" | "-") term)*
    term    := factor ("*"? factor)*
    factor  := base ["^" INT]
    base    := INT | "x" | "y" | "t" | "(" poly ")"
    """

    def __init__(self, text, p=PRIME):
        self.toks = _tokens(text)
        self.i = 0
        self.p = p

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[1] is None else repr(tok[1])
            raise UsageError(f"expected {kind!r}, found {found}")
        self.i += 1
        return tok[1]

    def parse(self):
        gens = self.ideal()
        self.take("end")
        return gens

    def ideal(self):
        gens = self.product()
        while self.peek() == "+":
            self.take("+")
            gens = gens + self.product()
        return gens

    def product(self):
        gens = self.atom()
        while self.peek() == "*":
            self.take("*")
            other = self.atom()
            gens = [a * b for a in gens for b in other]
        return gens

    def atom(self):
        self.take("(")
        gens = [self.poly()]
        while self.peek() == ",":
            self.take(",")
            gens.append(self.poly())
        self.take(")")
        if self.peek() == "^":
            self.take("^")
            k = self.take("int")
            gens = power_ideal_gens(gens, k) if k > 0 else [Poly.const(1, self.p)]
        return gens

    def poly(self):
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        out = self.term() * sign
        while self.peek() in "+-":
            op = self.take(self.peek())
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self):
        out = self.factor()
        while self.peek() in ("*", "int", "var", "("):
            if self.peek() == "*":
                self.take("*")
            out = out * self.factor()
        return out

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.take("^")
            base = base ** self.take("int")
        return base

    def base(self):
        kind = self.peek()
        if kind == "int":
            return Poly.const(self.take("int"), self.p)
        if kind == "var":
            return Poly.var(self.take("var"), self.p)
        if kind == "(":
            self.take("(")
            out = self.poly()
            self.take(")")
            return out
        tok = self.toks[self.i][1]
        raise UsageError("unexpected end of input" if tok is None else f"unexpected {tok!r}")


def parse_ideal(text, p=PRIME):
    """Generators of the ideal written in the textual syntax."""
    return IdealParser(text, p).parse()


def parse_poly(text, p=PRIME):
    parser = IdealParser(text, p)
    out = parser.poly()
    parser.take("end")
    return out


def _ints(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers: {text!r}")


def _staircase(text):
    try:
        return Staircase.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


# commands


def cmd_staircase(args):
    E = _staircase(args.lengths)
    if args.action == "render":
        return EX_OK, E.render() + "\n"
    out = {"colength": E.colength(), "h": E.height, "gentle": E.is_gentle()}
    if args.verbose:
        out.update(lengths=list(E.lengths), hats=E.hats(), corners=E.corners())
    return EX_OK, out


def _limits_setup(args):
    gens = parse_ideal(args.ideal)
    ys = [parse_poly(v) for v in args.ys.split(",")]
    ps = _ints(args.ps)
    if not ps:
        raise UsageError("--ps must not be empty")
    I, _ = limits.family_setting(gens, max(ps), args.nxy)
    return gens, I, ys, ps


def cmd_limits(args):
    gens, I, ys, ps = _limits_setup(args)
    if args.action == "qsearch":
        return EX_OK, {"q": limits.max_safe_p(I, ys, ps)}
    if args.action == "iterate":
        led = limits.iterate(I, ys[: len(ps)], ps)
        return EX_OK, led.to_json()
    rep = limits.deficiency(I, ys[: len(ps)], ps)
    return EX_OK, {"direct": rep.direct, "claim1": rep.claim1, "claim2": rep.claim2}


def cmd_stcres(args):
    E = _staircase(args.lengths)
    tr, m = _ints(args.tr), _ints(args.m)
    if args.verify:
        check = monomial_limits.verify_stcres(E, tr, m, stability=not args.no_stability)
        return (EX_OK if check.ok else EX_HYPOTHESIS), check.to_json()
    plan = monomial_limits.stcres_plan(E, tr, m)
    if isinstance(plan, monomial_limits.StcresPlan):
        return EX_OK, plan.to_json()
    return EX_HYPOTHESIS, {"failures": [f.to_json() for f in plan]}


def cmd_hankel(args):
    if args.action == "det":
        spec = hankel.HankelSpec(args.e, args.r, args.n)
        return EX_OK, {"e": args.e, "r": args.r, "n": args.n,
                       "det": hankel.hankel_det(spec), "invertible": hankel.is_invertible(spec)}
    rows = list(hankel.sweep(args.max_e, args.min_e))
    if args.csv:
        text = "e,r,n,det\n" + "".join(f"{e},{r},{n},{d}\n" for e, r, n, d in rows)
        return EX_OK, text
    return EX_OK, {"count": len(rows), "all_invertible": all(d != 0 for *_, d in rows)}


def cmd_decide(args):
    v = pipeline.decide_regular(args.n, args.e)
    return v.exit_code, v.to_json()


def cmd_oracle(args):
    if args.d_max is not None:
        reps = oracle.sweep(args.n, args.e, range(args.d, args.d_max + 1), args.prime, args.seed)
        if args.csv:
            return EX_OK, oracle.sweep_csv(reps)
        return EX_OK, {"reports": [r.to_json() for r in reps],
                       "all_regular": all(r.regular for r in reps)}
    rep = oracle.regularity(oracle.InterpProblem(args.n, args.e, args.d, args.prime, args.seed))
    return EX_OK, rep.to_json()


def verify_suite(seed=0):
    """Cross-checks between independent computations; returns {name: bool}."""
    out = {}
    x, y = Poly.var("x"), Poly.var("y")
    gens = parse_ideal("(x+y+t,x^2)^4")
    I, _ = limits.family_setting(gens, 8)
    ys = [y, y, x]
    good = limits.deficiency(I, ys, [8, 7, 5]).total == 0
    bad = limits.deficiency(I, ys, [8, 7, 6]).total > 0
    out["golden_q"] = good and bad and limits.max_safe_p(I, ys, [8, 7]) == 5
    rng = random.Random(seed)
    cases = [monomial_limits.random_admissible(rng, max_colength=20) for _ in range(5)]
    out["stcres_engine"] = all(monomial_limits.verify_stcres(*c).ok for c in cases)
    verdict = pipeline.decide_regular(36, 3)
    reps = oracle.sweep(36, 3, range(0, 26), seed=seed)
    out["pipeline_oracle"] = verdict.status == pipeline.REGULAR and all(r.regular for r in reps)
    out["hankel_sweep"] = all(d != 0 for *_, d in hankel.sweep(12))
    return out


def cmd_verify(args):
    res = verify_suite(args.seed)
    return (EX_OK if all(res.values()) else EX_SOFTWARE), res


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    ap = _Parser(prog="limitsys", description="Limits of linear systems and interpolation checks.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("staircase", help="staircase combinatorics")
    s.add_argument("action", choices=["info", "render"])
    s.add_argument("--lengths", required=True, help="stair lengths, e.g. 12,9,6,3")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_staircase)

    s = sub.add_parser("limits", help="traces, residuals and deficiencies of a family")
    s.add_argument("action", choices=["qsearch", "iterate", "deficiency"])
    s.add_argument("--ideal", required=True, help='e.g. "(x+y+t,x^2)^4"')
    s.add_argument("--ys", required=True, help="comma-separated divisors, e.g. y,y,x")
    s.add_argument("--ps", required=True, help="comma-separated exponents")
    s.add_argument("--nxy", type=int, default=None, help="initial (x,y)-window")
    s.set_defaults(func=cmd_limits)

    s = sub.add_parser("stcres", help="plan (and optionally verify) a staircase residual sequence")
    s.add_argument("--lengths", required=True)
    s.add_argument("--tr", required=True)
    s.add_argument("--m", required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--no-stability", action="store_true")
    s.set_defaults(func=cmd_stcres)

    s = sub.add_parser("hankel", help="binomial Hankel determinants")
    s.add_argument("action", choices=["det", "sweep"])
    s.add_argument("--e", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--max-e", type=int, default=12)
    s.add_argument("--min-e", type=int, default=1)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_hankel)

    s = sub.add_parser("decide", help="regularity decision for n points of multiplicity e")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("oracle", help="interpolation rank at random points")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--d-max", type=int, default=None, help="sweep degrees d..d-max")
    s.add_argument("--prime", type=int, default=PRIME)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="run the cross-check suite")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return ap


def _emit(out, stream):
    if isinstance(out, str):
        stream.write(out)
    else:
        stream.write(json.dumps(out, separators=(",", ":")) + "\n")


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "hankel" and args.action == "det" and None in (args.e, args.r, args.n):
            raise UsageError("hankel det needs --e, --r and --n")
        code, out = args.func(args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EX_USAGE
    except pipeline.HypothesisFailure as exc:
        _emit({"error": "hypothesis", "name": exc.name, "detail": exc.detail}, stdout)
        return EX_HYPOTHESIS
    except Exception as exc:  # noqa: BLE001 - every failure becomes a JSON error body
        _emit({"error": type(exc).__name__, "detail": str(exc)}, stdout)
        return EX_SOFTWARE
    _emit(out, stdout)
    return code


def main():
    sys.exit(run())
