"""Command line front end: ``wedderburn [context flags] <command> ...``.

Exit status is 0 on success, 1 for a negative verdict under ``--strict``
and 2 for usage, parse and context errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import duo as duo_mod
from . import matrix as mx
from . import skewpoly as sp
from . import wpoly
from .parsing import ParseError, parse_poly
from .rings import (
    BUILTIN_FIELDS,
    FiniteField,
    QuaternionAlgebra,
    RationalFunctionField,
    UnsupportedContextError,
    builtin_ring,
)


class UsageError(Exception):
    pass


def _parse_field(spec: str) -> FiniteField:
    spec = spec.strip().lower()
    if spec in BUILTIN_FIELDS:
        return FiniteField.builtin(spec)
    m = re.fullmatch(r"custom\((\d+)\s*,\s*(.+)\)", spec)
    if not m:
        raise UsageError(f"unknown field {spec!r}; use one of {', '.join(BUILTIN_FIELDS)} or custom(p,modulus)")
    p = int(m.group(1))
    body = m.group(2)
    if re.fullmatch(r"[\d\s,]+", body):
        coeffs = [int(c) for c in body.replace(",", " ").split()]
    else:
        # a polynomial in w, read through Q(x)
        num, den = RationalFunctionField().parse(body.replace("w", "x")).value
        if len(den) != 1 or any(Fraction(c).denominator != 1 for c in num):
            raise UsageError(f"modulus {body!r} must be an integer polynomial in w")
        coeffs = [int(c) for c in num]
    try:
        return FiniteField(p, coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _descriptor(text: str, kind: str):
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    if kind == "endo":
        if name == "identity":
            return None
        if name == "frobenius":
            return ("frobenius", int(arg) if arg else 1)
        if name in ("inner", "subs") and arg:
            return (name, arg)
    else:
        if name == "zero":
            return None
        if name == "ddx":
            return ("ddx",)
        if name == "inner" and arg:
            return ("inner", arg)
    raise UsageError(f"bad {'--twist' if kind == 'endo' else '--derivation'} value {text!r}")


def _apply_twist(ring, args):
    S = _descriptor(args.twist, "endo") if args.twist else None
    D = _descriptor(args.derivation, "deriv") if args.derivation else None
    if S is None and D is None:
        return ring
    return ring.with_twist(S=S, D=D)


def build_context(args):
    """The coefficient ring selected by the global flags."""
    chosen = [bool(args.field), args.quaternion, args.ratfunc]
    if sum(chosen) > 1:
        raise UsageError("choose at most one of --field, --quaternion, --ratfunc")
    if args.quaternion:
        ring = QuaternionAlgebra()
    elif args.ratfunc:
        ring = RationalFunctionField()
    else:
        ring = _parse_field(args.field or "f4")
    return _apply_twist(ring, args)


def _points(ring, texts):
    return [ring(t) for t in texts]


def _s(x) -> str:
    return str(x)


def _mat(M) -> list:
    return M.to_strings()


# --- commands -------------------------------------------------------------------

def cmd_llcm(args, ring):
    pts = _points(ring, args.points)
    trace = sp.llcm_set(pts)
    report = {
        "polynomial": _s(trace.polynomial),
        "degree": trace.polynomial.degree,
        "independent": trace.is_independent,
        "points": [_s(x) for x in pts],
        "values": [_s(v) for v in trace.values],
        "exponents": [None if y is None else _s(y) for y in trace.exponents],
        "degenerate_steps": [i + 1 for i, d in enumerate(trace.degenerate) if d],
    }
    if trace.is_independent:
        table = sp.symmetric_functions(trace)
        report["lambda"] = [[_s(x) for x in row] for row in table.table]
        report["viete"] = sp.viete_check(trace)
    return report, trace.is_independent


def _text_llcm(r):
    lines = [f"p_{len(r['points'])} = {r['polynomial']}", f"degree {r['degree']}"]
    for i, (v, y) in enumerate(zip(r["values"], r["exponents"]), 1):
        lines.append(f"  step {i}: p_{i - 1}(x_{i}) = {v}" + (f", y_{i} = {y}" if y is not None else "  (degenerate)"))
    if r["degenerate_steps"]:
        lines.append(f"warning: degenerate steps {r['degenerate_steps']}; the points are P-dependent")
    else:
        lines.append("independent")
        for i, row in enumerate(r["lambda"]):
            lines.append(f"  Lambda^{i}: " + ", ".join(row))
        lines.append(f"viete check: {'ok' if r['viete'] else 'FAILED'}")
    return "\n".join(lines)


def cmd_factor(args, ring):
    f = parse_poly(ring, args.polynomial)
    if not f.is_monic():
        raise UsageError(f"{f} is not monic")
    cands = _points(ring, args.candidates) if args.candidates else None
    if cands is None and not isinstance(ring, FiniteField):
        raise UsageError(f"{ring.name} is infinite; pass --candidates")
    verdict = wpoly.is_w_polynomial(f, cands)
    roots = wpoly.root_set(f, cands)
    classes = wpoly.class_decomposition(f, roots)
    facs = []
    if verdict.is_wedderburn and isinstance(ring, FiniteField) and cands is None:
        facs = wpoly.enumerate_factorizations(f, jobs=args.jobs)
    report = {
        "polynomial": _s(f),
        "classes": [{"representative": _s(cd.representative), "dim": cd.dim,
                     "centralizer_order": cd.centralizer_order} for cd in classes],
        "weight": verdict.weight,
        "is_wedderburn": verdict.is_wedderburn,
        "factorizations": [list(fac.key()) for fac in facs],
        "flag_count": len(facs),
    }
    return report, verdict.is_wedderburn


def _text_factor(r):
    lines = [f"f = {r['polynomial']}"]
    for cd in r["classes"]:
        extra = "" if cd["dim"] is None else f", dim E = {cd['dim']}, |C| = {cd['centralizer_order']}"
        lines.append(f"  class of {cd['representative']}{extra}")
    lines.append(f"weight {r['weight']}; " + ("W-polynomial" if r["is_wedderburn"] else "not a W-polynomial"))
    if r["factorizations"]:
        lines.append(f"{r['flag_count']} factorizations:")
        for fac in r["factorizations"]:
            lines.append("  " + "*".join(f"(t - ({b}))" for b in fac))
    return "\n".join(lines)


def cmd_pindep(args, ring):
    pts = _points(ring, args.points)
    res = sp.pindep_test(pts)
    report = {
        "points": [_s(x) for x in pts],
        "independent": res.independent,
        "U": _mat(res.U),
        "factors": [_s(b) for b in reversed(res.factors)],
    }
    return report, res.independent


def _text_pindep(r):
    lines = ["independent" if r["independent"] else "dependent", f"U = {_rows(r['U'])}"]
    if r["factors"]:
        lines.append("llcm = " + "*".join(f"(t - ({b}))" for b in r["factors"]))
    return "\n".join(lines)


def _rows(rows):
    return "[" + ", ".join("[" + ", ".join(r) + "]" for r in rows) + "]"


def cmd_vdm(args, ring):
    pts = _points(ring, args.points)
    V = mx.vandermonde(pts)
    lu = mx.lu_vandermonde(pts)
    report = {
        "V": _mat(V),
        "Lambda": _mat(lu.Lam),
        "U": _mat(lu.U),
        "pivots": [_s(p) for p in lu.pivots],
        "invertible": lu.strict,
    }
    if lu.strict:
        inv = mx.inverse_vandermonde_via_F(pts)
        report["C"] = _mat(inv.C)
        report["diagonal"] = [_s(d) for d in inv.diagonal]
        report["inverse"] = _mat(inv.inverse)
    return report, lu.strict


def _text_vdm(r):
    lines = [f"V = {_rows(r['V'])}", f"Lambda = {_rows(r['Lambda'])}", f"U = {_rows(r['U'])}",
             f"pivots = ({', '.join(r['pivots'])})"]
    if r["invertible"]:
        lines += [f"C = {_rows(r['C'])}", f"diag(g_i(x_i)) = ({', '.join(r['diagonal'])})",
                  f"V^-1 = {_rows(r['inverse'])}"]
    else:
        lines.append("V is singular")
    return "\n".join(lines)


def cmd_duo(args, _ring):
    try:
        ring = _apply_twist(builtin_ring(args.ring), args)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    a, b = ring(args.a), ring(args.b)
    rep = duo_mod.DuoReport(ring.name, pair=duo_mod.llcm2_exists(a, b))
    if args.ring_check:
        if not ring.is_finite:
            raise UsageError("--ring-check needs a finite ring")
        rep.condition3 = duo_mod.condition3_report(ring).condition3
    return rep.to_json(), rep.pair.exists


def _text_duo(r):
    lines = [f"ring {r['ring']}", f"exists = {str(r['exists']).lower()}"]
    if r["exists"]:
        lines.append(f"c = {r['c']}, d = {r['d']}")
    else:
        lines.append(f"certificate: {r['certificate']}")
    if "condition3" in r:
        c3 = r["condition3"]
        lines.append("condition holds for all r, b" if c3 == "universal"
                     else f"counterexample r = {c3['counterexample']['r']}, b = {c3['counterexample']['b']}")
    return "\n".join(lines)


def cmd_selftest(args, ring):
    """Random checks of the product formula and evaluation by right division."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        f = sp.SkewPoly(ring, [ring.random(rng) for _ in range(rng.randint(1, 4))])
        g = sp.SkewPoly(ring, [ring.random(rng) for _ in range(rng.randint(1, 4))])
        a = ring.random(rng)
        if sp.evaluate(f * g, a) != sp.product_formula(f, g, a):
            failures += 1
        if g and ring.is_division and sp.evaluate(g, a) != (g % sp.SkewPoly.linear(ring, a))[0]:
            failures += 1
    return {"context": repr(ring), "cases": args.count, "seed": args.seed, "failures": failures}, failures == 0


def _text_selftest(r):
    return f"{r['cases']} random cases in {r['context']} (seed {r['seed']}): {r['failures']} failures"


COMMANDS = {
    "llcm": (cmd_llcm, _text_llcm),
    "factor": (cmd_factor, _text_factor),
    "pindep": (cmd_pindep, _text_pindep),
    "vdm": (cmd_vdm, _text_vdm),
    "duo": (cmd_duo, _text_duo),
    "selftest": (cmd_selftest, _text_selftest),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedderburn", description="Skew polynomial computations over K[t;S,D].")
    p.add_argument("--field", help="f2 f3 f4 f5 f7 f8 f9 f16 f25 f27 or custom(p,modulus); default f4")
    p.add_argument("--twist", help="identity | frobenius[:k] | inner:<elt> | subs:<elt>")
    p.add_argument("--derivation", help="zero | inner:<elt> | ddx")
    p.add_argument("--quaternion", action="store_true", help="work over the rational quaternions")
    p.add_argument("--ratfunc", action="store_true", help="work over Q(x)")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None, help="threads for factorization enumeration")
    p.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("llcm", help="least left common multiple of t - x_i")
    s.add_argument("points", nargs="+")
    s = sub.add_parser("factor", help="W-polynomial test and all linear factorizations")
    s.add_argument("polynomial")
    s.add_argument("--candidates", nargs="+", help="candidate roots for infinite contexts")
    s = sub.add_parser("pindep", help="P-independence via the U-matrix")
    s.add_argument("points", nargs="+")
    s = sub.add_parser("vdm", help="Vandermonde matrix, LU form and inverse")
    s.add_argument("points", nargs="+")
    s = sub.add_parser("duo", help="monic degree-2 common multiple of t - a and t - b in a general ring")
    s.add_argument("ring", help="m2q, m2f2, t2f2, tri (the pair ring over Q(x)), z<n>, or any field name")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--ring-check", action="store_true", help="also test c r = S(r) b + D(r) for all r, b")
    s = sub.add_parser("selftest", help="random product-formula checks in the chosen context")
    s.add_argument("--count", type=int, default=200)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run, text = COMMANDS[args.command]
    try:
        ring = None if args.command == "duo" else build_context(args)
        report, positive = run(args, ring)
    except (UsageError, ParseError, UnsupportedContextError, ValueError, KeyError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text(report))
    return 1 if args.strict and not positive else 0


if __name__ == "__main__":
    sys.exit(main())
