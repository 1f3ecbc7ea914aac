"""Monic common left multiples of linear polynomials over general rings.

Over a ring A with twist (S, D) the following are equivalent:
  1. every finite set {a_i} has a monic degree-n polynomial in the intersection of the R(t - a_i);
  2. every pair {a, b} has a monic degree-2 polynomial in R(t - a) and R(t - b);
  3. for all r, b there is c with c r = S(r) b + D(r).
With S = id and D = 0 this says A is left duo.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .rings import Ring, Scalar
from .skewpoly import SkewPoly, evaluate, right_divmod


class ClosureError(ValueError):
    """A pair in the inductive construction has no monic degree-2 common multiple."""

    def __init__(self, level: int, left: Scalar, right: Scalar, certificate: str | None):
        super().__init__(f"level {level}: no monic common multiple of t - ({left}) and t - ({right})")
        self.level = level
        self.pair = (left, right)
        self.certificate = certificate


@dataclass
class DuoSolution:
    solvable: bool
    c: Scalar | None
    certificate: str | None = None

    def __iter__(self):
        return iter((self.c, self.certificate))


def duo_solve(r: Scalar, b: Scalar) -> DuoSolution:
    """Find c with c r = S(r) b + D(r)."""
    R = r.ring
    rhs = r.S() * b + r.D()
    c, cert = R.solve_left(r, rhs)
    if c is not None:
        assert c * r == rhs
        return DuoSolution(True, c)
    return DuoSolution(False, None, cert)


@dataclass
class Llcm2Result:
    exists: bool
    c: Scalar | None = None
    d: Scalar | None = None
    certificate: str | None = None

    def polynomial(self, a: Scalar) -> SkewPoly:
        """(t - c)(t - a), equal to (t - d)(t - b)."""
        R = a.ring
        return SkewPoly.linear(R, self.c) * SkewPoly.linear(R, a)


def llcm2_exists(a: Scalar, b: Scalar) -> Llcm2Result:
    """Monic degree-2 element of R(t - a) and R(t - b): c(a - b) = S(a - b) b + D(a - b), d = c + S(a - b)."""
    R = a.ring
    if a == b:
        return Llcm2Result(True, a, a)
    r = a - b
    sol = duo_solve(r, b)
    if not sol.solvable:
        return Llcm2Result(False, certificate=sol.certificate)
    c = sol.c
    d = c + r.S()
    assert SkewPoly.linear(R, d) * SkewPoly.linear(R, b) == SkewPoly.linear(R, c) * SkewPoly.linear(R, a)
    return Llcm2Result(True, c, d)


def pair_multiple_brute_force(a: Scalar, b: Scalar) -> bool:
    """Search all t^2 + c_1 t + c_0 over a finite ring for one with right roots a and b."""
    R = a.ring
    for c0, c1 in product(R.elements(), repeat=2):
        f = SkewPoly(R, [c0, c1, R.one])
        if not evaluate(f, a) and not evaluate(f, b):
            return True
    return False


def pair_factor_brute_force(a: Scalar, b: Scalar) -> bool:
    """Search c, d with (t - c)(t - a) = (t - d)(t - b), i.e. c + S(a) = d + S(b), c a - D(a) = d b - D(b)."""
    R = a.ring
    for c in R.elements():
        d = c + a.S() - b.S()
        if c * a - a.D() == d * b - b.D():
            return True
    return False


@dataclass
class DuoReport:
    ring: str
    condition3: object = None          # True, or a counterexample pair (r, b)
    pair: Llcm2Result | None = None
    chain: dict = field(default_factory=dict)   # index tuple -> a_{i_1 ... i_l}
    polynomial: SkewPoly | None = None

    def to_json(self) -> dict:
        out = {"ring": self.ring}
        if self.condition3 is not None:
            if self.condition3 is True:
                out["condition3"] = "universal"
            else:
                r, b = self.condition3
                out["condition3"] = {"counterexample": {"r": str(r), "b": str(b)}}
        if self.pair is not None:
            out["exists"] = self.pair.exists
            out["c"] = None if self.pair.c is None else str(self.pair.c)
            out["d"] = None if self.pair.d is None else str(self.pair.d)
            out["certificate"] = self.pair.certificate
        if self.chain:
            out["chain"] = {"".join(str(i + 1) for i in k): str(v) for k, v in sorted(self.chain.items())}
        if self.polynomial is not None:
            out["polynomial"] = str(self.polynomial)
        return out


def lemma71_construct(points) -> DuoReport:
    """f_n = (t - a_{1..n}) ... (t - a_{12})(t - a_1) from pairwise degree-2 multiples.

    a_{P x y} and a_{P y x} come from one solution of
    (t - a_{Pxy})(t - a_{Px}) = (t - a_{Pyx})(t - a_{Py}).
    """
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    R = points[0].ring
    n = len(points)
    chain: dict[tuple, Scalar] = {(i,): x for i, x in enumerate(points)}

    def elem(key: tuple) -> Scalar:
        if key in chain:
            return chain[key]
        P, x, y = key[:-2], key[-2], key[-1]
        lo, hi = min(x, y), max(x, y)
        left, right = elem(P + (lo,)), elem(P + (hi,))
        res = llcm2_exists(left, right)
        if not res.exists:
            raise ClosureError(len(key), left, right, res.certificate)
        chain[P + (lo, hi)] = res.c
        chain[P + (hi, lo)] = res.d
        return chain[key]

    f = SkewPoly.linear(R, points[0])
    for l in range(2, n + 1):
        f = SkewPoly.linear(R, elem(tuple(range(l)))) * f
    for x in points:
        if right_divmod(f, SkewPoly.linear(R, x))[1]:
            raise ArithmeticError(f"constructed polynomial is not divisible by t - ({x})")
    return DuoReport(R.name, chain=chain, polynomial=f)


def condition3_counterexample(ring: Ring):
    """First (r, b) with no c r = S(r) b + D(r), or None; finite rings only."""
    els = ring.elements()
    for r in els:
        for b in els:
            if not duo_solve(r, b).solvable:
                return (r, b)
    return None


def condition3_report(ring: Ring) -> DuoReport:
    ce = condition3_counterexample(ring)
    return DuoReport(ring.name, condition3=True if ce is None else ce)


def is_left_duo(ring: Ring) -> bool:
    """Every principal left ideal A r is closed under right multiplication; finite rings only."""
    els = ring.elements()
    for r in els:
        ideal = {c * r for c in els}
        if any(x * b not in ideal for x in ideal for b in els):
            return False
    return True
