"""Skew polynomials in R = K[t; S, D] with ta = S(a)t + D(a).

Coefficients are stored on the left: f = sum a_i t^i.  Evaluation is the
right-root evaluation f(a) = remainder of f right-divided by (t - a).
"""

from __future__ import annotations

import random as _random
import re
from dataclasses import dataclass, field

from .rings import ContextMismatchError, Ring, Scalar, sd_conjugate

NEG_INF = float("-inf")

_ATOM = re.compile(r"^[A-Za-z0-9]+$")


class DegenerateTraceError(ValueError):
    pass


class BezoutChainError(ValueError):
    def __init__(self, step: int):
        super().__init__(f"z is a root of p_{step}; the chain z_i = z^(p_(i-1)(z)) breaks")
        self.step = step


class SkewPoly:
    """An element of K[t;S,D]; immutable."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        cs = [c if (c.__class__ is Scalar and c.ring is ring) else ring(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ring: Ring, payloads) -> "SkewPoly":
        p = payloads
        isz = ring._is_zero
        n = len(p)
        while n and isz(p[n - 1]):
            n -= 1
        obj = object.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(Scalar(ring, v) for v in p[:n])
        return obj

    # constructors
    @classmethod
    def t(cls, ring: Ring) -> "SkewPoly":
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def constant(cls, ring: Ring, c) -> "SkewPoly":
        return cls(ring, [ring(c)])

    @classmethod
    def linear(cls, ring: Ring, a) -> "SkewPoly":
        """t - a."""
        return cls(ring, [-ring(a), ring.one])

    @classmethod
    def monomial(cls, ring: Ring, c, k: int) -> "SkewPoly":
        return cls(ring, [ring.zero] * k + [ring(c)])

    @classmethod
    def from_linear_factors(cls, ring: Ring, roots) -> "SkewPoly":
        """(t - b_n)...(t - b_1) for ``roots = [b_1, ..., b_n]``."""
        out = cls.constant(ring, ring.one)
        for b in roots:
            out = cls.linear(ring, b) * out
        return out

    # structure
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def coefficient_list(self, length: int) -> list[Scalar]:
        """Ascending coefficients padded with zeros to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [self.ring.zero] * (length - len(self.coeffs))

    def _coerce(self, o) -> "SkewPoly":
        if isinstance(o, SkewPoly):
            if o.ring is not self.ring and o.ring != self.ring:
                raise ContextMismatchError(f"{self.ring!r} vs {o.ring!r}")
            return o
        return SkewPoly(self.ring, [o])

    # arithmetic
    def __add__(self, o):
        o = self._coerce(o)
        R = self.ring
        a, b = [c.value for c in self.coeffs], [c.value for c in o.coeffs]
        if len(a) < len(b):
            a, b = b, a
        out = [R._add(x, y) for x, y in zip(a, b)] + a[len(b):]
        return SkewPoly._raw(R, out)

    def __radd__(self, o):
        return self._coerce(o) + self

    def __neg__(self):
        return SkewPoly._raw(self.ring, [self.ring._neg(c.value) for c in self.coeffs])

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        return smul(self, self._coerce(o))

    def __rmul__(self, o):
        # o * self with o a scalar: left multiplication of every coefficient
        R = self.ring
        c = R(o).value
        return SkewPoly._raw(R, [R._mul(c, x.value) for x in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = SkewPoly.constant(self.ring, self.ring.one)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, g):
        return right_divmod(self, g)

    def __mod__(self, g):
        return right_divmod(self, g)[1]

    def __floordiv__(self, g):
        return right_divmod(self, g)[0]

    def __call__(self, a) -> Scalar:
        return evaluate(self, self.ring(a))

    def __eq__(self, o):
        if isinstance(o, SkewPoly):
            return (o.ring is self.ring or o.ring == self.ring) and self.coeffs == o.coeffs
        if isinstance(o, (Scalar, int)):
            return self == SkewPoly(self.ring, [o])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            s = str(c)
            if k == 0:
                terms.append(s if _ATOM.match(s) else f"({s})")
                continue
            mono = "t" if k == 1 else f"t^{k}"
            terms.append(mono if c == self.ring.one else f"({s})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"SkewPoly({str(self)!r}, {self.ring.name})"


def _t_times(R: Ring, h: list) -> list:
    """Payload coefficients of t*h."""
    S, D, add = R._S, R._D, R._add
    out = [R._zero] * (len(h) + 1)
    for k, c in enumerate(h):
        out[k + 1] = add(out[k + 1], S(c))
        out[k] = add(out[k], D(c))
    return out


def smul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product in K[t;S,D]."""
    if f.ring is not g.ring and f.ring != g.ring:
        raise ContextMismatchError(f"{f.ring!r} vs {g.ring!r}")
    R = f.ring
    if not f.coeffs or not g.coeffs:
        return SkewPoly(R)
    add, mul, isz = R._add, R._mul, R._is_zero
    out = [R._zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    cur = [c.value for c in g.coeffs]
    for i, a in enumerate(f.coeffs):
        av = a.value
        if not isz(av):
            for k, c in enumerate(cur):
                out[k] = add(out[k], mul(av, c))
        if i + 1 < len(f.coeffs):
            cur = _t_times(R, cur)
    return SkewPoly._raw(R, out)


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """q, r with f = q*g + r and deg r < deg g."""
    if f.ring is not g.ring and f.ring != g.ring:
        raise ContextMismatchError(f"{f.ring!r} vs {g.ring!r}")
    R = f.ring
    if not g.coeffs:
        raise ZeroDivisionError("right division by the zero polynomial")
    dg = g.degree
    lead = g.lead.value
    q = [R._zero] * max(len(f.coeffs) - dg, 0)
    r = f
    lead_twists = {}
    while r.coeffs and r.degree >= dg:
        d = r.degree - dg
        if d not in lead_twists:
            s = lead
            for _ in range(d):
                s = R._S(s)
            lead_twists[d] = R._inv(s)  # raises NotInvertibleError
        c = R._mul(r.lead.value, lead_twists[d])
        q[d] = R._add(q[d], c)
        r = r - smul(SkewPoly._raw(R, [R._zero] * d + [c]), g)
    return SkewPoly._raw(R, q), r


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    """True when f lies in R*g."""
    return right_divmod(f, g)[1].is_zero()


def norm_N(a: Scalar, i: int) -> Scalar:
    """N_0(a) = 1, N_{i+1}(a) = S(N_i(a)) a + D(N_i(a))."""
    R = a.ring
    n = R._one
    for _ in range(i):
        n = R._add(R._mul(R._S(n), a.value), R._D(n))
    return Scalar(R, n)


def evaluate(f: SkewPoly, a: Scalar) -> Scalar:
    """f(a) = sum a_i N_i(a)."""
    R = f.ring
    if a.ring is not R and a.ring != R:
        raise ContextMismatchError(f"{a.ring!r} vs {R!r}")
    add, mul, S, D = R._add, R._mul, R._S, R._D
    av = a.value
    n = R._one
    out = R._zero
    for i, c in enumerate(f.coeffs):
        if i:
            n = add(mul(S(n), av), D(n))
        out = add(out, mul(c.value, n))
    return Scalar(R, out)


def product_formula(f: SkewPoly, g: SkewPoly, a: Scalar) -> Scalar:
    """(fg)(a) via 0 if g(a) = 0, else f(a^{g(a)}) g(a)."""
    ga = evaluate(g, a)
    if not ga:
        return a.ring.zero
    return evaluate(f, sd_conjugate(a, ga)) * ga


def llcm_linear(f: SkewPoly, a: Scalar) -> SkewPoly:
    """[f, t - a]_l for monic f: f if f(a) = 0, else (t - a^{f(a)}) f."""
    if not f.is_monic():
        raise ValueError("llcm_linear needs a monic polynomial")
    fa = evaluate(f, a)
    if not fa:
        return f
    return SkewPoly.linear(f.ring, sd_conjugate(a, fa)) * f


@dataclass
class LlcmTrace:
    """Step-by-step record of building p_n = [t - x_i | i <= n]_l."""

    points: list
    values: list = field(default_factory=list)      # p_{i-1}(x_i)
    exponents: list = field(default_factory=list)   # y_i, or None on a degenerate step
    partials: list = field(default_factory=list)    # p_0, ..., p_n
    degenerate: list = field(default_factory=list)

    @property
    def polynomial(self) -> SkewPoly:
        return self.partials[-1]

    @property
    def is_independent(self) -> bool:
        return not any(self.degenerate)

    @property
    def ring(self) -> Ring:
        return self.partials[0].ring

    def ys(self) -> list:
        if not self.is_independent:
            steps = [i + 1 for i, d in enumerate(self.degenerate) if d]
            raise DegenerateTraceError(f"degenerate steps {steps}")
        return list(self.exponents)


def llcm_set(points) -> LlcmTrace:
    """Least left common multiple of the t - x_i, adding roots in the given order."""
    points = list(points)
    if not points:
        raise ValueError("llcm_set needs at least one point")
    R = points[0].ring
    p = SkewPoly.constant(R, R.one)
    trace = LlcmTrace(points=points, partials=[p])
    for x in points:
        v = evaluate(p, x)
        trace.values.append(v)
        if v:
            y = sd_conjugate(x, v)
            p = SkewPoly.linear(R, y) * p
            trace.exponents.append(y)
            trace.degenerate.append(False)
        else:
            trace.exponents.append(None)
            trace.degenerate.append(True)
        trace.partials.append(p)
    return trace


def llcm(polys_or_points) -> SkewPoly:
    """Monic LLCM of linear polynomials t - x for the given points."""
    return llcm_set(polys_or_points).polynomial


@dataclass
class SymmetricTable:
    """table[i][k] = Lambda_k^i, so p_i = sum_k (-1)^k Lambda_k^i t^(i-k)."""

    ring: Ring
    table: list

    def poly(self, i: int) -> SkewPoly:
        row = self.table[i]
        coeffs = [self.ring.zero] * (i + 1)
        for k, lam in enumerate(row):
            coeffs[i - k] = lam if k % 2 == 0 else -lam
        return SkewPoly(self.ring, coeffs)

    def __getitem__(self, i):
        return self.table[i]


def symmetric_functions(trace: LlcmTrace) -> SymmetricTable:
    """Lambda_k^{i+1} = y_{i+1} Lambda_{k-1}^i + S(Lambda_k^i) - D(Lambda_{k-1}^i)."""
    ys = trace.ys()
    R = trace.ring
    table = [[R.one]]
    for i, y in enumerate(ys):
        prev = table[i]
        row = [R.one]
        for k in range(1, i + 2):
            cur = prev[k].S() if k <= i else R.zero
            row.append(y * prev[k - 1] + cur - prev[k - 1].D())
        table.append(row)
    return SymmetricTable(R, table)


def viete_check(trace: LlcmTrace) -> bool:
    """Check sum (-1)^k Lambda_k^i t^(i-k) = (t - y_i)...(t - y_1) = p_i at every level."""
    table = symmetric_functions(trace)
    R = trace.ring
    ys = trace.ys()
    for i in range(len(ys) + 1):
        expanded = SkewPoly.from_linear_factors(R, ys[:i])
        if not (table.poly(i) == expanded == trace.partials[i]):
            return False
    return True


def bezout_eval(trace: LlcmTrace, z: Scalar) -> tuple[Scalar, list]:
    """p_n(z) as the ordered product (z_n - y_n)...(z_1 - y_1).

    Returns the value and the factors [z_1 - y_1, ..., z_n - y_n].
    """
    ys = trace.ys()
    factors = []
    for i, y in enumerate(ys):
        pz = evaluate(trace.partials[i], z)
        if not pz:
            raise BezoutChainError(i)
        factors.append(sd_conjugate(z, pz) - y)
    value = z.ring.one
    for fct in factors:
        value = fct * value
    return value, factors


def pseudo_linear_apply(a: Scalar, x: Scalar) -> Scalar:
    """T_a(x) = S(x) a + D(x)."""
    R = a.ring
    return Scalar(R, R._add(R._mul(R._S(x.value), a.value), R._D(x.value)))


def operator_apply(f: SkewPoly, a: Scalar, x: Scalar) -> Scalar:
    """f(T_a)(x) = sum a_i T_a^i(x)."""
    R = f.ring
    add, mul, S, D = R._add, R._mul, R._S, R._D
    av = a.value
    cur = x.value
    out = R._zero
    for i, c in enumerate(f.coeffs):
        if i:
            cur = add(mul(S(cur), av), D(cur))
        out = add(out, mul(c.value, cur))
    return Scalar(R, out)


def miura_exponents(trace: LlcmTrace, a: Scalar, exponents) -> list:
    """w_i = p_{i-1}(T_a)(u_i)."""
    return [operator_apply(trace.partials[i], a, u) for i, u in enumerate(exponents)]


def miura_check(trace: LlcmTrace, a: Scalar, exponents, samples: int = 100,
                rng: _random.Random | None = None) -> bool:
    """Pointwise check of p_n(T_a) = (T_a - a^{w_n}) ... (T_a - a^{w_1}).

    On finite rings every element is tested; otherwise ``samples`` random ones.
    """
    R = a.ring
    exponents = list(exponents)
    for x, u in zip(trace.points, exponents):
        if not u or sd_conjugate(a, u) != x:
            raise ValueError("points are not the conjugates a^{u_i} of the given exponents")
    ys = trace.ys()
    ws = miura_exponents(trace, a, exponents)
    factors = [sd_conjugate(a, w) for w in ws]
    if factors != ys:
        return False
    if R.is_finite:
        test = R.elements()
    else:
        rng = rng or _random.Random(0)
        test = [R.random(rng) for _ in range(samples)]
    pn = trace.polynomial
    for x in test:
        v = x
        for c in factors:
            v = pseudo_linear_apply(a, v) - c * v
        if v != operator_apply(pn, a, x):
            return False
    return True


@dataclass
class PIndependence:
    independent: bool
    U: object                 # DivMatrix, rows indexed from 0, columns x_1..x_n
    factors: list             # [b_1, ..., b_n] with [t - x_j]_l = (t - b_n)...(t - b_1); empty if dependent

    def __iter__(self):
        return iter((self.independent, self.U))


def pindep_test(points) -> PIndependence:
    """U-matrix test: u_{0j} = 1, u_{i+1,j} = (x_j^{u_ij} - x_{i+1}^{u_{i,i+1}}) u_ij or 0."""
    from .matrix import DivMatrix
    points = list(points)
    if not points:
        raise ValueError("pindep_test needs at least one point")
    R = points[0].ring
    n = len(points)
    U = [[R.one] * n]
    for i in range(n - 1):
        prev = U[i]
        piv = prev[i]
        row = []
        for j in range(n):
            uij = prev[j]
            if not uij or not piv:
                row.append(R.zero)
            else:
                row.append((sd_conjugate(points[j], uij) - sd_conjugate(points[i], piv)) * uij)
        U.append(row)
    independent = bool(U[n - 1][n - 1])
    factors = [sd_conjugate(points[i], U[i][i]) for i in range(n)] if independent else []
    return PIndependence(independent, DivMatrix(R, U), factors)
