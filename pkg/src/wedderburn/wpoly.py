"""Wedderburn polynomials: roots, conjugacy classes, exponent spaces, and the
correspondence between linear factorizations and complete flags.

For a monic f with roots split into classes Delta(a_1), ..., Delta(a_r), the
exponent space E(f, a_i) = Ker f(T_{a_i}) is a right C_i-space, C_i being the
(S,D)-centralizer of a_i.  f is a W-polynomial exactly when
sum dim_{C_i} E(f, a_i) = deg f.  Subspaces of a finite field are stored as
frozensets of their elements.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .rings import (
    FiniteField,
    Ring,
    Scalar,
    UnsupportedContextError,
    centralizer_basis,
    conjugating_element,
    sd_conjugate,
)
from .skewpoly import (
    DegenerateTraceError,
    SkewPoly,
    evaluate,
    llcm_set,
    operator_apply,
)


class NotWPolynomialError(ValueError):
    pass


class InvalidFlagError(ValueError):
    pass


def _require_finite_field(ring: Ring, what: str):
    if not isinstance(ring, FiniteField):
        raise UnsupportedContextError(f"{what} is computed over finite fields only")


def root_set(f: SkewPoly, candidates=None) -> list[Scalar]:
    """Right roots of f: every element of a finite ring, or the roots among ``candidates``."""
    R = f.ring
    if candidates is None:
        if not R.is_finite:
            raise UnsupportedContextError(f"{R.name} is infinite; pass candidate roots")
        domain = R.elements()
    else:
        domain = []
        for c in candidates:
            c = R(c)
            if c not in domain:
                domain.append(c)
    return [a for a in domain if not evaluate(f, a)]


def _kernel_set(ring: FiniteField, fn) -> frozenset:
    return ring.span(ring.kernel_basis(lambda v: fn(Scalar(ring, v)).value))


def c_span(ring: FiniteField, vectors, cbasis) -> frozenset:
    """Right C-span of ``vectors``, C given by an F_p-basis."""
    return ring.span([v * c for v in vectors for c in cbasis])


def right_c_independent(a: Scalar, us) -> bool:
    """True when the u's are right linearly independent over C^{S,D}(a)."""
    R = a.ring
    _require_finite_field(R, "right C-independence")
    us = list(us)
    if any(not u for u in us):
        return False
    cb = centralizer_basis(a)
    return R.fp_rank([u * c for u in us for c in cb]) == len(us) * len(cb)


@dataclass
class ClassData:
    """Roots of f inside one (S,D)-conjugacy class, seen from a fixed representative."""

    representative: Scalar
    roots: list
    centralizer: list | None = None        # F_p-basis of C^{S,D}(a)
    exponents: list | None = None          # right C-basis of E(f, a)
    exponent_set: frozenset | None = None  # every element of E(f, a)

    @property
    def dim(self) -> int | None:
        return None if self.exponents is None else len(self.exponents)

    @property
    def centralizer_order(self) -> int | None:
        if self.centralizer is None:
            return None
        return self.representative.ring.p ** len(self.centralizer)


def exponent_space(f: SkewPoly, a: Scalar) -> ClassData:
    """E(f, a) = Ker f(T_a) with a right C^{S,D}(a)-basis found by greedy sifting."""
    R = a.ring
    _require_finite_field(R, "the exponent space")
    cb = centralizer_basis(a)
    kernel = R.kernel_basis(lambda v: operator_apply(f, a, Scalar(R, v)).value)
    basis = []
    spanned = frozenset([R.zero])
    for e in kernel:
        if e not in spanned:
            basis.append(e)
            spanned = c_span(R, basis, cb)
    full = R.span(kernel)
    assert spanned == full
    roots = sorted({sd_conjugate(a, u) for u in full if u}, key=lambda s: s.value)
    return ClassData(a, roots, cb, basis, full)


def class_decomposition(f: SkewPoly, roots) -> list[ClassData]:
    """Partition ``roots`` by (S,D)-conjugacy, first-seen representatives.

    Over finite fields each class also carries its centralizer and exponent space.
    """
    classes: list[ClassData] = []
    for b in roots:
        for cd in classes:
            if conjugating_element(cd.representative, b) is not None:
                cd.roots.append(b)
                break
        else:
            classes.append(ClassData(b, [b]))
    if isinstance(f.ring, FiniteField):
        out = []
        for cd in classes:
            full = exponent_space(f, cd.representative)
            full.roots = cd.roots
            out.append(full)
        return out
    return classes


def classes_of(f: SkewPoly) -> list[ClassData]:
    return class_decomposition(f, root_set(f))


class WVerdict(NamedTuple):
    is_wedderburn: bool
    weight: int


def is_w_polynomial(f: SkewPoly, candidates=None) -> WVerdict:
    """Weight sum dim_{C_i} E(f, a_i) compared with deg f.

    With explicit candidates (infinite rings) the weight is the degree of the
    LLCM of the roots found, which can only under-count the true weight.
    """
    if not f.is_monic():
        raise ValueError("W-polynomial test needs a monic polynomial")
    if candidates is None and isinstance(f.ring, FiniteField):
        weight = sum(cd.dim for cd in classes_of(f))
    else:
        roots = root_set(f, candidates)
        weight = llcm_set(roots).polynomial.degree if roots else 0
    return WVerdict(weight == f.degree, weight)


# --- flags and factorizations -------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """f = (t - factors[0]) * ... * (t - factors[-1]), written left to right."""

    factors: tuple

    @classmethod
    def from_build_order(cls, roots) -> "Factorization":
        """From [b_1, ..., b_n] where b_1 is the rightmost factor."""
        return cls(tuple(reversed(list(roots))))

    @property
    def build_order(self) -> list:
        return list(reversed(self.factors))

    def product(self, ring: Ring) -> SkewPoly:
        return SkewPoly.from_linear_factors(ring, self.build_order)

    def key(self) -> tuple:
        return tuple(str(b) for b in self.factors)

    def __str__(self):
        return "*".join(f"(t - ({b}))" for b in self.factors)


@dataclass(frozen=True)
class FlagChain:
    """M_0 = 0 < M_1 < ... < M_n; each M_k is a tuple of subspaces, one per class."""

    steps: tuple
    weights: tuple = field(default=())

    def grown(self, k: int) -> int:
        """Index of the class that grows from M_{k-1} to M_k (k >= 1)."""
        prev, cur = self.steps[k - 1], self.steps[k]
        changed = [i for i, (u, v) in enumerate(zip(prev, cur)) if u != v]
        if len(changed) != 1 or not prev[changed[0]] < cur[changed[0]]:
            raise InvalidFlagError(f"step {k} does not enlarge exactly one class")
        return changed[0]

    def __len__(self):
        return len(self.steps) - 1


def _dims(classes, subspaces) -> tuple:
    """C_i-dimensions, from |U| = |C_i|^dim."""
    out = []
    for cd, U in zip(classes, subspaces):
        q = cd.centralizer_order
        d, size = 0, 1
        while size < len(U):
            size *= q
            d += 1
        if size != len(U):
            raise InvalidFlagError("subspace size is not a power of the centralizer order")
        out.append(d)
    return tuple(out)


def weight(classes, subspaces) -> int:
    return sum(_dims(classes, subspaces))


def _extensions(R: FiniteField, cd: ClassData, U: frozenset) -> list[frozenset]:
    seen = set()
    out = []
    basis = _basis_of(R, cd, U)
    for v in sorted(cd.exponent_set - U, key=lambda s: s.value):
        if v in seen:
            continue
        V = c_span(R, basis + [v], cd.centralizer)
        seen |= V
        out.append(V)
    return out


def _basis_of(R: FiniteField, cd: ClassData, U: frozenset) -> list:
    basis = []
    spanned = frozenset([R.zero])
    for v in sorted(U, key=lambda s: s.value):
        if v not in spanned:
            basis.append(v)
            spanned = c_span(R, basis, cd.centralizer)
    return basis


def _grow(R, classes, chain, n, out):
    cur = chain[-1]
    if len(chain) - 1 == n:
        out.append(FlagChain(tuple(chain), tuple(range(n + 1))))
        return
    for i, cd in enumerate(classes):
        for V in _extensions(R, cd, cur[i]):
            nxt = cur[:i] + (V,) + cur[i + 1:]
            _grow(R, classes, chain + [nxt], n, out)


def enumerate_flags(f: SkewPoly, classes=None, jobs: int | None = None) -> list[FlagChain]:
    """All complete flags of E(f) = prod_i E(f, a_i)."""
    R = f.ring
    _require_finite_field(R, "flag enumeration")
    classes = classes if classes is not None else classes_of(f)
    n = f.degree
    if sum(cd.dim for cd in classes) != n:
        raise NotWPolynomialError(f"{f} is not a W-polynomial")
    zero = tuple(frozenset([R.zero]) for _ in classes)
    firsts = []
    for i, cd in enumerate(classes):
        for V in _extensions(R, cd, zero[i]):
            firsts.append(zero[:i] + (V,) + zero[i + 1:])

    def run(first):
        out = []
        _grow(R, classes, [zero, first], n, out)
        return out

    if jobs and jobs > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, firsts))
    else:
        parts = [run(x) for x in firsts]
    return [flag for part in parts for flag in part]


def factorization_from_flag(f: SkewPoly, flag: FlagChain, classes=None) -> Factorization:
    """p_k = [t - a_j^v, p_{k-1}]_l for any v in M_k \\ M_{k-1} of the growing class j."""
    R = f.ring
    classes = classes if classes is not None else classes_of(f)
    p = SkewPoly.constant(R, R.one)
    roots = []
    for k in range(1, len(flag) + 1):
        j = flag.grown(k)
        cd = classes[j]
        new = flag.steps[k][j] - flag.steps[k - 1][j]
        v = min(new, key=lambda s: s.value)
        w = operator_apply(p, cd.representative, v)
        if not w:
            raise InvalidFlagError(f"step {k}: generator already killed by p_{k - 1}(T_a)")
        b = sd_conjugate(cd.representative, w)
        roots.append(b)
        p = SkewPoly.linear(R, b) * p
    if p != f:
        raise InvalidFlagError("flag does not produce a factorization of f")
    return Factorization.from_build_order(roots)


def flag_from_factorization(f: SkewPoly, fac: Factorization, classes=None) -> FlagChain:
    """M_k = prod_i Ker p_k(T_{a_i}) for the partial products p_k."""
    R = f.ring
    _require_finite_field(R, "flag_from_factorization")
    if fac.product(R) != f:
        raise ValueError("factorization does not multiply to f")
    classes = classes if classes is not None else classes_of(f)
    p = SkewPoly.constant(R, R.one)
    steps = [tuple(frozenset([R.zero]) for _ in classes)]
    for b in fac.build_order:
        p = SkewPoly.linear(R, b) * p
        q = p
        steps.append(tuple(
            _kernel_set(R, lambda x, a=cd.representative: operator_apply(q, a, x)) for cd in classes))
    weights = tuple(weight(classes, s) for s in steps)
    if weights != tuple(range(len(steps))):
        raise InvalidFlagError(f"kernel weights {weights} are not 0, 1, ..., n")
    return FlagChain(tuple(steps), weights)


def enumerate_factorizations(f: SkewPoly, jobs: int | None = None) -> list[Factorization]:
    """Every factorization of a W-polynomial into monic linear factors, sorted by printed factors."""
    if not f.is_monic():
        raise ValueError("factorization needs a monic polynomial")
    classes = classes_of(f)
    flags = enumerate_flags(f, classes, jobs)
    facs = [factorization_from_flag(f, flag, classes) for flag in flags]
    return sorted(facs, key=Factorization.key)


def brute_force_factorizations(f: SkewPoly) -> list[Factorization]:
    """Search over all root sequences; an independent oracle for small finite fields."""
    R = f.ring
    out = []

    def rec(g, acc):
        # g = remaining left part; peel right linear factors
        if g.degree == 0:
            out.append(Factorization.from_build_order(acc))
            return
        for b in R.elements():
            q, r = divmod(g, SkewPoly.linear(R, b))
            if not r:
                rec(q, acc + [b])
    rec(f, [])
    return sorted(out, key=Factorization.key)


# --- quadratic relations ------------------------------------------------------

def _exponent_point(points, A, i) -> Scalar:
    """x_{A,i} = x_i^{p_A(x_i)}, p_A the LLCM of the points indexed by A."""
    x = points[i]
    if not A:
        return x
    trace = llcm_set([points[a] for a in A])
    if not trace.is_independent:
        raise DegenerateTraceError(f"points {sorted(A)} are P-dependent")
    v = evaluate(trace.polynomial, x)
    if not v:
        raise DegenerateTraceError(f"x_{i} is a root of p_{sorted(A)}")
    return sd_conjugate(x, v)


def quadratic_relations_check(points, A, i: int, j: int) -> bool:
    """Both orders of adding x_i, x_j to p_A give the same quadratic left factor:

        x_{A+i,j} + S(x_{A,i}) = x_{A+j,i} + S(x_{A,j})
        x_{A+i,j} x_{A,i} - D(x_{A,i}) = x_{A+j,i} x_{A,j} - D(x_{A,j})

    from (t - c)(t - a) = t^2 - (c + S(a)) t + (c a - D(a)).
    """
    points = list(points)
    A = list(A)
    if i in A or j in A or i == j:
        raise ValueError("i and j must be distinct and outside A")
    xai = _exponent_point(points, A, i)
    xaj = _exponent_point(points, A, j)
    xaij = _exponent_point(points, A + [i], j)
    xaji = _exponent_point(points, A + [j], i)
    additive = xaij + xai.S() == xaji + xaj.S()
    multiplicative = xaij * xai - xai.D() == xaji * xaj - xaj.D()
    return additive and multiplicative
