"""Coefficient rings with an (endomorphism, derivation) twist.

A ring object owns exact arithmetic on canonical payloads; ``Scalar`` wraps a
payload together with its ring so elements can be combined with ordinary
operators.  The twist ``(S, D)`` is part of the ring's identity: the same
field with two different twists gives two incompatible contexts.

Twist descriptors are tuples:

    endomorphism: ("identity",) | ("frobenius", k) | ("inner", q) | ("subs", h)
    derivation:   ("zero",) | ("ddx",) | ("inner", beta) | ("sum", d1, d2, ...)

``inner`` means x -> q x q^-1 for S and x -> beta x - S(x) beta for D.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import _fp
from . import _polyq as pq

NUMBERS = (int, Fraction, type(pq.Q()))


class NotInvertibleError(ZeroDivisionError):
    pass


class ContextMismatchError(TypeError):
    pass


class UnsupportedContextError(NotImplementedError):
    pass


@dataclass(frozen=True)
class Twist:
    endo: tuple = ("identity",)
    deriv: tuple = ("zero",)

    @property
    def is_trivial(self) -> bool:
        return self.endo == ("identity",) and self.deriv == ("zero",)


class Scalar:
    """An element of a ``Ring``; immutable."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: "Ring", value):
        self.ring = ring
        self.value = value

    def _other(self, o):
        if o.__class__ is Scalar:
            if o.ring is not self.ring and o.ring != self.ring:
                raise ContextMismatchError(f"{self.ring!r} vs {o.ring!r}")
            return o.value
        if isinstance(o, NUMBERS):
            return self.ring._from_number(o)
        return NotImplemented

    def __add__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._add(self.value, v))

    def __radd__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._add(v, self.value))

    def __sub__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._sub(self.value, v))

    def __rsub__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._sub(v, self.value))

    def __mul__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._mul(self.value, v))

    def __rmul__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._mul(v, self.value))

    def __neg__(self):
        return Scalar(self.ring, self.ring._neg(self.value))

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        return Scalar(self.ring, self.ring._inv(self.value))

    def __truediv__(self, o):
        """Right division: self * o^-1."""
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._mul(self.value, self.ring._inv(v)))

    def __rtruediv__(self, o):
        v = self._other(o)
        if v is NotImplemented:
            return v
        return Scalar(self.ring, self.ring._mul(v, self.ring._inv(self.value)))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = self.ring.one
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if o.__class__ is Scalar:
            return (o.ring is self.ring or o.ring == self.ring) and self.ring._eq(self.value, o.value)
        if isinstance(o, NUMBERS):
            return self.ring._eq(self.value, self.ring._from_number(o))
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return not self.ring._is_zero(self.value)

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.value)

    def S(self) -> "Scalar":
        return Scalar(self.ring, self.ring._S(self.value))

    def D(self) -> "Scalar":
        return Scalar(self.ring, self.ring._D(self.value))

    def conj(self, c: "Scalar") -> "Scalar":
        """The (S,D)-conjugate a^c = S(c) a c^-1 + D(c) c^-1."""
        return sd_conjugate(self, c)

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Scalar({self.ring.format(self.value)!r}, {self.ring.name})"


class Ring:
    """Base class for exact coefficient rings."""

    is_division = False
    is_finite = False
    is_commutative = False
    symbols: dict = {}
    name = "ring"

    def __init__(self, twist: Twist | None = None):
        self.twist = twist or Twist()
        self.zero = Scalar(self, self._zero)
        self.one = Scalar(self, self._one)
        self._S = self._build_endo(self.twist.endo)
        self._D = self._build_deriv(self.twist.deriv)

    # structure ------------------------------------------------------------
    def _key(self) -> tuple:
        return ()

    def _params(self) -> tuple:
        return ()

    def __eq__(self, o):
        return (
            type(o) is type(self)
            and self._key() == o._key()
            and self.twist == o.twist
        )

    def __hash__(self):
        return hash((type(self).__name__, self._key(), self.twist))

    def __repr__(self):
        if self.twist.is_trivial:
            return f"<{self.name}>"
        return f"<{self.name} S={self.twist.endo[0]} D={self.twist.deriv[0]}>"

    @property
    def untwisted(self) -> "Ring":
        return type(self)(*self._params())

    def with_twist(self, S=None, D=None) -> "Ring":
        """Same structure with endomorphism ``S`` and derivation ``D``.

        Descriptor arguments may hold Scalars or element strings in place of
        payloads, e.g. ``F.with_twist(S=("frobenius", 1), D=("inner", "w"))``.
        """
        base = self.untwisted
        endo = _payload_descriptor(base, S) if S is not None else ("identity",)
        deriv = _payload_descriptor(base, D) if D is not None else ("zero",)
        return type(self)(*self._params(), twist=Twist(endo, deriv))

    # payload arithmetic (overridden) ---------------------------------------
    _zero = None
    _one = None

    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotInvertibleError(f"{self.format(a)} is not invertible in {self.name}")

    def _eq(self, a, b):
        return a == b

    def _is_zero(self, a):
        return self._eq(a, self._zero)

    def _from_number(self, n):
        raise TypeError(f"cannot coerce {n!r} into {self.name}")

    def format(self, v) -> str:
        return repr(v)

    # twist construction ----------------------------------------------------
    def _build_endo(self, desc: tuple):
        kind = desc[0]
        if kind == "identity":
            return lambda v: v
        if kind == "inner":
            q = desc[1]
            qi = self._inv(q)
            return lambda v: self._mul(self._mul(q, v), qi)
        return self._endo_hook(desc)

    def _endo_hook(self, desc: tuple):
        raise ValueError(f"endomorphism {desc[0]!r} not available on {self.name}")

    def _build_deriv(self, desc: tuple):
        kind = desc[0]
        if kind == "zero":
            return lambda v: self._zero
        if kind == "inner":
            beta = desc[1]
            S = self._S
            return lambda v: self._sub(self._mul(beta, v), self._mul(S(v), beta))
        if kind == "sum":
            parts = [self._build_deriv(d) for d in desc[1:]]

            def _sum(v):
                out = self._zero
                for part in parts:
                    out = self._add(out, part(v))
                return out
            return _sum
        return self._deriv_hook(desc)

    def _deriv_hook(self, desc: tuple):
        raise ValueError(f"derivation {desc[0]!r} not available on {self.name}")

    # element construction --------------------------------------------------
    def __call__(self, x) -> Scalar:
        if isinstance(x, Scalar):
            if x.ring is self or x.ring == self:
                return x
            if x.ring.untwisted == self.untwisted:
                return Scalar(self, x.value)
            raise ContextMismatchError(f"{x.ring!r} vs {self!r}")
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, NUMBERS):
            return Scalar(self, self._from_number(x))
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot build an element of {self.name} from {x!r}")

    def element(self, payload) -> Scalar:
        return Scalar(self, payload)

    def parse(self, text: str) -> Scalar:
        from .parsing import parse_element
        return parse_element(self, text)

    def symbol(self, name: str) -> Scalar:
        try:
            return Scalar(self, self.symbols[name])
        except KeyError:
            raise KeyError(f"unknown symbol {name!r} in {self.name}") from None

    def S(self, a: Scalar) -> Scalar:
        return Scalar(self, self._S(a.value))

    def D(self, a: Scalar) -> Scalar:
        return Scalar(self, self._D(a.value))

    def elements(self) -> list[Scalar]:
        raise UnsupportedContextError(f"{self.name} is not finite")

    def nonzero_elements(self) -> list[Scalar]:
        return [e for e in self.elements() if e]

    def random(self, rng: _random.Random) -> Scalar:
        raise NotImplementedError

    def random_nonzero(self, rng: _random.Random) -> Scalar:
        while True:
            x = self.random(rng)
            if x:
                return x

    def is_unit(self, a: Scalar) -> bool:
        try:
            self._inv(a.value)
        except NotInvertibleError:
            return False
        return True

    # left solving: c * r = rhs ---------------------------------------------
    def solve_left(self, r: Scalar, rhs: Scalar) -> tuple[Scalar | None, str | None]:
        """Find c with c*r == rhs; returns (c, None) or (None, certificate)."""
        if self.is_division:
            if r:
                return rhs * r.inverse(), None
            if not rhs:
                return self.zero, None
            return None, "r = 0 but right-hand side is nonzero"
        if self.is_finite:
            for c in self.elements():
                if c * r == rhs:
                    return c, None
            return None, f"exhaustive search over {self.order} elements found no c"
        raise UnsupportedContextError(f"no left solver for {self.name}")


def _payload_descriptor(ring: Ring, desc) -> tuple:
    if isinstance(desc, str):
        desc = (desc,)
    out = [desc[0]]
    for item in desc[1:]:
        if isinstance(item, tuple) and item and isinstance(item[0], str):
            out.append(_payload_descriptor(ring, item))
        elif isinstance(item, int) and desc[0] == "frobenius":
            out.append(item)
        else:
            out.append(ring(item).value)
    return tuple(out)


# --- (S,D) notions shared by every ring ------------------------------------

def sd_conjugate(a: Scalar, c: Scalar) -> Scalar:
    """a^c = S(c) a c^-1 + D(c) c^-1."""
    if not c:
        raise ZeroDivisionError("conjugation by zero")
    ring = a.ring
    ci = c.inverse()
    return Scalar(ring, ring._add(
        ring._mul(ring._mul(ring._S(c.value), a.value), ci.value),
        ring._mul(ring._D(c.value), ci.value),
    ))


def is_in_centralizer(a: Scalar, x: Scalar) -> bool:
    return bool(x) and sd_conjugate(a, x) == a


def centralizer_basis(a: Scalar) -> list[Scalar]:
    """F_p-basis of C^{S,D}(a) = Ker(x -> S(x)a + D(x) - ax), finite fields only."""
    ring = a.ring
    if not isinstance(ring, FiniteField):
        raise UnsupportedContextError("centralizer bases are computed for finite fields only")
    return ring.kernel_basis(lambda x: ring._sub(ring._add(ring._mul(ring._S(x), a.value), ring._D(x)),
                                                  ring._mul(a.value, x)))


def conjugating_element(a: Scalar, b: Scalar) -> Scalar | None:
    """Some x != 0 with a^x = b, or None when a and b are not (S,D)-conjugate."""
    ring = a.ring
    if isinstance(ring, FiniteField):
        basis = ring.kernel_basis(lambda x: ring._sub(ring._add(ring._mul(ring._S(x), a.value), ring._D(x)),
                                                       ring._mul(b.value, x)))
        return basis[0] if basis else None
    if isinstance(ring, QuaternionAlgebra):
        return ring.conjugator(a, b)
    if ring.is_commutative and ring.twist.is_trivial:
        return ring.one if a == b else None
    raise UnsupportedContextError(f"conjugacy is not decidable here for {ring!r}")


# --- rationals --------------------------------------------------------------

class RationalField(Ring):
    is_division = True
    is_commutative = True
    name = "Q"
    _zero = Fraction(0)
    _one = Fraction(1)

    def __init__(self, twist: Twist | None = None):
        super().__init__(twist)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if not a:
            raise NotInvertibleError("0 is not invertible")
        return 1 / a

    def _is_zero(self, a):
        return not a

    def _from_number(self, n):
        return Fraction(n)

    def format(self, v):
        return str(v)

    def random(self, rng):
        return Scalar(self, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))


# --- finite fields ----------------------------------------------------------

BUILTIN_FIELDS = {
    "f2": (2, (0, 1)),
    "f3": (3, (0, 1)),
    "f4": (2, (1, 1, 1)),
    "f5": (5, (0, 1)),
    "f7": (7, (0, 1)),
    "f8": (2, (1, 1, 0, 1)),
    "f9": (3, (1, 0, 1)),
    "f16": (2, (1, 1, 0, 0, 1)),
    "f25": (5, (2, 0, 1)),
    "f27": (3, (1, 2, 0, 1)),
}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


class FiniteField(Ring):
    """F_p[w]/(m(w)); elements are integers whose base-p digits are coefficients of w^i."""

    is_division = True
    is_finite = True
    is_commutative = True

    def __init__(self, p: int, modulus, twist: Twist | None = None):
        modulus = tuple(int(c) % p for c in modulus)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not modulus or modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not pq.fp_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.k = len(modulus) - 1
        self.q = self.order = p ** self.k
        self.name = f"F{self.q}"
        self._zero, self._one = 0, 1
        self._build_tables()
        gen = self._encode(pq.fp_mod((0, 1), modulus, p))
        self.symbols = {"w": gen}
        super().__init__(twist)
        q = self.q
        self._S = [self._S(v) for v in range(q)].__getitem__
        self._D = [self._D(v) for v in range(q)].__getitem__
        self._elements = [Scalar(self, v) for v in range(q)]

    @classmethod
    def builtin(cls, name: str, twist: Twist | None = None) -> "FiniteField":
        p, m = BUILTIN_FIELDS[name]
        return cls(p, m, twist)

    def _key(self):
        return (self.p, self.modulus)

    def _params(self):
        return (self.p, self.modulus)

    # digits <-> ints
    def _decode(self, v: int) -> tuple:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(v % p)
            v //= p
        return tuple(out)

    def _encode(self, digits) -> int:
        v = 0
        for d in reversed(tuple(digits) + (0,) * (self.k - len(digits))):
            v = v * self.p + d % self.p
        return v

    def _slow_mul(self, a: int, b: int) -> int:
        return self._encode(pq.fp_mod(pq.fp_mul(pq.fp_strip(self._decode(a), self.p),
                                                  pq.fp_strip(self._decode(b), self.p), self.p),
                                      self.modulus, self.p))

    def _build_tables(self):
        q, p = self.q, self.p
        gen = None
        for g in range(1, q):
            x, order = g, 1
            while x != 1:
                x = self._slow_mul(x, g)
                order += 1
            if order == q - 1:
                gen = g
                break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._slow_mul(exp[i - 1], gen)
        self._exp = exp + exp
        self._log = {v: i for i, v in enumerate(exp)}
        self._primitive = gen
        if p == 2:
            self._addf = int.__xor__
            self._negt = list(range(q))
        else:
            dec = [self._decode(v) for v in range(q)]
            if q <= 729:
                table = [[self._encode([x + y for x, y in zip(dec[a], dec[b])]) for b in range(q)]
                         for a in range(q)]
                self._addf = lambda a, b: table[a][b]
            else:
                self._addf = lambda a, b: self._encode([x + y for x, y in zip(dec[a], dec[b])])
            self._negt = [self._encode([-x for x in dec[a]]) for a in range(q)]

    def _add(self, a, b):
        return self._addf(a, b)

    def _neg(self, a):
        return self._negt[a]

    def _sub(self, a, b):
        return self._addf(a, self._negt[b])

    def _mul(self, a, b):
        if not a or not b:
            return 0
        log = self._log
        return self._exp[log[a] + log[b]]

    def _inv(self, a):
        if not a:
            raise NotInvertibleError("0 is not invertible")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def _eq(self, a, b):
        return a == b

    def _is_zero(self, a):
        return not a

    def _from_number(self, n):
        n = Fraction(n)
        num = n.numerator % self.p
        den = n.denominator % self.p
        if not den:
            raise ZeroDivisionError(f"{n} has no image in characteristic {self.p}")
        return self._encode([num * pow(den, -1, self.p)])

    def _endo_hook(self, desc):
        if desc[0] == "frobenius":
            power = self.p ** (desc[1] if len(desc) > 1 else 1)
            q1 = self.q - 1
            exp, log = self._exp, self._log
            return lambda v: exp[(log[v] * power) % q1] if v else 0
        return super()._endo_hook(desc)

    def format(self, v):
        digits = self._decode(v)
        parts = []
        for i in range(self.k - 1, -1, -1):
            c = digits[i]
            if not c:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def elements(self):
        return list(self._elements)

    def random(self, rng):
        return self._elements[rng.randrange(self.q)]

    # F_p-linear structure
    def to_vector(self, a: Scalar | int) -> list[int]:
        v = a.value if isinstance(a, Scalar) else a
        return list(self._decode(v))

    def from_vector(self, vec) -> Scalar:
        return self._elements[self._encode(vec)]

    def kernel_basis(self, fn) -> list[Scalar]:
        """F_p-basis of the kernel of an F_p-linear payload map ``fn``."""
        k = self.k
        images = [self._decode(fn(self._encode([1 if j == i else 0 for j in range(k)]))) for i in range(k)]
        matrix = [[images[c][r] for c in range(k)] for r in range(k)]
        return [self.from_vector(v) for v in _fp.nullspace(matrix, self.p, k)]

    def span(self, gens) -> frozenset:
        """F_p-span of ``gens`` as a frozenset of Scalars."""
        vecs = [self.to_vector(g) for g in gens]
        return frozenset(self.from_vector(v) for v in _fp.span(vecs, self.p, self.k))

    def fp_rank(self, gens) -> int:
        return _fp.rank([self.to_vector(g) for g in gens], self.p) if gens else 0


# --- rational function field Q(x) -------------------------------------------

class RationalFunctionField(Ring):
    """Q(x); payload (num, den) with den monic and coprime to num."""

    is_division = True
    is_commutative = True
    name = "Q(x)"

    def __init__(self, twist: Twist | None = None):
        self._zero = ((), pq.ONE)
        self._one = (pq.ONE, pq.ONE)
        self.symbols = {"x": ((pq.Q(0), pq.Q(1)), pq.ONE)}
        super().__init__(twist)

    @staticmethod
    def _norm(num, den):
        if not num:
            return ((), pq.ONE)
        if len(den) > 1:
            g = pq.gcd(num, den)
            if len(g) > 1:
                num = pq.divmod_(num, g)[0]
                den = pq.divmod_(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = pq.scale(num, 1 / lead)
            den = pq.scale(den, 1 / lead)
        return (num, den)

    def _add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        if d1 == d2 == pq.ONE:
            return (pq.add(n1, n2), pq.ONE)
        if d1 == d2:
            return self._norm(pq.add(n1, n2), d1)
        # n1/d1 + n2 is already reduced when d1 is coprime to n1
        if d2 == pq.ONE:
            return self._norm_unit(pq.add(n1, pq.mul(n2, d1)), d1)
        if d1 == pq.ONE:
            return self._norm_unit(pq.add(n2, pq.mul(n1, d2)), d2)
        return self._norm(pq.add(pq.mul(n1, d2), pq.mul(n2, d1)), pq.mul(d1, d2))

    @staticmethod
    def _norm_unit(num, den):
        return (num, den) if num else ((), pq.ONE)

    def _neg(self, a):
        return (pq.neg(a[0]), a[1])

    def _mul(self, a, b):
        (n1, d1), (n2, d2) = a, b
        if d1 == d2 == pq.ONE:
            return (pq.mul(n1, n2), pq.ONE)
        if not n1 or not n2:
            return self._zero
        # cancel across: gcd(n1, d1) = gcd(n2, d2) = 1 already
        g1, g2 = pq.gcd(n1, d2), pq.gcd(n2, d1)
        if len(g1) > 1:
            n1, d2 = pq.divmod_(n1, g1)[0], pq.divmod_(d2, g1)[0]
        if len(g2) > 1:
            n2, d1 = pq.divmod_(n2, g2)[0], pq.divmod_(d1, g2)[0]
        num, den = pq.mul(n1, n2), pq.mul(d1, d2)
        lead = den[-1]
        if lead != 1:
            num, den = pq.scale(num, 1 / lead), pq.scale(den, 1 / lead)
        return (num, den)

    def _inv(self, a):
        if not a[0]:
            raise NotInvertibleError("0 is not invertible")
        return self._norm(a[1], a[0])

    def _is_zero(self, a):
        return not a[0]

    def _from_number(self, n):
        return (pq.const(n), pq.ONE)

    def _endo_hook(self, desc):
        if desc[0] == "subs":
            h = desc[1]
            if len(h[0]) <= 1 and len(h[1]) <= 1:
                raise ValueError("substitution image must be nonconstant")
            return lambda v: self.compose(v, h)
        return super()._endo_hook(desc)

    def _deriv_hook(self, desc):
        if desc[0] == "ddx":
            if self.twist.endo != ("identity",):
                raise ValueError("d/dx is an S-derivation only for S = identity")

            def ddx(v):
                n, d = v
                return self._norm(pq.sub(pq.mul(pq.deriv(n), d), pq.mul(n, pq.deriv(d))), pq.mul(d, d))
            return ddx
        return super()._deriv_hook(desc)

    def compose(self, v, h):
        """v(h(x)) for payloads v, h."""
        n, d = v

        def horner(poly):
            out = self._zero
            for c in reversed(poly):
                out = self._add(self._mul(out, h), self._from_number(c))
            return out
        return self._mul(horner(n), self._inv(horner(d)))

    def format(self, v):
        n, d = v
        if d == pq.ONE:
            return pq.fmt(n)
        return f"({pq.fmt(n)})/({pq.fmt(d)})"

    def random(self, rng):
        num = pq.strip([pq.Q(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        if rng.random() < 0.5:
            den = pq.ONE
        else:
            den = (pq.Q(rng.randint(-3, 3)), pq.Q(1))
        return Scalar(self, self._norm(num, den))


# --- quaternions over Q -----------------------------------------------------

def _q_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


class QuaternionAlgebra(Ring):
    """Hamilton quaternions over Q; payload (w, x, y, z) meaning w + x i + y j + z k."""

    is_division = True
    name = "H(Q)"

    def __init__(self, twist: Twist | None = None):
        F0, F1 = Fraction(0), Fraction(1)
        self._zero = (F0, F0, F0, F0)
        self._one = (F1, F0, F0, F0)
        self.symbols = {"i": (F0, F1, F0, F0), "j": (F0, F0, F1, F0), "k": (F0, F0, F0, F1)}
        super().__init__(twist)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def _sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def _neg(self, a):
        return (-a[0], -a[1], -a[2], -a[3])

    def _mul(self, a, b):
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def _inv(self, a):
        n = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]
        if not n:
            raise NotInvertibleError("0 is not invertible")
        return (a[0] / n, -a[1] / n, -a[2] / n, -a[3] / n)

    def _is_zero(self, a):
        return not (a[0] or a[1] or a[2] or a[3])

    def _from_number(self, n):
        F0 = Fraction(0)
        return (Fraction(n), F0, F0, F0)

    def norm(self, a: Scalar) -> Fraction:
        return sum(c * c for c in a.value)

    def trace(self, a: Scalar) -> Fraction:
        return 2 * a.value[0]

    def conjugator(self, a: Scalar, b: Scalar) -> Scalar | None:
        """Nonzero x with S(x) a + D(x) = b x, by Q-linear algebra on Q^4."""
        basis = [Scalar(self, tuple(Fraction(int(i == j)) for j in range(4))) for i in range(4)]
        cols = [(e.S() * a + e.D() - b * e).value for e in basis]
        rows = [[cols[c][r] for c in range(4)] for r in range(4)]
        null = _q_nullspace(rows, 4)
        return Scalar(self, tuple(null[0])) if null else None

    def format(self, v):
        parts = []
        for c, unit in zip(v, ("", "i", "j", "k")):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            m = abs(c)
            if not unit:
                body = str(m)
            elif m == 1:
                body = unit
            else:
                body = f"{m}*{unit}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def random(self, rng):
        return Scalar(self, tuple(Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2))) for _ in range(4)))


# --- general rings for the LLCM-existence criteria --------------------------

class IntegersMod(Ring):
    is_finite = True
    is_commutative = True

    def __init__(self, n: int, twist: Twist | None = None):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.n = self.order = n
        self.name = f"Z/{n}Z"
        self._zero, self._one = 0, 1
        super().__init__(twist)
        self.is_division = _is_prime(n)

    def _key(self):
        return (self.n,)

    def _params(self):
        return (self.n,)

    def _add(self, a, b):
        return (a + b) % self.n

    def _neg(self, a):
        return -a % self.n

    def _sub(self, a, b):
        return (a - b) % self.n

    def _mul(self, a, b):
        return a * b % self.n

    def _inv(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            raise NotInvertibleError(f"{a} is not a unit mod {self.n}") from None

    def _from_number(self, n):
        n = Fraction(n)
        return n.numerator * self._inv(n.denominator % self.n) % self.n

    def format(self, v):
        return str(v)

    def elements(self):
        return [Scalar(self, v) for v in range(self.n)]

    def random(self, rng):
        return Scalar(self, rng.randrange(self.n))

    def solve_left(self, r, rhs):
        if self.n <= 64:
            for c in range(self.n):
                if c * r.value % self.n == rhs.value:
                    return Scalar(self, c), None
            return None, f"no c in Z/{self.n}Z with c*{r} = {rhs}"
        from math import gcd
        g = gcd(r.value, self.n)
        if rhs.value % g:
            return None, f"gcd({r}, {self.n}) = {g} does not divide {rhs}"
        m = self.n // g
        c = (rhs.value // g) * pow(r.value // g, -1, m) % m if m > 1 else 0
        return Scalar(self, c), None


class MatrixRing(Ring):
    """n x n matrices over a commutative field ``base``; payload is a tuple of row tuples."""

    def __init__(self, base: Ring, n: int = 2, twist: Twist | None = None):
        if not (base.is_commutative and base.is_division):
            raise ValueError("matrix rings are supported over commutative fields only")
        self.base = base.untwisted
        self.n = n
        self.name = f"M{n}({self.base.name})"
        b = self.base
        self._zero = tuple(tuple(b._zero for _ in range(n)) for _ in range(n))
        self._one = tuple(tuple(b._one if i == j else b._zero for j in range(n)) for i in range(n))
        self.is_finite = b.is_finite
        if self.is_finite:
            self.order = b.order ** self._free_count()
        super().__init__(twist)

    def _key(self):
        return (self.base, self.n)

    def _params(self):
        return (self.base, self.n)

    def _positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(self.n)]

    def _free_count(self) -> int:
        return len(self._positions())

    def _add(self, a, b):
        add = self.base._add
        return tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def _sub(self, a, b):
        sub = self.base._sub
        return tuple(tuple(sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def _neg(self, a):
        neg = self.base._neg
        return tuple(tuple(neg(x) for x in r) for r in a)

    def _mul(self, a, b):
        B = self.base
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = B._zero
                for k in range(n):
                    s = B._add(s, B._mul(a[i][k], b[k][j]))
                row.append(s)
            out.append(tuple(row))
        return tuple(out)

    def _inv(self, a):
        B = self.base
        n = self.n
        m = [list(a[i]) + [B._one if i == j else B._zero for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((i for i in range(c, n) if not B._is_zero(m[i][c])), None)
            if piv is None:
                raise NotInvertibleError(f"{self.format(a)} is singular")
            m[c], m[piv] = m[piv], m[c]
            inv = B._inv(m[c][c])
            m[c] = [B._mul(inv, x) for x in m[c]]
            for i in range(n):
                if i != c and not B._is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [B._sub(x, B._mul(f, y)) for x, y in zip(m[i], m[c])]
        return tuple(tuple(r[n:]) for r in m)

    def _is_zero(self, a):
        return a == self._zero

    def _from_number(self, n):
        B = self.base
        c = B._from_number(n)
        return tuple(tuple(c if i == j else B._zero for j in range(self.n)) for i in range(self.n))

    def from_rows(self, rows) -> Scalar:
        B = self.base
        payload = tuple(tuple(B(x).value for x in r) for r in rows)
        if len(payload) != self.n or any(len(r) != self.n for r in payload):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        self._check_member(payload)
        return Scalar(self, payload)

    def _check_member(self, payload):
        pass

    def format(self, v):
        B = self.base
        return "[" + ", ".join("[" + ", ".join(B.format(x) for x in r) + "]" for r in v) + "]"

    def elements(self):
        if not self.is_finite:
            raise UnsupportedContextError(f"{self.name} is not finite")
        B = self.base
        pos = self._positions()
        out = []
        for vals in product([e.value for e in B.elements()], repeat=len(pos)):
            m = [[B._zero] * self.n for _ in range(self.n)]
            for (i, j), v in zip(pos, vals):
                m[i][j] = v
            out.append(Scalar(self, tuple(tuple(r) for r in m)))
        return out

    def random(self, rng):
        B = self.base
        m = [[B._zero] * self.n for _ in range(self.n)]
        for i, j in self._positions():
            m[i][j] = B.random(rng).value
        return Scalar(self, tuple(tuple(r) for r in m))

    def solve_left(self, r, rhs):
        """Linearize c*r = rhs in the free entries of c and solve over the base field."""
        from ._linsolve import solve_linear
        B = self.base
        n = self.n
        pos = self._positions()
        rows, rhs_col = [], []
        for i in range(n):
            for k in range(n):
                coeffs = [B.element(r.value[j][k]) if pi == i else B.zero for (pi, j) in pos]
                rows.append(coeffs)
                rhs_col.append(B.element(rhs.value[i][k]))
        sol, cert = solve_linear(B, rows, rhs_col)
        if sol is None:
            return None, cert
        m = [[B._zero] * n for _ in range(n)]
        for (i, j), v in zip(pos, sol):
            m[i][j] = v.value
        return Scalar(self, tuple(tuple(row) for row in m)), None


class UpperTriangularRing(MatrixRing):
    """Upper triangular n x n matrices over a commutative field."""

    def __init__(self, base: Ring, n: int = 2, twist: Twist | None = None):
        super().__init__(base, n, twist)
        self.name = f"T{n}({self.base.name})"

    def _positions(self):
        return [(i, j) for i in range(self.n) for j in range(i, self.n)]

    def _check_member(self, payload):
        B = self.base
        if any(not B._is_zero(payload[i][j]) for i in range(self.n) for j in range(i)):
            raise ValueError("matrix is not upper triangular")


class TriangularPairRing(Ring):
    """Matrices [[f(x^2), g(x)], [0, f(x)]] over Q(x), stored as the pair (f, g).

    Product: (f1, g1)(f2, g2) = (f1 f2, f1(x^2) g2 + g1 f2).
    """

    name = "A(Q(x))"

    def __init__(self, twist: Twist | None = None):
        self.base = RationalFunctionField()
        B = self.base
        self._zero = (B._zero, B._zero)
        self._one = (B._one, B._zero)
        self._sq = B.symbols["x"]
        self._sq = B._mul(self._sq, self._sq)
        super().__init__(twist)

    def lift(self, f):
        """f(x) -> f(x^2) on Q(x) payloads."""
        return self.base.compose(f, self._sq)

    def _add(self, a, b):
        B = self.base
        return (B._add(a[0], b[0]), B._add(a[1], b[1]))

    def _sub(self, a, b):
        B = self.base
        return (B._sub(a[0], b[0]), B._sub(a[1], b[1]))

    def _neg(self, a):
        B = self.base
        return (B._neg(a[0]), B._neg(a[1]))

    def _mul(self, a, b):
        B = self.base
        return (B._mul(a[0], b[0]), B._add(B._mul(self.lift(a[0]), b[1]), B._mul(a[1], b[0])))

    def _inv(self, a):
        B = self.base
        f, g = a
        if B._is_zero(f):
            raise NotInvertibleError("diagonal entry is zero")
        fi = B._inv(f)
        return (fi, B._neg(B._mul(g, B._inv(B._mul(f, self.lift(f))))))

    def _is_zero(self, a):
        return self.base._is_zero(a[0]) and self.base._is_zero(a[1])

    def _from_number(self, n):
        return (self.base._from_number(n), self.base._zero)

    def pair(self, f, g) -> Scalar:
        B = self.base
        return Scalar(self, (B(f).value, B(g).value))

    def from_rows(self, rows) -> Scalar:
        B = self.base
        (a11, a12), (a21, a22) = [[B(x) for x in r] for r in rows]
        if a21:
            raise ValueError("lower-left entry must be 0")
        if a11.value != self.lift(a22.value):
            raise ValueError("top-left entry must equal f(x^2) where f is the bottom-right entry")
        return Scalar(self, (a22.value, a12.value))

    def as_matrix(self, a: Scalar):
        B = self.base
        f, g = a.value
        return [[B.element(self.lift(f)), B.element(g)], [B.zero, B.element(f)]]

    def format(self, v):
        B = self.base
        f, g = v
        return f"[[{B.format(self.lift(f))}, {B.format(g)}], [0, {B.format(f)}]]"

    def random(self, rng):
        return Scalar(self, (self.base.random(rng).value, self.base.random(rng).value))

    def solve_left(self, r, rhs):
        """c r = rhs with c = (f, g): f fr = F and f(x^2) gr + g fr = G."""
        B = self.base
        fr, gr = (B.element(v) for v in r.value)
        F, G = (B.element(v) for v in rhs.value)
        if fr:
            f = F / fr
            g = (G - B.element(self.lift(f.value)) * gr) / fr
            return Scalar(self, (f.value, g.value)), None
        if F:
            return None, "diagonal: f * 0 must equal a nonzero entry"
        if not gr:
            if G:
                return None, "r = 0 but right-hand side is nonzero"
            return self.zero, None
        h = G / gr
        n, d = h.value
        # h must lie in Q(x^2): reduced even rational functions have even numerator and denominator
        if any(c for c in n[1::2]) or any(c for c in d[1::2]):
            return None, f"need f(x^2) = {B.format(h.value)}, which is not a function of x^2"
        f = B._norm(tuple(n[0::2]), tuple(d[0::2]))
        return Scalar(self, (f, B._zero)), None


def builtin_ring(name: str) -> Ring:
    """Rings referred to by short names in the command line."""
    name = name.lower()
    if name in BUILTIN_FIELDS:
        return FiniteField.builtin(name)
    if name == "q":
        return RationalField()
    if name in ("qx", "ratfunc"):
        return RationalFunctionField()
    if name in ("h", "quaternion"):
        return QuaternionAlgebra()
    if name == "m2q":
        return MatrixRing(RationalField(), 2)
    if name.startswith("m2f") and name[2:] in BUILTIN_FIELDS:
        return MatrixRing(FiniteField.builtin(name[2:]), 2)
    if name.startswith("t2f") and name[2:] in BUILTIN_FIELDS:
        return UpperTriangularRing(FiniteField.builtin(name[2:]), 2)
    if name in ("tri", "ex75"):
        return TriangularPairRing()
    if name.startswith("z") and name[1:].isdigit():
        return IntegersMod(int(name[1:]))
    raise KeyError(f"unknown ring {name!r}")
