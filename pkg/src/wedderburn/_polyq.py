"""Dense univariate polynomials over Q (gmpy2 rationals) and over F_p.

Polynomials are tuples of coefficients in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math

from gmpy2 import mpq as Q

ZERO: tuple = ()
ONE: tuple = (Q(1),)


def strip(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def const(a) -> tuple:
    a = Q(a)
    return (a,) if a else ()


def add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    return strip([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def neg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def sub(a: tuple, b: tuple) -> tuple:
    return add(a, neg(b))


def scale(a: tuple, c) -> tuple:
    if not c:
        return ()
    return tuple(x * c for x in a)


def mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return strip(out)


def divmod_(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Q(0)] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        k = len(r) - 1 - db
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] -= c * y
        while r and not r[-1]:
            r.pop()
    return strip(q), tuple(r)


def monic(a: tuple) -> tuple:
    if not a:
        return ()
    lead = a[-1]
    return tuple(x / lead for x in a)


def _primitive(a) -> list[int]:
    """Integer multiple of a with coprime coefficients and positive lead."""
    den = 1
    for x in a:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in a]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if ints[-1] < 0:
        g = -g
    return [x // g for x in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [x * lead for x in r]
        for j, y in enumerate(b):
            r[k + j] -= c * y
        while r and not r[-1]:
            r.pop()
    return r


def gcd(a: tuple, b: tuple) -> tuple:
    """Monic gcd (zero if both are zero), via a primitive remainder sequence over Z."""
    if not a or not b:
        return monic(a or b)
    if len(a) < len(b):
        a, b = b, a
    x, y = _primitive(a), _primitive(b)
    while y:
        if len(y) == 1:
            return ONE
        r = _prem(x, y)
        x, y = y, (_primitive([Q(v) for v in r]) if r else [])
    return monic(tuple(Q(v) for v in x))


def deriv(a: tuple) -> tuple:
    return strip([i * x for i, x in enumerate(a)][1:])


def compose(a: tuple, h: tuple) -> tuple:
    """a(h(x)) by Horner."""
    out: tuple = ()
    for c in reversed(a):
        out = add(mul(out, h), const(c))
    return out


def evaluate(a: tuple, x):
    out = Q(0)
    for c in reversed(a):
        out = out * x + c
    return out


def degree(a: tuple) -> int:
    return len(a) - 1


def fmt(a: tuple, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if k == 0:
            body = str(m)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if m == 1 else f"{m}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --- F_p[x] -----------------------------------------------------------------

def fp_strip(c, p: int) -> tuple:
    c = [x % p for x in c]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def fp_mul(a: tuple, b: tuple, p: int) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_strip(out, p)


def fp_mod(a: tuple, m: tuple, p: int) -> tuple:
    r = list(fp_strip(a, p))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while r and len(r) - 1 >= dm:
        c = r[-1] * inv_lead % p
        k = len(r) - 1 - dm
        for j, y in enumerate(m):
            r[k + j] = (r[k + j] - c * y) % p
        while r and not r[-1]:
            r.pop()
    return tuple(r)


def fp_is_irreducible(m: tuple, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    m = fp_strip(m, p)
    n = len(m) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for code in range(p ** d):
            digits = [(code // p ** i) % p for i in range(d)] + [1]
            if not fp_mod(m, tuple(digits), p):
                return False
    return True
