"""Parser for ring elements and skew polynomials.

Grammar (one tokenizer for every context)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | <juxtaposed> power)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')' | '[' row (',' row)* ']'
    row    := '[' expr (',' expr)* ']'

Names: ``w`` finite-field generator, ``x`` function-field variable,
``i j k`` quaternion units, ``t`` the polynomial variable.  Bracketed rows
are parsed in the base ring of a matrix ring.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()\[\],]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ElementAlgebra:
    def __init__(self, ring):
        self.ring = ring

    def number(self, n):
        return self.ring(n)

    def symbol(self, name):
        return self.ring.symbol(name)

    def matrix(self, rows):
        return self.ring.from_rows(rows)

    def base(self):
        return _ElementAlgebra(self.ring.base)

    def div(self, a, b):
        return a * self.ring(b).inverse()


class _PolyAlgebra:
    def __init__(self, ring):
        from .skewpoly import SkewPoly
        self.ring = ring
        self.P = SkewPoly

    def number(self, n):
        return self.P.constant(self.ring, self.ring(n))

    def symbol(self, name):
        if name == "t":
            return self.P.t(self.ring)
        return self.P.constant(self.ring, self.ring.symbol(name))

    def matrix(self, rows):
        return self.P.constant(self.ring, self.ring.from_rows(rows))

    def base(self):
        return _ElementAlgebra(self.ring.base)

    def div(self, a, b):
        if b.degree > 0:
            raise ZeroDivisionError("division by a non-constant polynomial")
        return a * self.P.constant(self.ring, b[0].inverse())


class _Parser:
    def __init__(self, text: str, algebra):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.alg = algebra

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", self.text, tok[2])

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in ("*", "/"):
                self.take()
                rhs = self.unary()
                if val == "*":
                    value = value * rhs
                else:
                    try:
                        value = self.alg.div(value, rhs)
                    except ZeroDivisionError as exc:
                        raise ParseError(str(exc), self.text, pos) from None
            elif kind in ("name", "int") or (kind == "op" and val in "(["):
                value = value * self.power()
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.unary()
        if tok[0] == "op" and tok[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                self.fail("expected an integer exponent", tok)
            try:
                return base ** (sign * tok[1])
            except (ZeroDivisionError, TypeError, ValueError) as exc:
                raise ParseError(str(exc), self.text, tok[2]) from None
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.alg.number(val)
        if kind == "name":
            try:
                return self.alg.symbol(val)
            except KeyError:
                self.fail(f"unknown name {val!r}", tok)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "op" and val == "[":
            return self.matrix(pos)
        self.fail("unexpected token", tok)

    def matrix(self, pos):
        try:
            inner = self.alg.base()
        except AttributeError:
            raise ParseError("matrix literal in a ring without matrix entries", self.text, pos) from None
        outer, self.alg = self.alg, inner
        rows = []
        try:
            while True:
                self.expect("[")
                row = [self.expr()]
                while self.peek()[1] == ",":
                    self.take()
                    row.append(self.expr())
                self.expect("]")
                rows.append(row)
                if self.peek()[1] == ",":
                    self.take()
                    continue
                self.expect("]")
                break
        finally:
            self.alg = outer
        try:
            return self.alg.matrix(rows)
        except (ValueError, AttributeError) as exc:
            raise ParseError(str(exc), self.text, pos) from None


def parse_element(ring, text: str):
    """Parse ``text`` as an element of ``ring``."""
    return _Parser(text, _ElementAlgebra(ring)).parse()


def parse_poly(ring, text: str):
    """Parse ``text`` as a skew polynomial in ``t`` over ``ring``.

    The product is the skew product, so ``(w)*t`` and ``t*(w)`` differ.
    """
    return _Parser(text, _PolyAlgebra(ring)).parse()
