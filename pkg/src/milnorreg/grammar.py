"""Recursive-descent parser for the polynomial text grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' integer]
    atom   := number | variable | '(' expr ')'

Numbers may be integers or ``a/b`` fractions.  Juxtaposition multiplies,
so ``2x0x1`` and ``x3(x0+x1)`` are accepted.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]+\d*)|(\S))")


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``offset`` is the 0-based character position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), m.start(2)))
            elif m.group(3):
                self.tokens.append(("op", m.group(3), m.start(3)))
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2])

    def parse(self):
        if not self.tokens:
            self.fail("empty input")
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if tok[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif tok[0] in ("num", "name") or tok == ("op", "(", tok[2]):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num" or "/" in exp[1]:
                self.fail("expected a non-negative integer exponent", exp)
            return base ** int(exp[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            return self.ring.constant(Fraction(value))
        if kind == "name":
            if value not in self.index:
                self.fail(f"unknown variable {value!r}", tok)
            return self.ring.var(self.index[value])
        if kind == "op" and value == "(":
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.fail("expected ')'", close)
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {value!r}", tok)


def parse_polynomial(text: str, ring):
    """Parse ``text`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def max_variable_index(text: str) -> int:
    """Largest ``i`` among names ``x<i>`` in ``text`` (-1 if none)."""
    found = [int(m) for m in re.findall(r"x(\d+)", text)]
    return max(found, default=-1)
