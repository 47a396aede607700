"""Recursive-descent parser for polynomial text.

Grammar (whitespace insignificant):

    expr   :=  term (('+' | '-') term)*
    term   :=  unary ('*' unary)*
    unary  :=  '-' unary | power
    power  :=  atom ('^' INT)*
    atom   :=  INT | NAME | '(' expr ')'

'^' binds tighter than '*', which binds tighter than '+'/'-'; unary minus sits
between them, so -x^2 parses as -(x^2).  NAME is [a-zA-Z][a-zA-Z0-9_]*; the
name ``omega`` is the cube-root-of-unity constant, everything else must be a
declared variable.  Exponents are literal nonnegative integers.

If omega occurs anywhere, the whole polynomial is built over Z[omega];
otherwise over the rationals (integer literals only, the grammar has no '/').
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .fields import OMEGA, EisensteinInt
from .wpoly import WPolynomial

MAX_EXPONENT = 1024

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()])")


class ParseError(ValueError):
    """Syntax or name error, with the 0-based text offset where it occurred."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at offset {position}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        tokens.append((kind, m.group(), i))
        i = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens, variables, weights, eisenstein: bool):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables
        self.weights = weights
        self.eisenstein = eisenstein

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _constant(self, value: int) -> WPolynomial:
        coeff = EisensteinInt(value, 0) if self.eisenstein else Fraction(value)
        return WPolynomial.constant(self.variables, self.weights, coeff)

    def expr(self) -> WPolynomial:
        out = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, op, _ = self.advance()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> WPolynomial:
        out = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.advance()
            out = out * self.unary()
        return out

    def unary(self) -> WPolynomial:
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> WPolynomial:
        base = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.advance()
            kind, text, pos = self.peek()
            if kind != "int":
                raise ParseError("expected integer exponent after '^'", pos)
            self.advance()
            exponent = int(text)
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent {exponent} exceeds limit {MAX_EXPONENT}", pos)
            base = base ** exponent
        return base

    def atom(self) -> WPolynomial:
        kind, text, pos = self.peek()
        if kind == "int":
            self.advance()
            return self._constant(int(text))
        if kind == "name":
            self.advance()
            if text == "omega":
                return WPolynomial.constant(self.variables, self.weights, OMEGA)
            if text not in self.variables:
                raise ParseError(f"unknown variable {text!r}", pos)
            return WPolynomial.variable(self.variables, self.weights, text)
        if kind == "op" and text == "(":
            self.advance()
            inner = self.expr()
            kind, text, pos = self.peek()
            if (kind, text) != ("op", ")"):
                raise ParseError("expected ')'", pos)
            self.advance()
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_polynomial(text: str, variables: Iterable[str], weights: Iterable[int]) -> WPolynomial:
    """Parse ``text`` into expanded normal form over the given variable system.

    Raises ParseError (with position) on syntax errors and unknown names.
    """
    variables = tuple(variables)
    weights = tuple(weights)
    tokens = _tokenize(text)
    eisenstein = any(kind == "name" and value == "omega" for kind, value, _ in tokens)
    parser = _Parser(tokens, variables, weights, eisenstein)
    result = parser.expr()
    kind, text_left, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing token {text_left!r}", pos)
    return result
