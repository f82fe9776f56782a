"""Text syntax for polynomials and for germs ``h/f^k``.

Grammar (explicit ``*`` between factors)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := ('+' | '-') factor | power
    power   := atom ('^' exponent)?
    atom    := INT ('/' INT)? | VARIABLE | '(' expr ')'

An exponent is a positive integer, possibly parenthesized. In a germ the
token ``f`` stands for the analyzed polynomial and may only appear as the
denominator: ``numerator / f`` or ``numerator / f^k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import ParseError
from .polyalg import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2):
            tokens.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def check_variables(variables: Sequence[str]) -> Tuple[str, ...]:
    names = tuple(v.strip() for v in variables)
    if not names:
        raise ParseError("empty variable list", 0)
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ParseError(f"invalid variable name {v!r}", 0)
    if len(set(names)) != len(names):
        raise ParseError("variable names must be distinct", 0)
    return names


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.vars = check_variables(variables)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.n = len(self.vars)
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "op":
            raise ParseError(f"expected {text!r}", self.tok.pos)
        return self.advance()

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def expr(self) -> Tuple[Polynomial, int]:
        """Returns the value and the number of top-level terms."""
        value = self.term()
        count = 1
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
            count += 1
        return value, count

    def term(self) -> Polynomial:
        value = self.factor()
        while self.at_op("*"):
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        if self.at_op("-"):
            self.advance()
            return -self.factor()
        if self.at_op("+"):
            self.advance()
            return self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        t = self.tok
        if t.kind == "int":
            self.advance()
            e = int(t.text)
        elif self.at_op("("):
            self.advance()
            value, _ = self.expr()
            self.expect(")")
            c = value.constant_term()
            if len(value) > 1 or (value and not c) or c.denominator != 1:
                raise ParseError("non-integer/negative exponent", t.pos)
            e = int(c)
        else:
            raise ParseError("non-integer/negative exponent", t.pos)
        if e <= 0:
            raise ParseError("non-integer/negative exponent", t.pos)
        return e

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.at_op("/") and self.peek().kind == "int":
                self.advance()
                den = self.advance()
                if int(den.text) == 0:
                    raise ParseError("division by zero", den.pos)
                value /= int(den.text)
            return Polynomial.constant(value, self.n)
        if t.kind == "name":
            if t.text not in self.index:
                raise ParseError(f"unknown variable {t.text!r}", t.pos)
            self.advance()
            return Polynomial.variable(self.index[t.text], self.n)
        if self.at_op("("):
            self.advance()
            value, _ = self.expr()
            self.expect(")")
            return value
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected token {t.text!r}", t.pos)

    def finish(self) -> None:
        if self.tok.kind != "end":
            raise ParseError(f"unexpected token {self.tok.text!r}", self.tok.pos)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    p = _Parser(text, variables)
    if p.tok.kind == "end":
        raise ParseError("empty polynomial", 0)
    value, _ = p.expr()
    p.finish()
    return value


def parse_element(text: str, variables: Sequence[str]):
    """Parse ``h``, ``h/f`` or ``h/f^k``; returns ``(numerator, k)``."""
    if "f" in variables:
        raise ParseError("'f' is reserved for the analyzed polynomial", 0)
    p = _Parser(text, variables)
    if p.tok.kind == "end":
        raise ParseError("empty element", 0)
    numerator, nterms = p.expr()
    k = 0
    if p.at_op("/"):
        slash = p.advance()
        if nterms > 1:
            raise ParseError("parenthesize a numerator with several terms", slash.pos)
        if not (p.tok.kind == "name" and p.tok.text == "f"):
            raise ParseError("denominator must be f or f^k", p.tok.pos)
        p.advance()
        k = 1
        if p.at_op("^"):
            p.advance()
            k = p.exponent()
    p.finish()
    return numerator, k


def split_variables(text: Optional[str]) -> Tuple[str, ...]:
    if text is None:
        raise ParseError("no variables given", 0)
    return check_variables([v for v in text.split(",")])
