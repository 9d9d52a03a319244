"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor | "/" nat)*
    factor := atom ("^" nat)?
    atom   := "(" expr ")" | var | number | "-" factor
    number := int ("/" nat)?

Multiplication must be written explicitly: ``x*y``, never ``xy``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .exactpoly import VARIABLES, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class ParseError(ValueError):
    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.message = message


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # only trailing whitespace left
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, allowed: frozenset[str]):
        self.src = src
        self.allowed = allowed
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None) -> ParseError:
        pos = (tok or self.peek())[2]
        return ParseError(min(pos, max(len(self.src) - 1, 0)), message)

    def at(self, sym: str) -> bool:
        kind, text, _ = self.peek()
        return kind == "sym" and text == sym

    def nat(self, what: str) -> int:
        kind, text, _ = self.peek()
        if kind != "num":
            raise self.error(f"{what} must be a nonnegative integer literal")
        self.take()
        return int(text)

    def expr(self) -> Polynomial:
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.at("*") or self.at("/"):
            op = self.take()
            if op[1] == "*":
                value = value * self.factor()
            else:
                d = self.nat("divisor")
                if d == 0:
                    raise self.error("division by zero", op)
                value = value.scale(Fraction(1, d))
        return value

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.take()
            base = base ** self.nat("exponent")
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        kind, text, _ = tok
        if kind == "sym" and text == "(":
            self.take()
            value = self.expr()
            if not self.at(")"):
                raise self.error("unbalanced parentheses: expected ')'")
            self.take()
            return value
        if kind == "sym" and text == "-":
            self.take()
            return -self.factor()
        if kind == "num":
            self.take()
            return Polynomial.constant(int(text))
        if kind == "name":
            if text not in self.allowed:
                raise self.error(f"unknown variable {text!r}", tok)
            self.take()
            return Polynomial.variable(text)
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {text!r}")


def parse_polynomial(src: str, allowed_vars: Iterable[str] = ("x", "y")) -> Polynomial:
    """Parse ``src`` into a :class:`Polynomial` over ``allowed_vars``."""
    allowed = frozenset(allowed_vars)
    bad = allowed - set(VARIABLES)
    if bad:
        raise ValueError(f"unsupported variables {sorted(bad)}")
    if not src.strip():
        raise ParseError(0, "empty input")
    p = _Parser(src, allowed)
    value = p.expr()
    kind, text, _ = p.peek()
    if kind != "end":
        if text == ")":
            raise p.error("unbalanced parentheses: unexpected ')'")
        raise p.error(f"unexpected {text!r}")
    return value
