"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant, juxtaposition is not multiplication)::

    poly    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | primary ("^" INT)?
    primary := INT | VAR | "(" poly ")"

The parser produces a small tuple AST that can be evaluated against any
object implementing the :class:`Algebra` protocol, so the same text is read
as a multivariate polynomial over F_p or as an element of a table ring.
"""

from __future__ import annotations

import re
from typing import Any, Protocol

from .errors import PolynomialSyntaxError, UnknownVariable

_TOKEN = re.compile(r"(?P<int>[0-9]+)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()])")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise PolynomialSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def poly(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return ("neg", self.factor())
        node = self.primary()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", pos)
            node = ("pow", node, int(val))
        return node

    def primary(self):
        kind, val, pos = self.take()
        if kind == "int":
            return ("int", int(val))
        if kind == "var":
            return ("var", val)
        if kind == "op" and val == "(":
            node = self.poly()
            self.expect(")")
            return node
        raise PolynomialSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expression(text: str) -> tuple:
    """Parse ``text`` into an AST; raises PolynomialSyntaxError with a character offset."""
    parser = _Parser(text)
    if parser.peek()[0] == "end":
        raise PolynomialSyntaxError("empty expression", 0)
    node = parser.poly()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PolynomialSyntaxError(f"unexpected {val!r}", pos)
    return node


def variables_of(node: tuple) -> set[str]:
    if node[0] == "var":
        return {node[1]}
    if node[0] == "int":
        return set()
    return set().union(*(variables_of(c) for c in node[1:] if isinstance(c, tuple)))


class Algebra(Protocol):
    def const(self, n: int) -> Any: ...
    def var(self, name: str) -> Any: ...
    def add(self, a: Any, b: Any) -> Any: ...
    def mul(self, a: Any, b: Any) -> Any: ...
    def neg(self, a: Any) -> Any: ...


def evaluate(node: tuple, algebra: Algebra):
    tag = node[0]
    if tag == "int":
        return algebra.const(node[1])
    if tag == "var":
        return algebra.var(node[1])
    if tag == "add":
        return algebra.add(evaluate(node[1], algebra), evaluate(node[2], algebra))
    if tag == "sub":
        return algebra.add(evaluate(node[1], algebra), algebra.neg(evaluate(node[2], algebra)))
    if tag == "mul":
        return algebra.mul(evaluate(node[1], algebra), evaluate(node[2], algebra))
    if tag == "neg":
        return algebra.neg(evaluate(node[1], algebra))
    if tag == "pow":
        base = evaluate(node[1], algebra)
        result = algebra.const(1)
        for _ in range(node[2]):
            result = algebra.mul(result, base)
        return result
    raise ValueError(f"unknown node {tag!r}")


def check_variables(node: tuple, known) -> None:
    unknown = sorted(variables_of(node) - set(known))
    if unknown:
        raise UnknownVariable(f"unknown variable {unknown[0]!r}; declared: {list(known)}")
