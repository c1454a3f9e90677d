"""Parser for the rational-expression grammar used by system files and CLI flags.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" exponent)?
    atom   := INTEGER | NAME | "(" expr ")"
    exponent := "-"? INTEGER | "(" "-"? INTEGER ")"

Multiplication is always explicit, so ``2t`` is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping

from .algebra.ratfunc import RatFunc
from .errors import ExprError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(Token("int", num, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif op in "+-*/^()":
            tokens.append(Token("op", op, start))
        else:
            raise ExprError(f"unexpected character {op!r} at position {start}")
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, namespace: Mapping[str, object]):
        self.tokens = tokenize(src)
        self.i = 0
        self.ns = namespace

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        t = self.take()
        if t.text != text:
            found = t.text or "end of input"
            raise ExprError(f"expected {text!r} at position {t.pos}, found {found!r}")

    def parse(self):
        value = self.expr()
        if self.tok.kind != "end":
            t = self.tok
            raise ExprError(f"unexpected {t.text!r} at position {t.pos}")
        return value

    def expr(self):
        value = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.take()
            rhs = self.unary()
            if op.text == "*":
                value = value * rhs
            else:
                if rhs == 0:
                    raise ExprError(f"division by zero at position {op.pos}")
                value = value / rhs
        return value

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            t = self.take()
            n = self.exponent()
            if n < 0 and base == 0:
                raise ExprError(f"negative power of zero at position {t.pos}")
            return base ** n
        return base

    def exponent(self) -> int:
        paren = self.tok.text == "("
        if paren:
            self.take()
        sign = 1
        if self.tok.text == "-":
            self.take()
            sign = -1
        t = self.take()
        if t.kind != "int":
            raise ExprError(f"exponent must be an integer at position {t.pos}")
        if paren:
            self.expect(")")
        return sign * int(t.text)

    def atom(self):
        t = self.take()
        if t.kind == "int":
            if self.tok.kind == "name" or self.tok.text == "(":
                raise ExprError(f"missing '*' after {t.text!r} at position {self.tok.pos}")
            return Fraction(int(t.text))
        if t.kind == "name":
            if t.text not in self.ns:
                raise ExprError(f"unknown name {t.text!r} at position {t.pos}")
            return self.ns[t.text]
        if t.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = t.text or "end of input"
        raise ExprError(f"unexpected {found!r} at position {t.pos}")


def parse_expr(src: str, namespace: Mapping[str, object] | None = None, cell=None):
    """Evaluate ``src`` with names bound by ``namespace`` (default: x, t as rational functions)."""
    if namespace is None:
        namespace = {"x": RatFunc.var("x"), "t": RatFunc.var("t")}
    try:
        if not src.strip():
            raise ExprError("empty expression")
        return _Parser(src, namespace).parse()
    except ExprError as e:
        if cell is not None and e.cell is None:
            raise ExprError(e.message, cell) from None
        raise


def parse_ratfunc(src: str, shift_var: str = "x", diff_var: str = "t", cell=None) -> RatFunc:
    ns = {shift_var: RatFunc.var("x"), diff_var: RatFunc.var("t")}
    value = parse_expr(src, ns, cell)
    if not isinstance(value, RatFunc):
        value = RatFunc.const(value)
    return value


def parse_rational(src: str) -> Fraction:
    """Parse a flag value such as ``3``, ``-1/2`` or ``7/5``."""
    value = parse_expr(src, {})
    return Fraction(value)
