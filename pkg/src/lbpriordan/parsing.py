"""Parsers for rational scalars and rational-function literals.

Rational functions are read by a small recursive-descent parser::

    expr    := sum
    sum     := ["+"|"-"] product { ("+"|"-") product }
    product := power { ["*"|"/"] power }      # juxtaposition multiplies
    power   := atom ["^" int]
    atom    := int | "x" | "(" sum ")"

Division by a constant scales the numerator, so ``1-1/2*x`` has numerator
``[1, -1/2]`` and denominator ``[1]``; division by a non-constant polynomial
multiplies it into the denominator without cancellation.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .series import RatFunc

__all__ = ["ParseError", "parse_rational", "parse_ratfunc", "parse_terms"]

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        self.offset = len(text[:offset].encode())
        self.text = text
        super().__init__(f"{message} at offset {self.offset}")


def parse_rational(text: str) -> Fraction:
    """``p`` or ``p/q`` with an optional sign and ``q > 0``."""
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError("expected a rational 'p' or 'p/q'", text, 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError("zero denominator", text, m.start(2))
    return Fraction(num, den)


def parse_terms(text: str) -> list[Fraction]:
    """Comma-separated list of rationals."""
    parts = text.split(",")
    if not text.strip():
        raise ParseError("empty term list", text, 0)
    out = []
    pos = 0
    for part in parts:
        try:
            out.append(parse_rational(part))
        except ParseError as exc:
            raise ParseError("bad term", text, pos) from exc
        pos += len(part) + 1
    return out


# A parsed value is a pair of coefficient lists (num, den).

def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _padd(a, b, sign=1):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)]


def _is_const(p):
    return all(c == 0 for c in p[1:])


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self):
        value = self.sum()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def sum(self):
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        num, den = self.product()
        if sign < 0:
            num = [-c for c in num]
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            n2, d2 = self.product()
            s = 1 if op == "+" else -1
            if den == d2:
                num = _padd(num, n2, s)
            else:
                num = _padd(_pmul(num, d2), _pmul(n2, den), s)
                den = _pmul(den, d2)
        return num, den

    def product(self):
        num, den = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                n2, d2 = self.power()
                num, den = _pmul(num, n2), _pmul(den, d2)
            elif ch == "/":
                self.pos += 1
                at = self.pos
                n2, d2 = self.power()
                if all(c == 0 for c in n2):
                    self.error("division by zero", at)
                if _is_const(n2) and _is_const(d2):
                    scale = d2[0] / n2[0]
                    num = [c * scale for c in num]
                else:
                    num, den = _pmul(num, d2), _pmul(den, n2)
            elif ch and (ch == "x" or ch == "(" or ch.isdigit()):
                n2, d2 = self.power()
                num, den = _pmul(num, n2), _pmul(den, d2)
            else:
                return num, den

    def power(self):
        base = self.atom()
        if self.eat("^"):
            k = self.integer()
            num, den = [Fraction(1)], [Fraction(1)]
            for _ in range(k):
                num, den = _pmul(num, base[0]), _pmul(den, base[1])
            return num, den
        return base

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            return [Fraction(self.integer())], [Fraction(1)]
        if ch == "x":
            self.pos += 1
            return [Fraction(0), Fraction(1)], [Fraction(1)]
        if ch == "(":
            self.pos += 1
            value = self.sum()
            if not self.eat(")"):
                self.error("expected ')'")
            return value
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse a rational function in ``x`` with integer literals.

    >>> parse_ratfunc("(1-x)/(1+x)")
    RatFunc(num=(Fraction(1, 1), Fraction(-1, 1)), den=(Fraction(1, 1), Fraction(1, 1)))
    """
    num, den = _Parser(text).parse()
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    if den[0] == 0:
        raise ParseError("denominator has zero constant term", text, len(text))
    return RatFunc(tuple(num), tuple(den))
