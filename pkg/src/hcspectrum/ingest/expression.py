from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from ..arith import Poly, RatFunc
from ..errors import ArithmeticDomainError, ExpressionError

TOKEN_PATTERNS = {
    "num": r"\d+(?:\.\d*)?|\.\d+",
    "var": r"z",
    "pow": r"\^|\*\*",
    "mul": r"\*",
    "div": r"/",
    "plus": r"\+",
    "minus": r"-|−",
    "lpar": r"\(",
    "rpar": r"\)",
    "skip": r"\s+",
    "error": r".",
}
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_PATTERNS.items()))


class Token(NamedTuple):
    type: str
    value: str
    where: int


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    for match in TOKEN_RE.finditer(source):
        kind = str(match.lastgroup)
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionError(source, match.start(), f"unexpected character {match.group()!r}")
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("end", "", len(source)))
    return tokens


class _Parser:
    """Recursive descent over

        expr   := term (('+' | '-') term)*
        term   := unary (('*' | '/') unary | power)*     (juxtaposition multiplies)
        unary  := ('+' | '-') unary | power
        power  := atom ('^' ['-'] integer)?
        atom   := number | 'z' | '(' expr ')'
    """

    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.token
        self.pos += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.token.type != kind:
            found = "end of input" if self.token.type == "end" else repr(self.token.value)
            raise ExpressionError(self.source, self.token.where, f"expected {what}, found {found}")
        return self.advance()

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.token.type != "end":
            raise ExpressionError(self.source, self.token.where, f"unexpected {self.token.value!r}")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.token.type in ("plus", "minus"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.type == "plus" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            kind = self.token.type
            if kind in ("mul", "div"):
                op = self.advance()
                rhs = self.unary()
                value = value * rhs if kind == "mul" else self._divide(value, rhs, op.where)
            elif kind in ("num", "var", "lpar"):
                value = value * self.power()
            else:
                return value

    def unary(self) -> RatFunc:
        if self.token.type in ("plus", "minus"):
            op = self.advance()
            operand = self.unary()
            return -operand if op.type == "minus" else operand
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.token.type != "pow":
            return base
        op = self.advance()
        negative = False
        if self.token.type == "minus":
            self.advance()
            negative = True
        exponent_token = self.expect("num", "an integer exponent")
        if not exponent_token.value.isdigit():
            raise ExpressionError(self.source, exponent_token.where, "exponent must be an integer")
        exponent = int(exponent_token.value) * (-1 if negative else 1)
        if exponent < 0 and base.is_zero:
            raise ExpressionError(self.source, op.where, "division by zero polynomial", "zero_division")
        return base**exponent

    def atom(self) -> RatFunc:
        token = self.token
        if token.type == "num":
            self.advance()
            return RatFunc.constant(Fraction(token.value))
        if token.type == "var":
            self.advance()
            return RatFunc(Poly.z())
        if token.type == "lpar":
            self.advance()
            value = self.expr()
            self.expect("rpar", "')'")
            return value
        found = "end of input" if token.type == "end" else repr(token.value)
        raise ExpressionError(self.source, token.where, f"expected a number, 'z' or '(', found {found}")

    def _divide(self, lhs: RatFunc, rhs: RatFunc, where: int) -> RatFunc:
        try:
            return lhs / rhs
        except ArithmeticDomainError:
            raise ExpressionError(self.source, where, "division by zero polynomial", "zero_division") from None


def parse_casimir(expr: str) -> RatFunc:
    """Parse a rational expression in z such as ``-(1+z)/z`` into canonical form."""
    return _Parser(expr).parse()
