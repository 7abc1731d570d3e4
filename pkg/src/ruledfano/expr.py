"""Recursive-descent parser for Chow ring expressions.

Grammar (whitespace is insignificant, identifiers are case-sensitive)::

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := ('-')? atom ('^' uint)?
    atom     := 'xi' | 'f' | 'h' | 'K' | rational | '(' expr ')'
    rational := int ('/' uint)?

``h`` is the polarization xi + f and ``K`` the canonical class -2 xi - f.
"""

import re
from fractions import Fraction

from .errors import ExpressionError

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^/()]))")
_NAMES = ("xi", "f", "h", "K")


def tokenize(text):
    """Yield (kind, value, offset) triples; offsets are 1-based."""
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionError(f"unexpected character {text[start]!r}", start + 1)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind == "name" and value not in _NAMES:
            raise ExpressionError(f"unknown identifier {value!r}", start + 1)
        tokens.append((kind, value, start + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, model):
        self.tokens = tokenize(text)
        self.i = 0
        self.model = model

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, offset = self.take()
        if kind != "op" or value != op:
            raise ExpressionError(f"expected {op!r}", offset)

    def is_op(self, *ops):
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def expr(self):
        out = self.term()
        while self.is_op("+", "-"):
            _, op, _ = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.factor()
        while self.is_op("*"):
            self.take()
            out = out * self.factor()
        return out

    def factor(self):
        negate = False
        if self.is_op("-"):
            self.take()
            negate = True
        out = self.atom()
        if self.is_op("^"):
            self.take()
            kind, value, offset = self.take()
            if kind != "int":
                raise ExpressionError("expected an unsigned integer exponent", offset)
            out = out ** int(value)
        return -out if negate else out

    def atom(self):
        kind, value, offset = self.take()
        m = self.model
        if kind == "name":
            return {"xi": m.xi, "f": m.f, "h": m.h, "K": m.canonical}[value]
        if kind == "int":
            num = int(value)
            if self.is_op("/"):
                self.take()
                dkind, dvalue, doffset = self.take()
                if dkind != "int":
                    raise ExpressionError("expected an unsigned integer denominator", doffset)
                if int(dvalue) == 0:
                    raise ExpressionError("division by zero", doffset)
                return m.one() * Fraction(num, int(dvalue))
            return m.one() * num
        if kind == "op" and value == "(":
            out = self.expr()
            self.expect_op(")")
            return out
        if kind == "end":
            raise ExpressionError("unexpected end of input", offset)
        raise ExpressionError(f"unexpected {value!r}", offset)


def parse_expression(text, model):
    """Parse ``text`` and return its normal form as a ChowElement of ``model``."""
    p = _Parser(text, model)
    out = p.expr()
    kind, value, offset = p.peek()
    if kind != "end":
        raise ExpressionError(f"unexpected {value!r}", offset)
    return out
