"""Expression language for field elements.

Grammar, loosest binding first::

    compare := sum [("<" | "<=" | "=" | ">=" | ">") sum]
    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ["^" ["-" | "+"] INTEGER]
    atom    := NUMBER | "w" | "e" | "abs" "(" sum ")" | "(" sum ")"

``w`` is the infinite unit and ``e`` the infinitesimal one.  Decimal
literals are read as exact rationals.  ``ω``, ``ε``, ``×``, ``·``, ``÷``,
``−``, ``≤``, ``≥`` and ``==`` are accepted as aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, ExprSyntaxError, SymbolNotInField
from .kernel import format_rational


class Expr:
    pass


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction


@dataclass(frozen=True)
class Sym(Expr):
    name: str  # "w" or "e"


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Abs(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # + - * /
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Cmp(Expr):
    op: str  # < <= = >= >
    left: Expr
    right: Expr


_ALIASES = {"ω": "w", "ε": "e", "×": "*", "·": "*", "÷": "/", "−": "-", "≤": "<=", "≥": ">="}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op><=|>=|==|[-+*/^()<>=])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _ALIASES:
            tokens.append(("op" if ch not in "ωε" else "name", _ALIASES[ch], i))
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ExprSyntaxError(f"unexpected character {ch!r}", text, i)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if value == "==":
                value = "="
            tokens.append((kind, value, i))
        i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] not in ("op",):
            raise self.error(f"expected {value!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.compare()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def compare(self):
        left = self.sum()
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("<", "<=", "=", ">=", ">"):
            self.next()
            right = self.sum()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] in ("<", "<=", "=", ">=", ">"):
                raise self.error("comparisons do not chain", nxt)
            return Cmp(tok[1], left, right)
        return left

    def sum(self):
        node = self.product()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.next()[1]
            node = BinOp(op, node, self.product())
        return node

    def product(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.next()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-" and tok[1]:
            self.next()
            operand = self.unary()
            return Neg(operand) if tok[1] == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            sign = 1
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-" and tok[1]:
                self.next()
                sign = -1 if tok[1] == "-" else 1
            tok = self.next()
            if tok[0] != "num" or not tok[1].isdigit():
                raise self.error("exponent must be an integer literal", tok)
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                raise self.error("write (a^m)^n with parentheses")
            return Pow(base, sign * int(tok[1]))
        return base

    def atom(self):
        tok = self.next()
        kind, value, _ = tok
        if kind == "num":
            return Num(Fraction(value))
        if kind == "name":
            if value in ("w", "e"):
                return Sym(value)
            if value == "abs":
                self.expect("(")
                inner = self.sum()
                self.expect(")")
                return Abs(inner)
            raise self.error(f"unknown name {value!r}", tok)
        if kind == "op" and value == "(":
            inner = self.sum()
            self.expect(")")
            return inner
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {value!r}", tok)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printing ------------------------------------------------------------------------

_CMP, _SUM, _PROD, _UNARY, _POW, _ATOM = range(6)


def _prec(node):
    if isinstance(node, Cmp):
        return _CMP
    if isinstance(node, BinOp):
        return _SUM if node.op in "+-" else _PROD
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POW
    if isinstance(node, Num) and (node.value < 0 or not _is_decimal(node.value)):
        return _UNARY if node.value < 0 else _PROD
    return _ATOM


def _is_decimal(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def _decimal(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    digits = 0
    d = q.denominator
    while (10 ** digits) % d:
        digits += 1
    scaled = q.numerator * 10 ** digits // d
    s = str(abs(scaled)).rjust(digits + 1, "0")
    return ("-" if scaled < 0 else "") + s[:-digits] + "." + s[-digits:]


def to_text(node: Expr) -> str:
    """Source text that parses back to an equal tree (for trees produced by :func:`parse`)."""
    def wrap(child, minimum):
        s = to_text(child)
        return f"({s})" if _prec(child) < minimum else s

    if isinstance(node, Num):
        v = node.value
        if _is_decimal(v):
            return _decimal(v)
        return format_rational(v)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Abs):
        return f"abs({to_text(node.operand)})"
    if isinstance(node, Neg):
        return "-" + wrap(node.operand, _UNARY)
    if isinstance(node, Pow):
        return f"{wrap(node.base, _ATOM)}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _SUM if node.op in "+-" else _PROD
        return f"{wrap(node.left, p)} {node.op} {wrap(node.right, p + 1)}"
    if isinstance(node, Cmp):
        return f"{wrap(node.left, _SUM)} {node.op} {wrap(node.right, _SUM)}"
    raise TypeError(node)


# -- evaluation ---------------------------------------------------------------------------


def evaluate(node: Expr, h):
    """Exact value of ``node`` in the field ``h``; comparisons give a bool."""
    if isinstance(node, Num):
        return h.const(node.value)
    if isinstance(node, Sym):
        if h.archimedean:
            raise SymbolNotInField(f"{node.name!r} is not an element of {h.label}")
        return h.omega() if node.name == "w" else h.epsilon()
    if isinstance(node, Neg):
        return h.neg(evaluate(node.operand, h))
    if isinstance(node, Abs):
        return h.abs(evaluate(node.operand, h))
    if isinstance(node, Pow):
        base = evaluate(node.base, h)
        n = node.exponent
        if n < 0:
            if h.sign(base) == 0:
                raise DivisionByZero("zero to a negative power")
            base, n = h.div(h.one, base), -n
        result = h.one
        while n:
            if n & 1:
                result = h.mul(result, base)
            n >>= 1
            if n:
                base = h.mul(base, base)
        return result
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, h), evaluate(node.right, h)
        if node.op == "/" and h.sign(b) == 0:
            raise DivisionByZero("division by zero")
        return {"+": h.add, "-": h.sub, "*": h.mul, "/": h.div}[node.op](a, b)
    if isinstance(node, Cmp):
        a, b = evaluate(node.left, h), evaluate(node.right, h)
        if node.op == "=":
            return h.eq(a, b)
        c = h.cmp(a, b)
        return {"<": c < 0, "<=": c <= 0, ">": c > 0, ">=": c >= 0}[node.op]
    raise TypeError(node)


def eval_text(text: str, h):
    return evaluate(parse(text), h)


def format_value(value, h) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return h.format(value)
