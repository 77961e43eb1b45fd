"""Exact rational arithmetic.

Integers are Python ints and rationals are :class:`fractions.Fraction`,
which already keeps ``den > 0`` and ``gcd(num, den) == 1`` at construction
time, with zero stored as ``0/1``.  This module adds the comparison and
dyadic-grid helpers the rest of the package is written against.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero

__all__ = [
    "Fraction",
    "Ordering",
    "Sign",
    "as_rational",
    "rat_arith",
    "rat_cmp",
    "rat_sign",
    "dyadic_floor",
    "dyadic_ceil",
    "format_rational",
]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and decimal strings to a Fraction.

    Floats are rejected: every value in the package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_arith(a, b, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("rational division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rat_cmp(a, b) -> Ordering:
    a, b = as_rational(a), as_rational(b)
    # cross-multiplication; denominators are positive
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def rat_sign(a) -> Sign:
    n = as_rational(a).numerator
    return Sign.POSITIVE if n > 0 else Sign.NEGATIVE if n < 0 else Sign.ZERO


def dyadic_floor(a, n: int) -> Fraction:
    """Largest multiple of ``2**-n`` that is ``<= a``."""
    if n < 0:
        raise ValueError("grid level must be non-negative")
    a = as_rational(a)
    scale = 1 << n
    return Fraction(math.floor(a * scale), scale)


def dyadic_ceil(a, n: int) -> Fraction:
    """Smallest multiple of ``2**-n`` that is ``>= a``."""
    if n < 0:
        raise ValueError("grid level must be non-negative")
    a = as_rational(a)
    scale = 1 << n
    return Fraction(math.ceil(a * scale), scale)


_CHUNK = 10 ** 1000


def int_str(n: int) -> str:
    """Decimal digits of ``n``, also past the interpreter's conversion limit."""
    try:
        return str(n)
    except ValueError:
        pass
    if n < 0:
        return "-" + int_str(-n)
    parts = []
    while n:
        n, r = divmod(n, _CHUNK)
        parts.append(r)
    return str(parts[-1]) + "".join(str(r).rjust(1000, "0") for r in reversed(parts[:-1]))


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return int_str(q.numerator)
    return f"{int_str(q.numerator)}/{int_str(q.denominator)}"
