"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest

from .errors import DivisionByZero
from .kernel import as_rational, format_rational

NEG_INF_DEGREE = -math.inf


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial stored as an ascending tuple of Fractions.

    The zero polynomial is the empty tuple and has degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(as_rational(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees Fractions; only trimming is done
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF_DEGREE

    @property
    def valuation(self):
        """Exponent of the lowest nonzero term (``inf`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def trailing(self):
        for c in self.coeffs:
            if c:
                return c
        return Fraction(0)

    def is_constant(self):
        return len(self.coeffs) <= 1

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return Polynomial._raw(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(
            a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        # convolve integer numerators over a common denominator
        ia, da = _scaled(a)
        ib, db = _scaled(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        d = da * db
        if d == 1:
            return Polynomial._raw(Fraction(c) for c in out)
        return Polynomial._raw(Fraction(c, d) for c in out)

    __rmul__ = __mul__

    def scale(self, q):
        q = as_rational(q)
        return Polynomial._raw(c * q for c in self.coeffs)

    def shift(self, k):
        """Multiply by ``x**k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return Polynomial._raw((Fraction(0),) * k + self.coeffs)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Polynomial._raw(quot), Polynomial._raw(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(1 / self.coeffs[-1])

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def reversed(self, degree=None):
        """``x**d * p(1/x)`` with ``d`` defaulting to the degree."""
        if not self.coeffs:
            return self
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = self.coeffs + (Fraction(0),) * (d - self.degree)
        return Polynomial._raw(padded[::-1])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def root_bound(self) -> Fraction:
        """Cauchy bound: every real root ``r`` satisfies ``|r| < bound``."""
        if len(self.coeffs) <= 1:
            return Fraction(1)
        lead = abs(self.coeffs[-1])
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lead

    # -- display -----------------------------------------------------------

    def format(self, var="x", descending=True):
        if not self.coeffs:
            return "0"
        items = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if descending:
            items.reverse()
        parts = []
        for i, c in items:
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return self.format()


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented


def _scaled(coeffs):
    """Integers ``n_i`` and ``d`` with ``coeffs[i] = n_i / d``."""
    d = 1
    for c in coeffs:
        cd = c.denominator
        if cd != 1:
            d = d * cd // math.gcd(d, cd)
    if d == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def _int_primitive(coeffs):
    """Coprime integer coefficients proportional to ``coeffs``, leading one positive."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    if not isinstance(coeffs[0], int):
        coeffs = _scaled(coeffs)[0]
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    if coeffs[-1] < 0:
        g = -g
    return coeffs if g == 1 else [c // g for c in coeffs]


def _pseudo_remainder(a, b):
    # remainder of lc(b)^k * a by b, all in integers
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, computed by a primitive remainder sequence over Z."""
    x, y = _int_primitive(a.coeffs), _int_primitive(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_primitive(_pseudo_remainder(x, y))
    if not x:
        return Polynomial()
    lead = x[-1]
    return Polynomial._raw(Fraction(c, lead) for c in x)


X = Polynomial((0, 1))
