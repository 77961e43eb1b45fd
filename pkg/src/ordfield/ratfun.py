"""The field Q(w) = Q(e) of rational functions in one variable.

One representation serves both orderings.  ``AT_INFINITY`` compares
functions by their values at all sufficiently large arguments (the
variable is then an infinite element ``w``); ``NEAR_ZERO`` compares them
at all sufficiently small positive arguments (the variable is an
infinitesimal ``e``).  The substitution ``w -> 1/e`` carries one ordering
onto the other, see :func:`rf_swap`.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .errors import DivisionByZero, TagMismatch
from .kernel import Ordering, Sign, as_rational, rat_sign
from .laurent import LaurentSeries, ls_from_coefficients, ls_recip
from .polynomial import Polynomial, X, _scaled, poly_gcd


class OrderTag(enum.Enum):
    AT_INFINITY = "at-infinity"
    NEAR_ZERO = "near-zero"

    @property
    def symbol(self):
        return "w" if self is OrderTag.AT_INFINITY else "e"


AT_INFINITY = OrderTag.AT_INFINITY
NEAR_ZERO = OrderTag.NEAR_ZERO


class Classification(enum.Enum):
    POSITIVE_INFINITE = "PositiveInfinite"
    NEGATIVE_INFINITE = "NegativeInfinite"
    FINITE_NON_INFINITESIMAL = "FiniteNonInfinitesimal"
    POSITIVE_INFINITESIMAL = "PositiveInfinitesimal"
    NEGATIVE_INFINITESIMAL = "NegativeInfinitesimal"
    ZERO = "Zero"

    @property
    def is_infinite(self):
        return self in (Classification.POSITIVE_INFINITE, Classification.NEGATIVE_INFINITE)

    @property
    def is_infinitesimal(self):
        return self in (
            Classification.POSITIVE_INFINITESIMAL,
            Classification.NEGATIVE_INFINITESIMAL,
            Classification.ZERO,
        )

    @property
    def is_finite(self):
        return not self.is_infinite


def classify_by_order(magnitude_order: int, sign: Sign) -> Classification:
    """Classification from a sign and an "order of magnitude".

    ``magnitude_order > 0`` means infinite, ``< 0`` infinitesimal.
    """
    if sign == Sign.ZERO:
        return Classification.ZERO
    if magnitude_order > 0:
        return (Classification.POSITIVE_INFINITE if sign > 0
                else Classification.NEGATIVE_INFINITE)
    if magnitude_order < 0:
        return (Classification.POSITIVE_INFINITESIMAL if sign > 0
                else Classification.NEGATIVE_INFINITESIMAL)
    return Classification.FINITE_NON_INFINITESIMAL


def _primitive_pair(num: Polynomial, den: Polynomial):
    # scale num/den jointly to coprime integer coefficients, den leading > 0
    n = len(num.coeffs)
    ints, d = _scaled(num.coeffs + den.coeffs)
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            break
    if ints[-1] < 0:
        g = -g
    if g == 1 and d == 1:
        return num, den
    if g != 1:
        ints = [c // g for c in ints]
    return (Polynomial._raw(Fraction(c) for c in ints[:n]),
            Polynomial._raw(Fraction(c) for c in ints[n:]))


class RationalFunction:
    """Reduced quotient ``num/den`` with an ordering tag.

    Canonical form: ``gcd(num, den) = 1``, both have integer coefficients
    with no common integer factor, and ``den`` has a positive leading
    coefficient.  Equality is therefore structural.
    """

    __slots__ = ("num", "den", "tag")

    def __init__(self, num, den=None, tag=AT_INFINITY):
        num = num if isinstance(num, Polynomial) else Polynomial(
            num if isinstance(num, (list, tuple)) else (num,))
        if den is None:
            den = Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = Polynomial(den if isinstance(den, (list, tuple)) else (den,))
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            den = Polynomial((1,))
        else:
            if not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num // g, den // g
            num, den = _primitive_pair(num, den)
        self.num = num
        self.den = den
        self.tag = tag

    @classmethod
    def _coerce(cls, value, tag):
        if isinstance(value, RationalFunction):
            if value.tag is not tag:
                raise TagMismatch(f"cannot combine {value.tag.value} with {tag.value}")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(Polynomial((value,)), tag=tag)
        return NotImplemented

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num[0] / self.den[0]

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.tag is other.tag and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den, self.tag))

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return _fast(-self.num, self.den, self.tag)

    def __add__(self, other):
        other = self._coerce(other, self.tag)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den, self.tag)
        # both operands are reduced: with coprime denominators so is the sum
        if _coprime(self.den, other.den):
            return _fast(self.num * other.den + other.num * self.den,
                         self.den * other.den, self.tag)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den, self.tag)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other, self.tag)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self.tag)
        if other is NotImplemented:
            return other
        return _reduced_product(self.num, self.den, other.num, other.den, self.tag)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other, self.tag)
        if other is NotImplemented:
            return other
        if not other:
            raise DivisionByZero("division by the zero rational function")
        return _reduced_product(self.num, self.den, other.den, other.num, self.tag)

    def __rtruediv__(self, other):
        other = self._coerce(other, self.tag)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self:
                raise DivisionByZero("zero to a negative power")
            return RationalFunction(self.den ** -n, self.num ** -n, self.tag)
        return _fast(self.num ** n, self.den ** n, self.tag)

    def __abs__(self):
        return rf_abs(self)

    # -- order -------------------------------------------------------------

    def __lt__(self, other):
        return rf_cmp(self, other) < 0

    def __le__(self, other):
        return rf_cmp(self, other) <= 0

    def __gt__(self, other):
        return rf_cmp(self, other) > 0

    def __ge__(self, other):
        return rf_cmp(self, other) >= 0

    # -- misc --------------------------------------------------------------

    def __call__(self, r):
        """Evaluate at an exact rational argument."""
        d = self.den(r)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {r}")
        return self.num(r) / d

    def format(self):
        var = self.tag.symbol
        descending = self.tag is AT_INFINITY
        n = self.num.format(var, descending)
        if self.den == 1:
            return n
        d = self.den.format(var, descending)
        if sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den.coeffs if c) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RationalFunction({self.format()!r}, {self.tag.value})"


def _coprime(p: Polynomial, q: Polynomial) -> bool:
    return p.is_constant() or q.is_constant() or poly_gcd(p, q).is_constant()


def _cancel(p: Polynomial, q: Polynomial):
    if p.is_constant() or q.is_constant():
        return p, q
    g = poly_gcd(p, q)
    if g.is_constant():
        return p, q
    return p // g, q // g


def _reduced_product(a, b, c, d, tag):
    # (a/b)(c/d) with a/b and c/d reduced: only a,d and c,b can share factors
    if not c:
        return RationalFunction(Polynomial(), tag=tag)
    if not d:
        raise DivisionByZero("rational function with zero denominator")
    a, d = _cancel(a, d)
    c, b = _cancel(c, b)
    return _fast(a * c, b * d, tag)


def _fast(num, den, tag):
    # num/den already coprime with canonical scaling up to sign/scalar
    rf = RationalFunction.__new__(RationalFunction)
    if not num:
        den = Polynomial((1,))
    rf.num, rf.den = _primitive_pair(num, den)
    rf.tag = tag
    return rf


# -- public operations ------------------------------------------------------


def rf_normalize(num: Polynomial, den: Polynomial, tag=AT_INFINITY) -> RationalFunction:
    return RationalFunction(num, den, tag)


def rf_const(q, tag=AT_INFINITY) -> RationalFunction:
    return RationalFunction(Polynomial((as_rational(q),)), tag=tag)


def rf_variable(tag=AT_INFINITY) -> RationalFunction:
    """The bare variable: ``w`` under AT_INFINITY, ``e`` under NEAR_ZERO."""
    return RationalFunction(X, tag=tag)


def omega(tag=AT_INFINITY) -> RationalFunction:
    """A positive infinite element in either ordering."""
    if tag is AT_INFINITY:
        return RationalFunction(X, tag=tag)
    return RationalFunction(Polynomial((1,)), X, tag)


def epsilon(tag=NEAR_ZERO) -> RationalFunction:
    """A positive infinitesimal element in either ordering."""
    if tag is NEAR_ZERO:
        return RationalFunction(X, tag=tag)
    return RationalFunction(Polynomial((1,)), X, tag)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if a.tag is not b.tag:
        raise TagMismatch(f"cannot combine {a.tag.value} with {b.tag.value}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_sign(a: RationalFunction) -> Sign:
    if not a.num:
        return Sign.ZERO
    if a.tag is AT_INFINITY:
        return rat_sign(a.num.leading)
    return Sign(rat_sign(a.num.trailing) * rat_sign(a.den.trailing))


def rf_cmp(a, b) -> Ordering:
    if not isinstance(a, RationalFunction):
        a = RationalFunction._coerce(a, b.tag)
    b = RationalFunction._coerce(b, a.tag)
    if b is NotImplemented:
        raise TypeError("rf_cmp needs rational functions or rationals")
    # sign of a.num*b.den - b.num*a.den, corrected for the denominators
    diff = a.num * b.den - b.num * a.den
    if not diff:
        return Ordering.EQUAL
    if a.tag is AT_INFINITY:
        s = rat_sign(diff.leading)
    else:
        s = rat_sign(diff.trailing) * rat_sign(a.den.trailing) * rat_sign(b.den.trailing)
    return Ordering(s)


def rf_abs(a: RationalFunction) -> RationalFunction:
    return -a if rf_sign(a) < 0 else a


def rf_magnitude_order(a: RationalFunction) -> int:
    """``deg num - deg den`` at infinity, ``val den - val num`` near zero.

    Positive means infinite, negative means infinitesimal.
    """
    if not a.num:
        raise ValueError("zero has no order of magnitude")
    if a.tag is AT_INFINITY:
        return a.num.degree - a.den.degree
    return a.den.valuation - a.num.valuation


def rf_classify(a: RationalFunction) -> Classification:
    if not a.num:
        return Classification.ZERO
    return classify_by_order(rf_magnitude_order(a), rf_sign(a))


def rf_standard_part(a: RationalFunction) -> Fraction:
    """The rational infinitely close to a finite element."""
    if not a.num:
        return Fraction(0)
    order = rf_magnitude_order(a)
    if order > 0:
        raise ValueError("infinite elements have no standard part")
    if order < 0:
        return Fraction(0)
    if a.tag is AT_INFINITY:
        return a.num.leading / a.den.leading
    return a.num.trailing / a.den.trailing


def rf_swap(a: RationalFunction) -> RationalFunction:
    """Image under the order isomorphism ``w <-> 1/e``."""
    d = max(a.num.degree, a.den.degree, 0)
    other = NEAR_ZERO if a.tag is AT_INFINITY else AT_INFINITY
    return RationalFunction(a.num.reversed(d) if a.num else a.num,
                            a.den.reversed(d), other)


def sign_stable_bound(a: RationalFunction) -> Fraction:
    """Rational ``B`` past which evaluation reproduces :func:`rf_sign`.

    AT_INFINITY: sign of ``a(r)`` is constant for rational ``r >= B``.
    NEAR_ZERO: sign of ``a(1/N)`` is constant for ``N >= B``.
    Derived from Cauchy root bounds of numerator and denominator.
    """
    def bound(p: Polynomial):
        if a.tag is AT_INFINITY:
            return p.root_bound()
        v = p.valuation
        stripped = Polynomial._raw(p.coeffs[v:])
        return stripped.reversed().root_bound()

    polys = [a.den] + ([a.num] if a.num else [])
    return max(bound(p) for p in polys)


def rf_to_laurent(a: RationalFunction) -> LaurentSeries:
    """Expansion of a NEAR_ZERO rational function at ``e = 0``."""
    if a.tag is not NEAR_ZERO:
        raise TagMismatch("Laurent expansion needs the near-zero ordering; use rf_swap")
    num = ls_from_coefficients(dict(enumerate(a.num.coeffs)))
    if num.zero_tag:
        return num
    den = ls_from_coefficients(dict(enumerate(a.den.coeffs)))
    if a.den.is_constant():
        return num * ls_from_coefficients({0: 1 / a.den[0]})
    return num * ls_recip(den, horizon=max(len(a.den), 1))
