"""Uniform ordered-field handles over Q, Q(w) and Q((e)).

Probes are written once against :class:`FieldHandle` and run unchanged in
each field.  Elements are the native values of each implementation
(``Fraction``, ``RationalFunction``, ``LaurentSeries``); a handle never
mixes them.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionExhausted, UnsupportedField
from .kernel import Ordering, Sign, as_rational, format_rational, rat_cmp, rat_sign
from .laurent import (DEFAULT_HORIZON, DEFAULT_ORDER, EXACT_ZERO, LaurentSeries,
                      ls_abs, ls_add, ls_const, ls_epsilon, ls_from_coefficients,
                      ls_leading_term, ls_mul, ls_omega, ls_recip, ls_scale, ls_sub)
from .polynomial import Polynomial
from .ratfun import (AT_INFINITY, NEAR_ZERO, Classification, RationalFunction,
                     classify_by_order, epsilon, omega, rf_abs, rf_classify, rf_cmp,
                     rf_const, rf_sign, rf_standard_part, rf_swap, rf_to_laurent)
from .results import ProbeResult, Status, Witness, WitnessKind


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


class FieldHandle:
    name = ""
    label = ""
    archimedean = False

    def __init__(self, horizon=None, order=None):
        self.horizon = horizon if horizon is not None else _env_int("ORDFIELD_HORIZON", DEFAULT_HORIZON)
        self.order = order if order is not None else _env_int("ORDFIELD_ORDER", DEFAULT_ORDER)

    def __repr__(self):
        return f"<{type(self).__name__} {self.label}>"

    # subclasses provide: from_rational, is_element, add, sub, mul, div, neg,
    # sign, classify, standard_part, format, and (non-Archimedean) omega.

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    def const(self, q):
        return self.from_rational(as_rational(q))

    def cmp(self, a, b) -> Ordering:
        return Ordering(self.sign(self.sub(a, b)))

    def eq(self, a, b) -> bool:
        return self.cmp(a, b) == Ordering.EQUAL

    def lt(self, a, b):
        return self.cmp(a, b) < 0

    def le(self, a, b):
        return self.cmp(a, b) <= 0

    def gt(self, a, b):
        return self.cmp(a, b) > 0

    def ge(self, a, b):
        return self.cmp(a, b) >= 0

    def abs(self, a):
        return self.neg(a) if self.sign(a) < 0 else a

    def max(self, a, b):
        return b if self.lt(a, b) else a

    def min(self, a, b):
        return a if self.le(a, b) else b

    def interval(self, lo, hi) -> "Interval":
        if self.gt(lo, hi):
            raise ValueError("interval with lo > hi")
        return Interval(lo, hi)

    def omega(self):
        raise UnsupportedField(f"{self.label} has no infinite elements")

    def epsilon(self):
        raise UnsupportedField(f"{self.label} has no infinitesimals")

    def nat_bound(self, x):
        """Least ``n >= 1`` with ``n > x``, or ``None`` if ``x`` is positive infinite."""
        c = self.classify(x)
        if c is Classification.POSITIVE_INFINITE:
            return None
        if c is Classification.NEGATIVE_INFINITE:
            return 1
        n = max(1, math.floor(self.standard_part(x)) + 1)
        while n > 1 and self.gt(self.const(n - 1), x):
            n -= 1
        while not self.gt(self.const(n), x):
            n += 1
        return n


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object

    def contains(self, h: FieldHandle, x) -> bool:
        return h.le(self.lo, x) and h.le(x, self.hi)


class RationalField(FieldHandle):
    name = "q"
    label = "Q"
    archimedean = True

    def is_element(self, x):
        return isinstance(x, Fraction)

    def from_rational(self, q):
        return as_rational(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        from .kernel import rat_arith
        return rat_arith(a, b, "div")

    def neg(self, a):
        return -a

    def sign(self, a) -> Sign:
        return rat_sign(a)

    def cmp(self, a, b) -> Ordering:
        return rat_cmp(a, b)

    def eq(self, a, b):
        return a == b

    def classify(self, a):
        return Classification.ZERO if a == 0 else Classification.FINITE_NON_INFINITESIMAL

    def standard_part(self, a):
        return a

    def nat_bound(self, x):
        return max(1, math.floor(x) + 1)

    def format(self, a):
        return format_rational(a)


class RationalFunctionField(FieldHandle):
    archimedean = False

    def __init__(self, tag=AT_INFINITY, horizon=None, order=None):
        super().__init__(horizon, order)
        self.tag = tag
        self.name = "ratfun" if tag is AT_INFINITY else "ratfun-eps"
        self.label = "Q(w)" if tag is AT_INFINITY else "Q(e)"

    def is_element(self, x):
        return isinstance(x, RationalFunction) and x.tag is self.tag

    def from_rational(self, q):
        return rf_const(q, self.tag)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def abs(self, a):
        return rf_abs(a)

    def sign(self, a):
        return rf_sign(a)

    def cmp(self, a, b):
        return rf_cmp(a, b)

    def eq(self, a, b):
        return a == b

    def classify(self, a):
        return rf_classify(a)

    def standard_part(self, a):
        return rf_standard_part(a)

    def omega(self):
        return omega(self.tag)

    def epsilon(self):
        return epsilon(self.tag)

    def to_laurent(self, a) -> LaurentSeries:
        return rf_to_laurent(a if a.tag is NEAR_ZERO else rf_swap(a))

    def format(self, a):
        return a.format()


class LaurentField(FieldHandle):
    name = "laurent"
    label = "Q((e))"
    archimedean = False

    def is_element(self, x):
        return isinstance(x, LaurentSeries)

    def from_rational(self, q):
        return ls_const(q)

    def add(self, a, b):
        return ls_add(a, b)

    def sub(self, a, b):
        return ls_sub(a, b)

    def mul(self, a, b):
        return ls_mul(a, b)

    def div(self, a, b):
        return ls_mul(a, ls_recip(b, self.horizon))

    def neg(self, a):
        return ls_scale(a, -1)

    def abs(self, a):
        return ls_abs(a, self.horizon)

    def sign(self, a):
        lead = ls_leading_term(a, self.horizon)
        return Sign.ZERO if lead is EXACT_ZERO else rat_sign(lead.coefficient)

    def eq(self, a, b):
        # exact for finite supports, otherwise equality of every coefficient
        # below the handle's order
        return a.agrees_with(b, self.order)

    def leading_exponent(self, a):
        lead = ls_leading_term(a, self.horizon)
        if lead is EXACT_ZERO:
            raise ValueError("zero has no leading exponent")
        return lead.exponent

    def classify(self, a):
        lead = ls_leading_term(a, self.horizon)
        if lead is EXACT_ZERO:
            return Classification.ZERO
        return classify_by_order(-lead.exponent, rat_sign(lead.coefficient))

    def standard_part(self, a):
        if self.classify(a).is_infinite:
            raise ValueError("infinite elements have no standard part")
        return a.coeff(0)

    def omega(self):
        return ls_omega()

    def epsilon(self):
        return ls_epsilon()

    def format(self, a):
        return a.format(self.order)


FIELD_NAMES = ("q", "ratfun", "laurent")


def get_field(name: str, horizon=None, order=None) -> FieldHandle:
    key = name.lower()
    if key in ("q", "rationals", "rat"):
        return RationalField(horizon, order)
    if key in ("ratfun", "q(w)", "ratfun-w"):
        return RationalFunctionField(AT_INFINITY, horizon, order)
    if key in ("ratfun-eps", "ratfun-e", "q(e)"):
        return RationalFunctionField(NEAR_ZERO, horizon, order)
    if key in ("laurent", "q((e))"):
        return LaurentField(horizon, order)
    raise ValueError(f"unknown field {name!r}; choose from q, ratfun, ratfun-eps, laurent")


def default_fields():
    return [RationalField(), RationalFunctionField(AT_INFINITY), LaurentField()]


# -- embeddings -----------------------------------------------------------------


def embed_rational(h: FieldHandle, q):
    return h.from_rational(as_rational(q))


def embed_ratfun_in_laurent(a: RationalFunction) -> LaurentSeries:
    """Image of a rational function in Q((e)).

    Near-zero functions expand directly; functions ordered at infinity are
    first carried over by ``w -> 1/e``.
    """
    return rf_to_laurent(a if a.tag is NEAR_ZERO else rf_swap(a))


# -- sampling ---------------------------------------------------------------------


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _small_rational(rng, nonzero=True):
    while True:
        q = Fraction(rng.randint(-100, 100), rng.randint(1, 100))
        if q or not nonzero:
            return q


def _sample_poly(rng, degree):
    coeffs = [Fraction(0) if rng.random() < 0.3 else _small_rational(rng)
              for _ in range(degree)]
    coeffs.append(_small_rational(rng))
    return Polynomial(coeffs)


def sample_element(h: FieldHandle, rng_seed=0, size_budget: int = 4):
    """Deterministic pseudo-random element of ``h``.

    Q: ``p/q`` with ``|p| <= 10**4``, ``1 <= q <= 100``.
    Rational functions: numerator and denominator degree ``<= min(4, size_budget)``,
    coefficients ``p/q`` with ``|p|, q <= 100``.
    Laurent: up to ``max(1, size_budget)`` terms with exponents in ``[-4, 8]``.
    ``rng_seed`` may be an int/str seed or a ``random.Random`` to draw from.
    """
    rng = _rng(rng_seed)
    if isinstance(h, RationalField):
        return Fraction(rng.randint(-10 ** 4, 10 ** 4), rng.randint(1, 100))
    if isinstance(h, RationalFunctionField):
        dmax = max(0, min(4, size_budget))
        if rng.random() < 0.02:
            return h.zero
        num = _sample_poly(rng, rng.randint(0, dmax))
        den = Polynomial()
        while not den:
            den = _sample_poly(rng, rng.randint(0, dmax))
        return RationalFunction(num, den, h.tag)
    if isinstance(h, LaurentField):
        if rng.random() < 0.02:
            return h.zero
        count = rng.randint(1, max(1, size_budget))
        exps = rng.sample(range(-4, 9), count)
        return ls_from_coefficients({k: _small_rational(rng) for k in exps})
    raise TypeError(f"no sampler for {h!r}")


# -- the ordered-field axiom suite ---------------------------------------------------


def _axiom_checks(h, x, y, z):
    add, mul, eq = h.add, h.mul, h.eq
    memo = {}

    def shared(key, make):
        # x + y, xy and y + z appear in several laws; compute each once per triple
        if key not in memo:
            memo[key] = make()
        return memo[key]

    def xy_sum():
        return shared("x+y", lambda: add(x, y))

    def xy_prod():
        return shared("xy", lambda: mul(x, y))

    def yz_sum():
        return shared("y+z", lambda: add(y, z))

    yield "additive associativity", lambda: eq(add(xy_sum(), z), add(x, yz_sum()))
    yield "multiplicative associativity", lambda: eq(mul(xy_prod(), z), mul(x, mul(y, z)))
    yield "additive commutativity", lambda: eq(xy_sum(), add(y, x))
    yield "multiplicative commutativity", lambda: eq(xy_prod(), mul(y, x))
    yield "distributivity", lambda: eq(mul(x, yz_sum()), add(xy_prod(), mul(x, z)))
    yield "additive identity", lambda: eq(add(x, h.zero), x)
    yield "multiplicative identity", lambda: eq(mul(x, h.one), x)
    yield "additive inverse", lambda: eq(add(x, h.neg(x)), h.zero)
    yield "subtraction", lambda: eq(h.sub(x, y), add(x, h.neg(y)))
    if h.sign(x) != Sign.ZERO:
        def inverse():
            inv = h.div(h.one, x)
            return eq(mul(x, inv), h.one) and eq(mul(inv, x), h.one)

        yield "multiplicative inverse", inverse
    if h.lt(x, y):
        yield "order translation", lambda: h.lt(add(x, z), add(y, z))
    if h.sign(x) > 0 and h.sign(y) > 0:
        yield "order multiplication", lambda: h.sign(mul(x, y)) > 0

    def trichotomy():
        c = h.cmp(x, y)
        return [c < 0, h.eq(x, y), c > 0].count(True) == 1 and (c == 0) == h.eq(x, y)

    yield "trichotomy", trichotomy


def axiom_suite(h: FieldHandle, trials: int = 1000, seed=0) -> ProbeResult:
    """Check the ordered-field axioms exactly on ``trials`` sampled triples."""
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(f"axioms:{seed}:{h.name}")
    result = ProbeResult(None, h.label, Status.HOLDS, slug="ordered-field-axioms")
    inconclusive = 0
    checked = 0
    for t in range(trials):
        x, y, z = (sample_element(h, rng) for _ in range(3))
        try:
            for name, check in _axiom_checks(h, x, y, z):
                checked += 1
                if not check():
                    triple = (x, y, z)
                    result.witnesses.append(Witness(
                        WitnessKind.AXIOM_VIOLATION, triple,
                        f"{name} fails for x={h.format(x)}, y={h.format(y)}, z={h.format(z)}",
                        check=lambda c=check: not c(),
                        details={"axiom": name, "trial": t}))
                    result.status = Status.FAILS
                    break
        except PrecisionExhausted as exc:
            inconclusive += 1
            result.log(f"trial {t}: inconclusive ({exc})")
        if len(result.witnesses) >= 5:
            break
    result.log(f"{trials} trials, {checked} axiom instances checked, {inconclusive} inconclusive")
    if result.status is Status.HOLDS and inconclusive == trials:
        result.status = Status.INCONCLUSIVE
    return result
