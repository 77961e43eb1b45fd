"""Formal Laurent series over Q with lazily computed coefficients.

A series is a lower exponent bound plus a coefficient rule.  Series with
finitely many nonzero terms are stored exactly as a dict, so arithmetic on
them is eager and their zero test is decidable.  Every other series is a
memoized stream: coefficients are produced in ascending order, each at most
once, and never change after they are observed.

Deciding whether a stream is zero is impossible in general.  Operations
that need a leading term scan up to a caller-supplied ``horizon`` and raise
:class:`PrecisionExhausted` if nothing nonzero turns up.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import (DivisionByZero, DuplicateExponent, HeuristicInconclusive,
                     NotSummable, PrecisionExhausted, StabilizationViolated)
from .kernel import Ordering, Sign, as_rational, format_rational, rat_sign

DEFAULT_HORIZON = 64
DEFAULT_ORDER = 32

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Term:
    exponent: int
    coefficient: Fraction

    def __post_init__(self):
        c = as_rational(self.coefficient)
        if c == 0:
            raise ValueError("a term needs a nonzero coefficient")
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "exponent", int(self.exponent))


class ExactZero:
    """Marker returned by :func:`ls_leading_term` for structural zeros."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXACT_ZERO"

    def __bool__(self):
        return False


EXACT_ZERO = ExactZero()


class LaurentSeries:
    __slots__ = ("lower_bound", "zero_tag", "_terms", "_rule", "_cache", "_lock",
                 "__weakref__")

    def __init__(self, lower_bound: int, rule=None, *, terms=None):
        if terms is not None:
            terms = {int(k): v for k, v in terms.items() if v}
            self._terms = terms
            self.lower_bound = min(terms) if terms else 0
            self.zero_tag = not terms
            self._rule = None
        else:
            self._terms = None
            self.lower_bound = int(lower_bound)
            self.zero_tag = False
            self._rule = rule
        self._cache = []
        self._lock = threading.RLock()

    @classmethod
    def lazy(cls, lower_bound: int, rule: Callable[[int], Fraction]) -> "LaurentSeries":
        """Series whose coefficient at ``k >= lower_bound`` is ``rule(k)``.

        ``rule`` is called in ascending order of ``k`` and at most once per
        exponent; it may read this series' own lower coefficients.
        """
        return cls(lower_bound, rule)

    @property
    def is_finite(self) -> bool:
        """True when the full support is known exactly."""
        return self._terms is not None

    @property
    def support(self):
        if self._terms is None:
            raise ValueError("support of a lazy series is not known")
        return sorted(self._terms)

    def coeff(self, k: int) -> Fraction:
        if self._terms is not None:
            return self._terms.get(k, _ZERO)
        i = k - self.lower_bound
        if i < 0:
            return _ZERO
        cache = self._cache
        if i < len(cache):
            return cache[i]
        with self._lock:
            while len(cache) <= i:
                cache.append(as_rational(self._rule(self.lower_bound + len(cache))))
            return cache[i]

    def coefficients(self, start: int, stop: int):
        return [self.coeff(k) for k in range(start, stop)]

    def truncate(self, order: int) -> "LaurentSeries":
        """Finite series keeping the terms of exponent ``< order``."""
        if self._terms is not None:
            return LaurentSeries(0, terms={k: v for k, v in self._terms.items() if k < order})
        return LaurentSeries(0, terms={k: self.coeff(k)
                                       for k in range(self.lower_bound, order)})

    def agrees_with(self, other, order: int = DEFAULT_ORDER) -> bool:
        """Coefficientwise equality for every exponent below ``order``."""
        other = _coerce(other)
        if self._terms is not None and other._terms is not None:
            return ({k: v for k, v in self._terms.items() if k < order}
                    == {k: v for k, v in other._terms.items() if k < order})
        lo = min(self.lower_bound, other.lower_bound)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, order))

    # -- arithmetic dunders ------------------------------------------------

    def __neg__(self):
        return ls_scale(self, -1)

    def __add__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_sub(other, self)

    def __mul__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_mul(self, ls_recip(other))

    def __rtruediv__(self, other):
        other = _coerce(other, strict=False)
        return NotImplemented if other is NotImplemented else ls_mul(other, ls_recip(self))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else ls_recip(self)
        n = abs(n)
        result = ls_const(1)
        while n:
            if n & 1:
                result = ls_mul(result, base)
            n >>= 1
            if n:
                base = ls_mul(base, base)
        return result

    def __abs__(self):
        return ls_abs(self)

    def __lt__(self, other):
        return ls_cmp(self, other) < 0

    def __le__(self, other):
        return ls_cmp(self, other) <= 0

    def __gt__(self, other):
        return ls_cmp(self, other) > 0

    def __ge__(self, other):
        return ls_cmp(self, other) >= 0

    # -- display -----------------------------------------------------------

    def format(self, order: int = DEFAULT_ORDER) -> str:
        if self.zero_tag:
            return "0"
        if self._terms is not None:
            items = sorted((k, v) for k, v in self._terms.items() if k < order)
        else:
            items = [(k, c) for k in range(self.lower_bound, order)
                     if (c := self.coeff(k))]
        parts = [_format_term(k, c) for k, c in items]
        parts.append(f"O(e^{order})")
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentSeries({self.format(8)!r})"


def _format_term(k, c):
    if k == 0:
        return format_rational(c)
    mono = "e" if k == 1 else f"e^{k}"
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{format_rational(c)}*{mono}"


def _coerce(value, strict=True):
    if isinstance(value, LaurentSeries):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ls_const(value)
    if strict:
        raise TypeError(f"cannot use {type(value).__name__} as a Laurent series")
    return NotImplemented


# -- construction -------------------------------------------------------------


def ls_from_terms(terms) -> LaurentSeries:
    """Finite series from ``Term`` objects or ``(exponent, coefficient)`` pairs."""
    out = {}
    for t in terms:
        if not isinstance(t, Term):
            t = Term(*t)
        if t.exponent in out:
            raise DuplicateExponent(f"exponent {t.exponent} given twice")
        out[t.exponent] = t.coefficient
    return LaurentSeries(0, terms=out)


def ls_from_coefficients(mapping) -> LaurentSeries:
    """Finite series from ``{exponent: coefficient}``; zero entries are dropped."""
    return LaurentSeries(0, terms={k: as_rational(v) for k, v in mapping.items()})


def ls_const(q) -> LaurentSeries:
    return LaurentSeries(0, terms={0: as_rational(q)})


def ls_zero() -> LaurentSeries:
    return LaurentSeries(0, terms={})


def ls_epsilon() -> LaurentSeries:
    return LaurentSeries(0, terms={1: Fraction(1)})


def ls_omega() -> LaurentSeries:
    return LaurentSeries(0, terms={-1: Fraction(1)})


def ls_monomial(exponent: int, coefficient=1) -> LaurentSeries:
    return LaurentSeries(0, terms={exponent: as_rational(coefficient)})


# -- arithmetic ---------------------------------------------------------------


def ls_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if a.zero_tag:
        return b
    if b.zero_tag:
        return a
    if a.is_finite and b.is_finite:
        out = dict(a._terms)
        for k, v in b._terms.items():
            out[k] = out.get(k, _ZERO) + v
        return LaurentSeries(0, terms=out)
    return LaurentSeries.lazy(min(a.lower_bound, b.lower_bound),
                              lambda k: a.coeff(k) + b.coeff(k))


def ls_scale(a: LaurentSeries, q) -> LaurentSeries:
    q = as_rational(q)
    if q == 0 or a.zero_tag:
        return ls_zero()
    if a.is_finite:
        return LaurentSeries(0, terms={k: v * q for k, v in a._terms.items()})
    return LaurentSeries.lazy(a.lower_bound, lambda k: a.coeff(k) * q)


def ls_sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return ls_add(a, ls_scale(b, -1))


def ls_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if a.zero_tag or b.zero_tag:
        return ls_zero()
    if a.is_finite and b.is_finite:
        out = {}
        for i, x in a._terms.items():
            for j, y in b._terms.items():
                out[i + j] = out.get(i + j, _ZERO) + x * y
        return LaurentSeries(0, terms=out)
    if b.is_finite:
        a, b = b, a
    lb = a.lower_bound + b.lower_bound
    if a.is_finite:
        items = sorted(a._terms.items())
        return LaurentSeries.lazy(lb, lambda k: sum(
            (x * b.coeff(k - i) for i, x in items), _ZERO))
    la, lbb = a.lower_bound, b.lower_bound
    return LaurentSeries.lazy(lb, lambda k: sum(
        (a.coeff(i) * b.coeff(k - i) for i in range(la, k - lbb + 1)), _ZERO))


def ls_arith(a, b, op: str) -> LaurentSeries:
    a, b = _coerce(a), _coerce(b)
    if op == "add":
        return ls_add(a, b)
    if op == "sub":
        return ls_sub(a, b)
    if op == "mul":
        return ls_mul(a, b)
    if op == "div":
        return ls_mul(a, ls_recip(b))
    raise ValueError(f"unknown operation {op!r}")


def ls_leading_term(a: LaurentSeries, horizon: int = DEFAULT_HORIZON):
    """Lowest-exponent nonzero term, or ``EXACT_ZERO`` for a structural zero."""
    if a.zero_tag:
        return EXACT_ZERO
    if a.is_finite:
        k = min(a._terms)
        return Term(k, a._terms[k])
    for k in range(a.lower_bound, horizon + 1):
        c = a.coeff(k)
        if c:
            return Term(k, c)
    raise PrecisionExhausted(
        f"no nonzero coefficient at exponents {a.lower_bound}..{horizon}", horizon)


def ls_recip(a: LaurentSeries, horizon: int = DEFAULT_HORIZON) -> LaurentSeries:
    """Multiplicative inverse via the standard reciprocal recurrence.

    With ``a = a0 e^m (1 + ...)`` and ``u_j`` the coefficient of ``e^(m+j)``:
    ``b_0 = 1/a0``, ``b_k = -(sum_{j=1..k} u_j b_{k-j}) / a0``, and the
    result is ``sum_k b_k e^(k-m)``.
    """
    a = _coerce(a)
    if a.zero_tag:
        raise DivisionByZero("reciprocal of the zero series")
    lead = ls_leading_term(a, horizon)
    m, a0 = lead.exponent, lead.coefficient
    if a.is_finite and len(a._terms) == 1:
        return LaurentSeries(0, terms={-m: 1 / a0})
    inv0 = 1 / a0
    result = LaurentSeries(-m)
    if a.is_finite:
        tail = sorted((e - m, c) for e, c in a._terms.items() if e > m)

        def rule(k):
            i = k + m
            if i == 0:
                return inv0
            s = _ZERO
            for j, u in tail:
                if j > i:
                    break
                s += u * result.coeff(k - j)
            return -s * inv0
    else:
        def rule(k):
            i = k + m
            if i == 0:
                return inv0
            s = _ZERO
            for j in range(1, i + 1):
                u = a.coeff(m + j)
                if u:
                    s += u * result.coeff(k - j)
            return -s * inv0
    result._rule = rule
    return result


def ls_sign(a, horizon: int = DEFAULT_HORIZON) -> Sign:
    lead = ls_leading_term(_coerce(a), horizon)
    if lead is EXACT_ZERO:
        return Sign.ZERO
    return rat_sign(lead.coefficient)


def ls_cmp(a, b, horizon: int = DEFAULT_HORIZON) -> Ordering:
    return Ordering(ls_sign(ls_sub(_coerce(a), _coerce(b)), horizon))


def ls_abs(a, horizon: int = DEFAULT_HORIZON) -> LaurentSeries:
    a = _coerce(a)
    return ls_scale(a, -1) if ls_sign(a, horizon) < 0 else a


def ls_norm(a, horizon: int = DEFAULT_HORIZON) -> Fraction:
    """``2**-N`` where ``N`` is the exponent of the leading term; 0 for zero."""
    lead = ls_leading_term(_coerce(a), horizon)
    if lead is EXACT_ZERO:
        return _ZERO
    return Fraction(2) ** (-lead.exponent)


def ls_principal_part(a: LaurentSeries):
    """Nonzero terms with negative exponent, ascending."""
    if a.is_finite:
        return [Term(k, v) for k, v in sorted(a._terms.items()) if k < 0]
    return [Term(k, c) for k in range(a.lower_bound, 0) if (c := a.coeff(k))]


# -- sequences and limits --------------------------------------------------------


@dataclass
class SeriesSequence:
    """A sequence ``n -> at(n)`` of Laurent series.

    ``stabilization_bound(k)`` (for ``k >= 0``) is an index past which the
    coefficients at every exponent ``<= k`` no longer change.  For a
    sequence of series *terms* being summed it is instead the index past
    which those coefficients are all zero.  ``constant_from`` marks a
    sequence that is constant from that index on.
    """

    at: Callable[[int], LaurentSeries]
    stabilization_bound: Optional[Callable[[int], int]] = None
    constant_from: Optional[int] = None
    name: str = ""
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, n: int) -> LaurentSeries:
        s = self._memo.get(n)
        if s is None:
            s = self._memo[n] = _coerce(self.at(n))
        return s


@dataclass(frozen=True)
class NoStabilization:
    """Coefficient of ``e^exponent`` differs between indices ``i < j``."""

    exponent: int
    i: int
    j: int
    coefficient_i: Fraction
    coefficient_j: Fraction


_SPOT_OFFSETS = (1, 2, 5)


def ls_seq_limit(s: SeriesSequence, order: int = DEFAULT_ORDER, *, scan_budget: int = 64):
    """Limit of a sequence of series, or a :class:`NoStabilization` witness.

    A limit is only returned when the sequence carries a stabilization
    bound (or ``constant_from``); the bound is spot-checked at a few later
    indices for every exponent below ``order``.  Without a bound the
    sequence is scanned for a coefficient that is still moving in the
    second half of the scan window.
    """
    if s.constant_from is not None:
        base = s(s.constant_from)
        for off in _SPOT_OFFSETS:
            if not s(s.constant_from + off).agrees_with(base, order):
                raise StabilizationViolated(
                    f"sequence changes after index {s.constant_from + off}")
        return base
    if s.stabilization_bound is not None:
        bound = s.stabilization_bound
        base = s(bound(0))
        lb = min(base.lower_bound, 1)
        for k in range(order):
            n = bound(k)
            ref = s(n)
            for off in _SPOT_OFFSETS:
                later = s(n + off)
                lo = min(ref.lower_bound, later.lower_bound, lb)
                for j in range(lo, k + 1):
                    if later.coeff(j) != ref.coeff(j):
                        raise StabilizationViolated(
                            f"coefficient of e^{j} changes between indices {n} and {n + off}")
        return LaurentSeries.lazy(lb, lambda k: s(bound(max(k, 0))).coeff(k))

    half = scan_budget // 2
    last = s(scan_budget)
    lo = min(min(s(n).lower_bound for n in range(half, scan_budget + 1)), 0)
    for k in range(lo, order):
        ck = last.coeff(k)
        for i in range(half, scan_budget):
            ci = s(i).coeff(k)
            if ci != ck:
                return NoStabilization(k, i, scan_budget, ci, ck)
    raise HeuristicInconclusive(
        f"no bound supplied and no moving coefficient below e^{order} "
        f"in indices {half}..{scan_budget}")


def ls_sum_series(terms: SeriesSequence, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Sum of a series whose terms tend to zero.

    ``terms.stabilization_bound(k)`` must be an index from which every term
    has zero coefficients at all exponents ``<= k``; the coefficient of
    ``e^k`` in the sum is then a finite sum.  The bound is spot-checked
    below ``order``.
    """
    bound = terms.stabilization_bound
    if bound is None:
        raise HeuristicInconclusive("summation needs a stabilization bound")
    for k in range(order):
        n0 = bound(k)
        for off in (0,) + _SPOT_OFFSETS:
            t = terms(n0 + off)
            if t.zero_tag:
                continue
            for j in range(min(t.lower_bound, 0), k + 1):
                if t.coeff(j):
                    raise NotSummable(
                        f"term {n0 + off} has a nonzero e^{j} coefficient "
                        f"past its claimed bound {n0}")
    head = bound(0)
    lb = min([terms(n).lower_bound for n in range(head)] + [1])
    return LaurentSeries.lazy(lb, lambda k: sum(
        (terms(n).coeff(k) for n in range(bound(max(k, 0)))), _ZERO))


def ls_partial_sums(terms: SeriesSequence) -> SeriesSequence:
    """Sequence of partial sums ``s_n = terms(0) + ... + terms(n)``."""
    sums = {}

    def at(n):
        if n in sums:
            return sums[n]
        start = max((i for i in sums if i < n), default=-1)
        acc = sums[start] if start >= 0 else ls_zero()
        for i in range(start + 1, n + 1):
            acc = ls_add(acc, terms(i))
            sums[i] = acc
        return acc

    bound = terms.stabilization_bound
    return SeriesSequence(at, stabilization_bound=bound,
                          name=f"partial sums of {terms.name}".strip())
