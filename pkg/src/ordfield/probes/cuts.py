"""Cuts with decidable membership, and the refuters that defeat every candidate."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..errors import NotAGap, StabilizedSequence, UnsupportedField
from ..fields import FieldHandle, Interval, LaurentField, RationalField
from ..kernel import as_rational
from ..ratfun import Classification
from ..results import Witness, WitnessKind


class Side(str, enum.Enum):
    A = "A"
    B = "B"

    def __str__(self):
        return self.value


@dataclass
class Cut:
    """A partition of a field into a lower set A and an upper set B.

    ``kind`` is one of ``sqrt2``, ``halo`` or ``finite`` and selects the
    refutation strategy.  ``rational_bracket`` is a pair of rationals
    ``(lo, hi)`` with ``lo`` in A and ``hi`` in B, when one exists.
    """

    field: FieldHandle
    name: str
    kind: str
    side_of: Callable[[object], Side] = field(repr=False)
    bracket: Interval = None
    rational_bracket: Optional[tuple] = None
    center: Optional[Fraction] = None
    members: tuple = ()
    _dyadics: object = field(default=None, repr=False)

    def in_a(self, x) -> bool:
        return self.side_of(x) is Side.A

    def in_b(self, x) -> bool:
        return self.side_of(x) is Side.B

    def dyadics(self) -> "DyadicApproximants":
        if self._dyadics is None:
            self._dyadics = DyadicApproximants(self)
        return self._dyadics


def cut_sqrt2(h: FieldHandle) -> Cut:
    """x in A iff x < 0 or x^2 < 2.  No element of any shipped field squares to 2."""
    two = h.const(2)

    def side_of(x):
        if h.sign(x) < 0 or h.lt(h.mul(x, x), two):
            return Side.A
        return Side.B

    lo, hi = h.const(1), h.const(2)
    return Cut(h, "sqrt2", "sqrt2", side_of, Interval(lo, hi),
               (Fraction(1), Fraction(2)), None, (lo, hi))


def cut_halo(h: FieldHandle, center=Fraction(3, 2)) -> Cut:
    """x in A iff x - center is not positive, or is a positive infinitesimal."""
    if h.archimedean:
        raise UnsupportedField(f"{h.label} has no infinitesimals, so the halo cut is empty")
    center = as_rational(center)
    c = h.const(center)

    def side_of(x):
        d = h.sub(x, c)
        if h.sign(d) <= 0 or h.classify(d) is Classification.POSITIVE_INFINITESIMAL:
            return Side.A
        return Side.B

    return Cut(h, f"halo({center})", "halo", side_of,
               Interval(h.const(center - 1), h.const(center + 1)),
               (center - 1, center + 1), center, (c, h.const(center + 1)))


def cut_finite(h: FieldHandle) -> Cut:
    """B is the set of positively infinite elements; A is everything else."""
    if h.archimedean:
        raise UnsupportedField(f"{h.label} has no infinite elements")

    def side_of(x):
        if h.classify(x) is Classification.POSITIVE_INFINITE:
            return Side.B
        return Side.A

    w = h.omega()
    return Cut(h, "finite/infinite", "finite", side_of, Interval(h.zero, w),
               None, None, (h.zero, w))


def cut_laurent_finite(h: FieldHandle = None) -> Cut:
    return cut_finite(h if h is not None else LaurentField())


# -- refuters -------------------------------------------------------------------


def _sqrt2_step(h, c):
    # c' = c - (c^2 - 2)/(c + 2) = (2c + 2)/(c + 2): same side, closer to the boundary
    return h.div(h.add(h.mul(h.const(2), c), h.const(2)), h.add(c, h.const(2)))


def _wrong_side_check(cut, candidate, x, side):
    h = cut.field

    def check():
        if side is Side.A:
            return cut.in_a(x) and h.gt(x, candidate)
        return cut.in_b(x) and h.lt(x, candidate)

    return check


def refute_cutpoint(cut: Cut, candidate, bracket: Interval = None) -> Witness:
    """An element on the wrong side of ``candidate``.

    Either ``x > candidate`` with ``x`` in A, or ``x < candidate`` with
    ``x`` in B, so ``candidate`` does not separate A from B.
    For the sqrt2 cut the witness also lies strictly inside ``bracket``
    (default: the cut's own bracket), so repeated refutation tightens it.
    """
    h = cut.field
    side = cut.side_of(candidate)
    fmt = h.format
    if cut.kind == "sqrt2":
        b = bracket or cut.bracket
        if not (cut.in_a(b.lo) and cut.in_b(b.hi)):
            raise ValueError("bracket must run from an A element to a B element")
        if side is Side.A:
            base = h.max(candidate, b.lo)
        else:
            base = h.min(candidate, b.hi)
        x = _sqrt2_step(h, base)
        sq = h.sub(h.mul(x, x), h.const(2))
        rel = ">" if side is Side.A else "<"
        cert = (f"x = {fmt(x)} {rel} {fmt(candidate)} and x^2 - 2 = {fmt(sq)} "
                f"{'<' if side is Side.A else '>'} 0, so x is in {side}")
    elif cut.kind == "halo":
        e = h.epsilon()
        x = h.add(candidate, e) if side is Side.A else h.sub(candidate, e)
        d = h.sub(x, h.const(cut.center))
        cert = (f"x = candidate {'+' if side is Side.A else '-'} e; "
                f"x - {cut.center} = {fmt(d)} is {h.classify(d).name.lower()}, so x is in {side}")
    elif cut.kind == "finite":
        x = h.add(candidate, h.one) if side is Side.A else h.sub(candidate, h.one)
        cert = (f"x = candidate {'+' if side is Side.A else '-'} 1 = {fmt(x)} is "
                f"{h.classify(x).name.lower()}, so x is in {side}")
    else:
        raise NotAGap(f"no refutation strategy for cut kind {cut.kind!r}")
    return Witness(WitnessKind.WRONG_SIDE_ELEMENT, (candidate, x), cert,
                   check=_wrong_side_check(cut, candidate, x, side),
                   details={"cut": cut.name, "side": side.value})


def refute_lub(cut: Cut, candidate) -> Witness:
    """Show ``candidate`` is not the least upper bound of A.

    A candidate in A is beaten by a larger member of A.  A candidate in B
    is an upper bound, but the refuter supplies a smaller element of B,
    which is again an upper bound of A.
    """
    w = refute_cutpoint(cut, candidate)
    x = w.elements[1]
    h = cut.field
    if w.details["side"] == Side.A.value:
        kind = WitnessKind.LARGER_MEMBER
        cert = f"{h.format(x)} is in A and exceeds the candidate, which is not an upper bound; " + w.certificate
    else:
        kind = WitnessKind.SMALLER_UPPER_BOUND
        cert = f"{h.format(x)} is in B, hence an upper bound of A, and is below the candidate; " + w.certificate
    return Witness(kind, w.elements, cert, check=w.check, details=w.details)


def local_constancy_witness(cut: Cut, x):
    """A radius ``delta > 0`` with ``(x - delta, x + delta)`` inside x's side.

    The refuter's witness lies on x's side, so taking ``delta`` to be its
    distance from ``x`` puts one ball endpoint there; monotonicity of the
    cut covers the other.
    """
    h = cut.field
    w = refute_cutpoint(cut, x)
    delta = h.abs(h.sub(w.elements[1], x))
    side = cut.side_of(x)
    lo, hi = h.sub(x, delta), h.add(x, delta)
    if h.sign(delta) <= 0 or cut.side_of(lo) is not side or cut.side_of(hi) is not side:
        raise AssertionError("local constancy certificate failed")
    return delta


def locally_constant_check(cut: Cut, x, delta) -> bool:
    h = cut.field
    side = cut.side_of(x)
    return (h.sign(delta) > 0 and cut.side_of(h.sub(x, delta)) is side
            and cut.side_of(h.add(x, delta)) is side)


# -- dyadic approximants ------------------------------------------------------------


class DyadicApproximants:
    """``a_n = max(A ∩ 2^-n Z)`` and ``b_n = a_n + 2^-n = min(B ∩ 2^-n Z)``.

    Level 0 is found by binary search over the integers in the cut's
    rational bracket; each further level costs one membership test.
    """

    def __init__(self, cut: Cut):
        if cut.rational_bracket is None:
            raise StabilizedSequence(
                f"cut {cut.name} has no rational bracket; its dyadic approximants diverge")
        self.cut = cut
        h = cut.field
        lo, hi = cut.rational_bracket
        k_lo, k_hi = int(lo // 1), -int(-hi // 1)
        # invariant: k_lo in A, k_hi in B
        if not cut.in_a(h.const(k_lo)):
            raise ValueError("bracket floor is not in A")
        while k_hi - k_lo > 1:
            mid = (k_lo + k_hi) // 2
            if cut.in_a(h.const(mid)):
                k_lo = mid
            else:
                k_hi = mid
        self._a = [Fraction(k_lo)]

    def a(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("levels start at 0")
        h = self.cut.field
        while len(self._a) <= n:
            level = len(self._a)
            step = Fraction(1, 2 ** level)
            prev = self._a[-1]
            self._a.append(prev + step if self.cut.in_a(h.const(prev + step)) else prev)
        return self._a[n]

    def b(self, n: int) -> Fraction:
        return self.a(n) + Fraction(1, 2 ** n)

    def interval(self, n: int):
        return self.a(n), self.b(n)


def dyadic_approximants(cut: Cut, levels: int):
    d = cut.dyadics()
    return [d.a(n) for n in range(levels + 1)], [d.b(n) for n in range(levels + 1)]


def separation_witness(cut: Cut, candidate, max_level: int = 256) -> Witness:
    """Refute ``candidate`` as the limit of the sqrt2 dyadic approximants.

    With ``d = min(|L^2 - 2| / 8, 1/2)`` some level ``N`` has
    ``a_N - L >= d`` or ``L - b_N >= d``.  Because ``a_n`` ascends and
    ``b_n`` descends, every later ``a_n`` (respectively ``b_n``, and with
    it ``a_n``) stays at distance ``>= d`` from ``L``.
    """
    if cut.kind != "sqrt2":
        raise ValueError("separation refuter is specific to the sqrt2 cut")
    h = cut.field
    L = candidate
    d = h.min(h.div(h.abs(h.sub(h.mul(L, L), h.const(2))), h.const(8)), h.const(Fraction(1, 2)))
    dy = cut.dyadics()
    for n in range(max_level + 1):
        a, b = h.const(dy.a(n)), h.const(dy.b(n))
        if h.ge(h.sub(a, L), d):
            which, gap = "a", h.sub(a, L)
            break
        if h.ge(h.sub(L, b), d):
            which, gap = "b", h.sub(L, b)
            break
    else:
        raise StabilizedSequence(f"no separating level below {max_level} for {h.format(L)}")
    N = n
    cert = (f"d = min(|L^2 - 2|/8, 1/2) = {h.format(d)}; at level {N}, "
            f"{'a_N - L' if which == 'a' else 'L - b_N'} = {h.format(gap)} >= d, and "
            f"{'a_n ascends' if which == 'a' else 'b_n descends'} with a_n < b_n, "
            f"so |a_n - L| >= d and |b_n - L| >= d for all n >= {N}")

    def check():
        for m in (N, N + 1, N + 7):
            am, bm = h.const(dy.a(m)), h.const(dy.b(m))
            if which == "a":
                ok = h.ge(h.sub(am, L), d)
            else:
                ok = h.ge(h.sub(L, bm), d) and h.ge(h.sub(L, am), d)
            if not ok:
                return False
        return h.sign(d) > 0

    return Witness(WitnessKind.SEPARATED_TAIL, (L, d), cert, check=check,
                   details={"index": N, "side": which, "separation": d})
