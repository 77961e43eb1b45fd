"""Run any of the eighteen completeness properties against a field.

Each failing property is shown by counter-witnesses against a set of
candidates (a fixed list plus seeded samples), since failure of an
existence claim cannot be found by enumeration.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import OrdFieldError, PrecisionExhausted
from ..fields import FieldHandle, LaurentField, RationalField, sample_element
from ..results import PROPERTY_SLUGS, ProbeResult, Status, Witness, WitnessKind
from .cuts import (cut_finite, cut_halo, cut_sqrt2, local_constancy_witness,
                   locally_constant_check, refute_cutpoint, refute_lub, separation_witness)
from .functions import (check_no_fixed_point, contraction_check, fixedpoint_function,
                        refute_bound, refute_gap_fixed_point, refute_max, step_function)
from .sequences import (archimedean_probe, cauchy_probe, monotone_refuter, nested_probe_rationals,
                        nested_refuter, ratio_test_refuter, ratio_test_refuter_rationals,
                        series_probes, shrinking_probe)


def main_gap(h: FieldHandle):
    """sqrt2 over Q; elsewhere the finite/infinite cut."""
    return cut_sqrt2(h) if h.archimedean else cut_finite(h)


def fixed_candidates(h: FieldHandle):
    if h.archimedean:
        return [Fraction(7, 5), Fraction(3, 2), Fraction(17, 12), Fraction(0), Fraction(-3), Fraction(10)]
    w, e, c = h.omega(), h.epsilon(), h.const
    return [c(0), c(5), c(Fraction(3, 2)), h.add(c(Fraction(3, 2)), e), w,
            h.div(w, c(2)), h.neg(w), e]


def candidates_for(h: FieldHandle, seed=0, extra: int = 3):
    rng = random.Random(f"candidates:{seed}:{h.name}")
    return fixed_candidates(h) + [sample_element(h, rng) for _ in range(extra)]


def _in_unit_range(h, xs, hi=3):
    return [x for x in xs if h.le(h.zero, x) and h.le(x, h.const(hi))]


def _collect(result: ProbeResult, h, candidates, make):
    for c in candidates:
        try:
            w = make(c)
        except PrecisionExhausted as exc:
            result.log(f"candidate {h.format(c)}: inconclusive ({exc})")
            continue
        if isinstance(w, list):
            result.witnesses.extend(w)
        else:
            result.witnesses.append(w)
    if not result.witnesses:
        result.status = Status.INCONCLUSIVE
    return result


def _members_note(result, cut):
    h = cut.field
    a, b = cut.members
    result.log(f"cut {cut.name}: {h.format(a)} in A, {h.format(b)} in B, neither side has "
               f"a cutpoint")


def _locally_constant(cut, x, extra=""):
    h = cut.field
    delta = local_constancy_witness(cut, x)
    return Witness(WitnessKind.LOCALLY_CONSTANT, (x, delta),
                   f"the ball of radius {h.format(delta)} around x stays in {cut.side_of(x)}"
                   + extra, check=lambda: locally_constant_check(cut, x, delta))


def probe_property(h: FieldHandle, n: int, candidates=None, seed=0, pairs: int = 40) -> ProbeResult:
    """ProbeResult for property ``n`` (1..18) in ``h``."""
    if n not in PROPERTY_SLUGS:
        raise ValueError(f"property must be in 1..18, got {n}")
    cands = list(candidates) if candidates is not None else candidates_for(h, seed)
    result = ProbeResult(n, h.label, Status.FAILS)
    laurent = isinstance(h, LaurentField)
    q = isinstance(h, RationalField)

    if n == 1:
        cut = main_gap(h)
        _members_note(result, cut)
        return _collect(result, h, cands, lambda c: refute_lub(cut, c))
    if n == 2:
        if candidates is None:
            return archimedean_probe(h)
        for r in (archimedean_probe(h, c) for c in cands):
            result.constructed.extend(r.constructed)
            result.witnesses.extend(r.witnesses)
            result.transcript.extend(r.transcript)
        result.status = Status.FAILS if result.witnesses else Status.HOLDS
        return result
    if n == 3:
        cut = main_gap(h)
        _members_note(result, cut)
        return _collect(result, h, cands, lambda c: refute_cutpoint(cut, c))
    if n in (4, 5, 8, 9):
        cut = main_gap(h)
        a, b = cut.members
        f = step_function(cut)
        _members_note(result, cut)
        result.log(f"f = -1 on A, 1 on B; f({h.format(a)}) = -1, f({h.format(b)}) = 1")
        if n == 4:
            result.log("A and B are disjoint, nonempty and open, so the field is disconnected")
            return _collect(result, h, cands, lambda c: _locally_constant(cut, c))
        if n == 5:
            def make(c):
                w = _locally_constant(cut, c)
                value = f(c)
                return Witness(WitnessKind.NONZERO_VALUE, (c, value),
                               f"f(x) = {h.format(value)} != 0, and f is constant near x: "
                               + w.certificate,
                               check=lambda: not h.eq(f(c), h.zero) and w.verify())
            return _collect(result, h, cands, make)
        slope = h.div(h.sub(f(b), f(a)), h.sub(b, a))
        if n == 8:
            note = (f"; so f'(x) = 0, while (f(b) - f(a))/(b - a) = {h.format(slope)} != 0")
        else:
            note = "; so f'(x) = 0 everywhere, yet f(a) = -1 != 1 = f(b)"
        return _collect(result, h, cands, lambda c: _locally_constant(cut, c, note))
    if n == 6:
        if not q:
            result.status = Status.NOT_PROBED
            result.log("no failure witness by the bump-sum route: it is bounded by w here")
            return result
        cut = cut_sqrt2(h)
        result.log("f = sum of trapezoid bumps f_n around [a_n, b_n]; continuous on [1, 2]")
        bounds = candidates if candidates is not None else [Fraction(3), Fraction(10), Fraction(25, 2)]
        return _collect(result, h, bounds, lambda c: refute_bound(cut, c))
    if n == 7:
        cut = cut_sqrt2(h) if q else cut_halo(h, Fraction(3, 2))
        result.log(f"f(x) = x on A, 0 on B over [0, 3], cut {cut.name}")
        pool = cands if candidates is not None else (
            [h.const(v) for v in (0, 1, Fraction(7, 5), Fraction(3, 2), 2, 3)]
            + ([] if q else [h.add(h.const(Fraction(3, 2)), h.epsilon())]))
        return _collect(result, h, _in_unit_range(h, pool), lambda c: refute_max(cut, c))
    if n == 10:
        if q:
            cut = cut_sqrt2(h)
            result.log("a_n ascends and is bounded by 2")
            return _collect(result, h, cands, lambda c: separation_witness(cut, c))
        result.log("1, 2, 3, ... ascends and is bounded by w")
        return _collect(result, h, cands, lambda c: monotone_refuter(h, c))
    if n == 11:
        return cauchy_probe(h, cands)
    if n == 12:
        cut = main_gap(h)
        a, b = cut.members
        f = fixedpoint_function(cut, a, b)
        result.log(f"f = {h.format(b)} on A and {h.format(a)} on B maps [a, b] into itself")
        return _collect(result, h, cands, lambda c: check_no_fixed_point(cut, f, [c]))
    if n == 13:
        if q:
            cut = cut_sqrt2(h)
            result.log("piecewise linear h with slopes <= 1/2 pushing x_k -> x_(k+1), y_k -> y_(k+1)")
            return _collect(result, h, cands, lambda c: refute_gap_fixed_point(cut, c))
        rng = random.Random(f"contraction:{seed}:{h.name}")
        pts = cands + [sample_element(h, rng) for _ in range(2 * pairs)]
        prs = list(zip(pts[::2], pts[1::2]))
        return contraction_check(h, prs, cands)
    if n in (14, 15):
        if laurent:
            return series_probes(h)[n]
        result.status = Status.NOT_PROBED
        result.log("no finite exact refuter is shipped for this field")
        return result
    if n == 16:
        if q:
            result.log("sum 1/n!: ratios 1/(n+1) tend to 0")
            return _collect(result, h, cands, ratio_test_refuter_rationals)
        result.log("1/2 + 1/4 + ...: ratios are 1/2")
        return _collect(result, h, cands, lambda c: ratio_test_refuter(h, c))
    if n == 17:
        return shrinking_probe(h, cands)
    if n == 18:
        if q:
            return nested_probe_rationals(h, cands)
        result.log("[n, w/n] are nested, closed and nonempty")
        return _collect(result, h, cands, lambda c: nested_refuter(h, c))
    raise AssertionError(n)


def safe_probe(h: FieldHandle, n: int, **kwargs) -> ProbeResult:
    """:func:`probe_property` that turns library errors into an Inconclusive cell."""
    try:
        return probe_property(h, n, **kwargs)
    except OrdFieldError as exc:
        r = ProbeResult(n, h.label, Status.INCONCLUSIVE)
        r.log(f"{type(exc).__name__}: {exc}")
        return r
