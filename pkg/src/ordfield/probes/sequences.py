"""Sequence, series and interval probes: Archimedean, Cauchy, ratio test, nesting."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import NotNested, PrecisionExhausted
from ..fields import FieldHandle, LaurentField, RationalField, RationalFunctionField
from ..laurent import (LaurentSeries, SeriesSequence, ls_const, ls_epsilon,
                       ls_from_coefficients, ls_monomial, ls_mul, ls_partial_sums,
                       ls_recip, ls_seq_limit, ls_sum_series)
from ..ratfun import AT_INFINITY, Classification, rf_magnitude_order
from ..results import ProbeResult, Status, Witness, WitnessKind
from .cuts import cut_sqrt2, separation_witness


def magnitude_certificate(h: FieldHandle, x) -> str:
    """Why ``x`` is infinite or infinitesimal, in terms of degrees or exponents."""
    c = h.classify(x)
    if isinstance(h, RationalFunctionField):
        k = rf_magnitude_order(x)
        if h.tag is AT_INFINITY:
            return f"deg(num)-deg(den) = {x.num.degree}-{x.den.degree} = {k}, sign {h.sign(x).name.lower()}"
        return f"val(den)-val(num) = {x.den.valuation}-{x.num.valuation} = {k}, sign {h.sign(x).name.lower()}"
    if isinstance(h, LaurentField):
        k = h.leading_exponent(x)
        return f"leading exponent {k} with coefficient {x.coeff(k)}"
    return c.name.lower()


# -- (2) Archimedean property -------------------------------------------------------


def archimedean_probe(h: FieldHandle, x=None, search_bound: int = 10 ** 6) -> ProbeResult:
    """Find ``n > x`` or certify that ``x`` exceeds every natural number.

    In a non-Archimedean field the verdict is a failure whatever ``x`` is:
    when ``x`` is not positive infinite the probe falls back to ``w``.
    """
    result = ProbeResult(2, h.label, Status.HOLDS)
    if x is None:
        x = h.const(Fraction(7, 2)) if h.archimedean else h.omega()
    n = h.nat_bound(x)
    if n is not None:
        result.constructed.append(n)
        result.log(f"n = {n} > {h.format(x)}")
        if h.archimedean:
            return result
        result.log("the property still fails in this field; testing w")
        x = h.omega()
    cert = magnitude_certificate(h, x)
    spot = sorted({1, 10 ** 3, 10 ** 6, search_bound})

    def check(x=x):
        return (h.classify(x) is Classification.POSITIVE_INFINITE
                and all(h.gt(x, h.const(k)) for k in spot))

    result.status = Status.FAILS
    result.witnesses.append(Witness(
        WitnessKind.EXCEEDS_NATURALS, (x,),
        f"{h.format(x)} is positive infinite: {cert}; so it exceeds every n, "
        f"checked exactly at n in {spot}", check=check))
    return result


def infinitesimal_certificate(h: FieldHandle, x, spot=(1, 10 ** 3, 10 ** 6)):
    """``0 < x < 1/n`` for every listed ``n``, plus the magnitude certificate."""
    ok = (h.classify(x) is Classification.POSITIVE_INFINITESIMAL
          and all(h.lt(x, h.const(Fraction(1, k))) for k in spot))
    return ok, magnitude_certificate(h, x)


# -- (10) bounded monotone sequences --------------------------------------------------


def monotone_refuter(h: FieldHandle, candidate) -> Witness:
    """Refute ``candidate`` as the limit of ``1, 2, 3, ...``, which is bounded by ``w``.

    Consecutive terms differ by 1, so at most one term is within 1/2 of any
    point.  Here the index ``n`` is the least natural above ``candidate + 1``:
    every term from ``n`` on is more than 1 above the candidate.
    """
    if h.archimedean:
        raise ValueError("1, 2, 3, ... is unbounded here")
    L = candidate
    n = h.nat_bound(h.add(L, h.one))
    delta = h.const(Fraction(1, 2))
    if n is None:
        n = 1
        cert = (f"candidate is positive infinite ({magnitude_certificate(h, L)}), "
                f"so candidate - n is positive infinite for every n")

        def check():
            return h.classify(L) is Classification.POSITIVE_INFINITE and h.gt(h.sub(L, h.const(10 ** 6)), delta)
    else:
        cert = (f"n = {n} > candidate + 1, and the terms increase, so m - candidate > 1 >= 1/2 "
                f"for every term m >= {n}; the sequence is bounded by w")

        def check():
            return all(h.gt(h.sub(h.const(m), L), h.one) for m in (n, n + 1, n + 10))
    return Witness(WitnessKind.SEPARATED_TAIL, (L, delta), cert, check=check,
                   details={"index": n})


# -- (11) Cauchy sequences ---------------------------------------------------------------


def lacunary_coefficient(j: int) -> int:
    return 1 if j >= 0 and math.isqrt(j) ** 2 == j else 0


def lacunary_partial(h: FieldHandle, N: int):
    """``s_N = sum_{k < N} e^(k^2)``: Cauchy, but its limit is not a rational function."""
    e = h.epsilon()
    total = h.zero
    for k in range(N):
        total = h.add(total, _power(h, e, k * k))
    return total


def _power(h, x, n):
    result, base = h.one, x
    while n:
        if n & 1:
            result = h.mul(result, base)
        base = h.mul(base, base)
        n >>= 1
    return result


def lacunary_refuter(h: RationalFunctionField, candidate) -> Witness:
    """Refute ``candidate`` as the limit of the lacunary partial sums.

    The expansion of a rational function obeys a linear recurrence of order
    at most its degree, while the lacunary series has ever longer zero
    gaps, so the two expansions first differ at some exponent ``j``.  For
    ``N^2 > j``, ``s_N - candidate`` has leading exponent ``j`` and hence
    exceeds ``delta = e^(j+1)`` in absolute value.
    """
    L = candidate
    series = h.to_laurent(L)
    degree = max(L.num.degree if L.num else 0, L.den.degree)
    limit = (2 * degree + 4) ** 2 + abs(series.lower_bound)
    j = None
    for k in range(min(series.lower_bound, 0), limit + 1):
        if series.coeff(k) != lacunary_coefficient(k):
            j = k
            break
    if j is None:
        raise PrecisionExhausted(f"expansions agree up to e^{limit}", limit)
    N = max(math.isqrt(max(j, 0)) + 1, 1)
    delta = _power(h, h.epsilon(), j + 1) if j + 1 >= 0 else h.div(h.one, _power(h, h.epsilon(), -(j + 1)))

    def check():
        return all(h.gt(h.abs(h.sub(lacunary_partial(h, m), L)), delta) for m in (N, N + 1))

    return Witness(WitnessKind.SEPARATED_TAIL, (L, delta),
                   f"the expansions of the candidate and of sum e^(k^2) first differ at e^{j} "
                   f"({series.coeff(j)} vs {lacunary_coefficient(j)}); for N >= {N}, s_N agrees "
                   f"with the lacunary series through e^{N * N - 1}, so |s_N - L| > e^{j + 1}",
                   check=check, details={"exponent": j, "index": N})


def laurent_cauchy_battery():
    """Cauchy sequences in Q((e)) with stabilization bounds and known limits."""
    e = ls_epsilon()
    geometric_terms = SeriesSequence(lambda n: ls_monomial(n), lambda k: k + 1, name="e^n")
    lacunary_terms = SeriesSequence(lambda n: ls_monomial(n * n), lambda k: math.isqrt(max(k, 0)) + 1,
                                    name="e^(n^2)")
    x = ls_from_coefficients({-1: 3, 0: 1, 2: Fraction(-1, 2)})
    return [
        ("partial sums of sum e^n", ls_partial_sums(geometric_terms),
         ls_recip(ls_const(1) - e)),
        ("e^n", SeriesSequence(lambda n: ls_monomial(n), lambda k: k + 1, name="e^n"),
         ls_const(0)),
        ("partial sums of sum e^(n^2)", ls_partial_sums(lacunary_terms),
         LaurentSeries.lazy(0, lacunary_coefficient)),
        ("3/e + 1 - e^2/2 + e^n/(1 - e)",
         SeriesSequence(lambda n: x + ls_mul(ls_monomial(n), ls_recip(ls_const(1) - e)),
                        lambda k: k + 1),
         x),
    ]


def cauchy_probe(h: FieldHandle, candidates=(), order: int = None) -> ProbeResult:
    result = ProbeResult(11, h.label, Status.FAILS)
    if isinstance(h, LaurentField):
        order = order or h.order
        result.status = Status.HOLDS
        for name, seq, expected in laurent_cauchy_battery():
            limit = ls_seq_limit(seq, order)
            ok = limit.agrees_with(expected, order)
            result.constructed.append(limit.format(min(order, 12)))
            result.log(f"{name} -> {limit.format(min(order, 12))}; "
                       f"matches the closed form through e^{order - 1}: {ok}")
            if not ok:
                result.status = Status.INCONCLUSIVE
        return result
    if isinstance(h, RationalField):
        cut = cut_sqrt2(h)
        result.log("a_n = max(A ∩ 2^-n Z) for the sqrt2 cut: |a_m - a_n| <= 2^-min(m,n), so Cauchy")
        for c in candidates:
            result.witnesses.append(separation_witness(cut, c))
        return _finish(result)
    result.log("s_N = sum_{k<N} e^(k^2): |s_M - s_N| <= 2e^(N^2) for M > N, so Cauchy")
    for c in candidates:
        try:
            result.witnesses.append(lacunary_refuter(h, c))
        except PrecisionExhausted as exc:
            result.log(f"candidate {h.format(c)}: {exc}")
    return _finish(result)


def _finish(result):
    if not result.witnesses:
        result.status = Status.INCONCLUSIVE
    return result


# -- (14), (15) series ------------------------------------------------------------------


def laurent_series_battery():
    """(name, terms, closed form or None); term ``i`` is the ``(i+1)``-th summand."""
    one, e = ls_const(1), ls_epsilon()
    alt = SeriesSequence(lambda i: ls_monomial(i + 1, (-1) ** (i + 1)), lambda k: max(k, 0),
                         name="(-1)^n e^n")
    geo = SeriesSequence(lambda i: ls_monomial(i + 1), lambda k: max(k, 0), name="e^n")
    zero = SeriesSequence(lambda i: ls_const(0), lambda k: 0, name="0")
    log = SeriesSequence(lambda i: ls_monomial(i + 1, Fraction((-1) ** (i + 1), i + 1)),
                         lambda k: max(k, 0), name="(-1)^n e^n/n")
    return [
        ("sum_{n>=1} (-1)^n e^n", alt, -e * ls_recip(one + e)),
        ("sum_{n>=1} e^n", geo, e * ls_recip(one - e)),
        ("zero series", zero, ls_const(0)),
        ("sum_{n>=1} (-1)^n e^n / n", log, None),
    ]


def _abs_terms(h, terms):
    return SeriesSequence(lambda i: h.abs(terms(i)), terms.stabilization_bound,
                          name=f"|{terms.name}|")


def series_probes(h: FieldHandle, order: int = None) -> dict:
    """Results for (14) and (15): constructive sums on the battery."""
    if not isinstance(h, LaurentField):
        raise ValueError("series probes run in Q((e))")
    order = order or h.order
    r14 = ProbeResult(14, h.label, Status.HOLDS)
    r15 = ProbeResult(15, h.label, Status.HOLDS)
    for name, terms, closed in laurent_series_battery():
        total = ls_sum_series(terms, order)
        shown = total.format(min(order, 10))
        r14.constructed.append(shown)
        line = f"{name} = {shown}"
        if closed is not None:
            ok = total.agrees_with(closed, order)
            line += f"; equals the closed form through e^{order - 1}: {ok}"
            if not ok:
                r14.status = Status.INCONCLUSIVE
        r14.log(line)
        abs_total = ls_sum_series(_abs_terms(h, terms), order)
        r15.constructed.append(shown)
        r15.log(f"sum |a_n| for {name} = {abs_total.format(min(order, 10))}; "
                f"sum a_n = {shown}")
    return {14: r14, 15: r15}


# -- (16) ratio test -----------------------------------------------------------------------


def half_power_partial(h: FieldHandle, n: int):
    """``s_n = 1/2 + ... + 1/2^n = 1 - 2^-n``."""
    return h.const(1 - Fraction(1, 2 ** n))


def partial_sums_separated(h: FieldHandle, n_max: int = 32) -> bool:
    """Every two partial sums of sum 2^-n with indices <= n_max differ by more than e."""
    e = h.epsilon()
    sums = [half_power_partial(h, n) for n in range(1, n_max + 1)]
    return all(h.gt(h.abs(h.sub(sums[i], sums[j])), e)
               for i in range(len(sums)) for j in range(i + 1, len(sums)))


def ratio_test_refuter(h: FieldHandle, candidate) -> Witness:
    """Refute ``candidate`` as the sum of ``1/2 + 1/4 + ...`` in a non-Archimedean field.

    The ratios are exactly 1/2, but consecutive partial sums differ by the
    rational ``2^-(n+1)``, which exceeds ``e``.  So for every ``N`` one of
    ``s_N``, ``s_{N+1}`` is at least ``e/2`` from the candidate.
    """
    if h.archimedean:
        raise ValueError("use ratio_test_refuter_rationals over Q")
    c = candidate
    e = h.epsilon()
    delta = h.div(e, h.const(2))
    picks = []
    for N in range(1, 17):
        n = N if h.ge(h.abs(h.sub(c, half_power_partial(h, N))), delta) else N + 1
        picks.append((N, n))

    def check():
        if not partial_sums_separated(h, 17):
            return False
        return all(h.ge(h.abs(h.sub(c, half_power_partial(h, n))), delta) for _, n in picks)

    return Witness(WitnessKind.SEPARATED_TAIL, (c, delta),
                   f"|s_(n+1) - s_n| = 2^-(n+1) > e for all n, so for each N one of s_N, s_(N+1) "
                   f"is at least e/2 from the candidate; e.g. indices {[n for _, n in picks[:6]]}",
                   check=check, details={"indices": [n for _, n in picks]})


def exp_partial(n: int) -> Fraction:
    """``sum_{k=0..n} 1/k!``."""
    total, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        if k:
            term /= k
        total += term
    return total


def ratio_test_refuter_rationals(candidate) -> Witness:
    """Refute ``p/q`` as the sum of ``sum 1/n!`` (ratios ``1/(n+1)`` tend to 0).

    Write the candidate with ``q >= 2``.  ``I = q!(p/q - s_q)`` is an
    integer, while ``q!(s_n - s_q)`` lies in ``[1/(q+1), 1/q)``, strictly
    inside (0, 1), for every ``n > q``.  An integer is at least
    ``1/(q+1)`` away from that range, so ``|s_n - p/q| >= 1/(q+1)!`` for
    all ``n > q``.
    """
    c = Fraction(candidate)
    p, q = c.numerator, c.denominator
    if q == 1:
        p, q = 2 * p, 2
    fq = math.factorial(q)
    I = fq * (Fraction(p, q) - exp_partial(q))
    values = [fq * (exp_partial(n) - exp_partial(q)) for n in range(q + 1, q + 6)]
    delta = Fraction(1, math.factorial(q + 1))

    def check():
        if I.denominator != 1:
            return False
        if not all(Fraction(1, q + 1) <= v < Fraction(1, q) for v in values):
            return False
        return all(abs(exp_partial(n) - c) >= delta for n in range(q + 1, q + 6))

    return Witness(WitnessKind.SEPARATED_TAIL, (c, delta),
                   f"with q = {q}: q!(p/q - s_q) = {I} is an integer, but q!(s_n - s_q) lies in "
                   f"[1/{q + 1}, 1/{q}) inside (0, 1) for all n > q (first value {values[0]}); "
                   f"so |s_n - candidate| >= 1/{q + 1}! for all n > {q}",
                   check=check, details={"q": q, "integer": I, "values": values})


# -- (17) shrinking intervals -------------------------------------------------------------


def _le(h, a, b):
    try:
        return h.le(a, b)
    except PrecisionExhausted:
        # a - b has no nonzero coefficient within the horizon
        return True


def shrinking_intersect(h: FieldHandle, lower: SeriesSequence, upper: SeriesSequence,
                        scan: int = 12, order: int = None):
    """Common point of nested closed intervals ``[lower(n), upper(n)]`` in Q((e)).

    The point is the limit of the left endpoints; nesting and membership
    are checked for the first ``scan`` intervals.
    """
    if not isinstance(h, LaurentField):
        raise ValueError("shrinking_intersect runs in Q((e))")
    order = order or h.order
    for n in range(scan):
        lo, hi = lower(n), upper(n)
        if not _le(h, lo, hi):
            raise NotNested(f"interval {n} is empty")
        if n and not (_le(h, lower(n - 1), lo) and _le(h, hi, upper(n - 1))):
            raise NotNested(f"interval {n} is not inside interval {n - 1}")
    point = ls_seq_limit(lower, order)
    for n in range(scan):
        if not (_le(h, lower(n), point) and _le(h, point, upper(n))):
            raise NotNested(f"limit escapes interval {n}")
    return point


def laurent_interval_battery():
    one, e = ls_const(1), ls_epsilon()
    x = one + ls_monomial(1, 2)
    y = ls_recip(one - e)
    return [
        ("[x - e^n, x + e^n], x = 1 + 2e",
         SeriesSequence(lambda n: x - ls_monomial(n), lambda k: k + 1),
         SeriesSequence(lambda n: x + ls_monomial(n), lambda k: k + 1), x),
        ("[0, 0]", SeriesSequence(lambda n: ls_const(0), constant_from=0),
         SeriesSequence(lambda n: ls_const(0), constant_from=0), ls_const(0)),
        ("[1/(1-e) - e^n, 1/(1-e) + e^(n+1)]",
         SeriesSequence(lambda n: y - ls_monomial(n), lambda k: k + 1),
         SeriesSequence(lambda n: y + ls_monomial(n + 1), lambda k: k + 1), y),
    ]


def shrinking_probe(h: FieldHandle, candidates=()) -> ProbeResult:
    result = ProbeResult(17, h.label, Status.HOLDS)
    if isinstance(h, LaurentField):
        for name, lower, upper, expected in laurent_interval_battery():
            point = shrinking_intersect(h, lower, upper)
            ok = point.agrees_with(expected, h.order)
            result.constructed.append(point.format(10))
            result.log(f"{name}: common point {point.format(10)}; expected: {ok}")
            if not ok:
                result.status = Status.INCONCLUSIVE
        return result
    if isinstance(h, RationalField):
        result.status = Status.FAILS
        result.log("[a_n, b_n] from the sqrt2 dyadics: nested, lengths 2^-n")
        for c in candidates:
            result.witnesses.append(shrinking_refuter_rationals(c, h))
        return _finish(result)
    result.status = Status.NOT_PROBED
    return result


def shrinking_refuter_rationals(candidate, h: FieldHandle = None) -> Witness:
    """``candidate`` misses some dyadic interval ``[a_N, b_N]`` around sqrt 2."""
    h = h or RationalField()
    cut = cut_sqrt2(h)
    return _escape_from_separation(h, cut, candidate)


def _escape_from_separation(h, cut, candidate):
    sep = separation_witness(cut, candidate)
    N = sep.details["index"]
    a, b = cut.dyadics().interval(N)

    def check():
        return sep.verify() and (h.lt(candidate, h.const(a)) or h.gt(candidate, h.const(b)))

    return Witness(WitnessKind.ESCAPED_INTERVAL, (candidate, h.const(a), h.const(b)),
                   f"candidate lies outside [a_{N}, b_{N}] = [{a}, {b}]; " + sep.certificate,
                   check=check, details={"index": N})


# -- (18) nested intervals ------------------------------------------------------------------


def nested_refuter(h: FieldHandle, candidate) -> Witness:
    """An index ``n`` with ``candidate`` outside ``[n, w/n]``.

    Finite (or negative) candidates fall below ``n``; a positive infinite
    candidate ``c`` exceeds ``w/n`` once ``n c > w``, i.e. for the least
    natural ``n > w/c``.
    """
    if h.archimedean:
        raise ValueError("[n, w/n] needs an infinite w")
    c = candidate
    w = h.omega()
    if h.classify(c) is Classification.POSITIVE_INFINITE:
        n = h.nat_bound(h.div(w, c))
        why = f"{n}*candidate > w, so candidate > w/{n}"
    else:
        n = h.nat_bound(c)
        why = f"candidate < {n}"
    N = h.const(n)
    upper = h.div(w, N)

    def check():
        return h.le(N, upper) and (h.lt(c, N) or h.gt(c, upper))

    return Witness(WitnessKind.ESCAPED_INTERVAL, (c, N, upper),
                   f"{why}: candidate is not in [{n}, w/{n}]", check=check,
                   details={"n": n})


def nested_probe_rationals(h: FieldHandle, candidates) -> ProbeResult:
    result = ProbeResult(18, h.label, Status.FAILS)
    cut = cut_sqrt2(h)
    result.log("closed intervals [a_n, b_n] from the sqrt2 dyadics are nested")
    for c in candidates:
        result.witnesses.append(_escape_from_separation(h, cut, c))
    return _finish(result)


# -- nested decimal intervals ------------------------------------------------------------------


def decimal_interval_probe(h: FieldHandle, K: int = 50, candidates=()) -> ProbeResult:
    """Intervals ``[1 - 10^-k, 1]``: does their intersection have a single point?

    In a field with infinitesimals both 1 and 1 - e lie in every interval.
    Over Q only 1 does, and any other candidate drops out at the first
    ``k`` with ``10^-k < |1 - c|``.
    """
    result = ProbeResult(None, h.label, Status.HOLDS, slug="nested-decimal-interval")
    one = h.one
    pts = [one] if h.archimedean else [one, h.sub(one, h.epsilon())]

    def inside(x, k):
        return h.le(h.const(1 - Fraction(1, 10 ** k)), x) and h.le(x, one)

    for x in pts:
        ok = all(inside(x, k) for k in range(K + 1))
        result.log(f"{h.format(x)} lies in every [1 - 10^-k, 1], k <= {K}: {ok}")
        if not ok:
            result.status = Status.INCONCLUSIVE
    if not h.archimedean:
        a, b = pts

        def check():
            return not h.eq(a, b) and all(inside(a, k) and inside(b, k) for k in range(K + 1))

        result.status = Status.FAILS
        result.witnesses.append(Witness(
            WitnessKind.DOUBLE_POINT, (a, b),
            f"1 and 1 - e are distinct and 1 - 10^-k <= 1 - e <= 1 for k <= {K}, "
            f"since 10^-k - e is positive", check=check))
    else:
        result.constructed.append(one)
    for c in candidates:
        if h.eq(c, one):
            continue
        k = next((k for k in range(K + 1) if not inside(c, k)), None)
        if k is None:
            result.log(f"{h.format(c)} lies in every interval up to k = {K}")
        else:
            result.log(f"{h.format(c)} leaves the intervals at k = {k}")
    return result
