import threading
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ordfield.errors import (DivisionByZero, DuplicateExponent, HeuristicInconclusive,
                             NotSummable, PrecisionExhausted, StabilizationViolated)
from ordfield.laurent import (EXACT_ZERO, LaurentSeries, NoStabilization, SeriesSequence, Term,
                              ls_abs, ls_add, ls_cmp, ls_const, ls_epsilon, ls_from_coefficients,
                              ls_from_terms, ls_leading_term, ls_monomial, ls_mul, ls_norm,
                              ls_omega, ls_partial_sums, ls_principal_part, ls_recip, ls_seq_limit,
                              ls_sign, ls_sub, ls_sum_series, ls_zero)
from ordfield.kernel import Ordering, Sign

e = ls_epsilon()
one = ls_const(1)
x = sympy.Symbol("x")


def test_from_terms_and_format():
    a = ls_from_terms([(-1, 2), (0, F(1, 3)), (2, F(-5, 2))])
    assert a.format() == "2*e^-1 + 1/3 + -5/2*e^2 + O(e^32)"
    assert ls_zero().format() == "0"
    assert ls_monomial(40).format(8) == "O(e^8)"


def test_duplicate_exponent():
    with pytest.raises(DuplicateExponent):
        ls_from_terms([(1, 1), (1, 2)])


def test_term_needs_nonzero_coefficient():
    with pytest.raises(ValueError):
        Term(3, 0)


def test_recip_geometric():
    r = ls_recip(one - e)
    assert r.coefficients(0, 64) == [1] * 64
    assert (ls_mul(one - e, r)).coefficients(0, 65) == [1] + [0] * 64


def test_recip_leading_exponent():
    a = ls_from_coefficients({2: 3, 3: 1})
    r = ls_recip(a)
    ser = sympy.series(1 / (3 * x ** 2 + x ** 3), x, 0, 10).removeO()
    for k in range(-2, 10):
        assert r.coeff(k) == F(str(ser.coeff(x, k)))
    assert ls_leading_term(r) == Term(-2, F(1, 3))


def test_recip_of_zero():
    with pytest.raises(DivisionByZero):
        ls_recip(ls_zero())


def test_recip_of_lazy_zero_is_precision_exhausted():
    lazy_zero = ls_sub(one - e, ls_recip(ls_recip(one - e)))
    with pytest.raises(PrecisionExhausted):
        ls_recip(lazy_zero, horizon=40)


def test_quotient_examples():
    a = (one + e) / (one - e)
    assert a.coefficients(0, 6) == [1, 2, 2, 2, 2, 2]
    b = one / (ls_const(2) + e)
    assert b.coefficients(0, 3) == [F(1, 2), F(-1, 4), F(1, 8)]


def test_sign_and_cmp():
    assert ls_sign(ls_omega() - 10 ** 100) is Sign.POSITIVE
    assert ls_sign(F(1, 10 ** 9) - e) is Sign.POSITIVE
    assert ls_cmp(e * e, e) is Ordering.LESS
    assert ls_sign(ls_zero()) is Sign.ZERO


def test_leading_term_zero_tag():
    assert ls_leading_term(ls_zero()) is EXACT_ZERO


def test_norm_and_principal_part():
    assert ls_norm(e * e) == F(1, 4)
    assert ls_norm(ls_omega()) == 2
    assert ls_norm(ls_zero()) == 0
    a = ls_from_coefficients({-2: 1, -1: -3, 0: 5, 4: 1})
    assert ls_principal_part(a) == [Term(-2, 1), Term(-1, -3)]


def test_abs():
    assert ls_abs(-e).agrees_with(e)
    assert ls_abs(ls_const(-3)).agrees_with(ls_const(3))


def test_limit_of_powers_is_zero():
    s = SeriesSequence(lambda n: ls_monomial(n), lambda k: k + 1)
    assert ls_seq_limit(s).agrees_with(ls_zero(), 32)


def test_limit_of_halves_does_not_stabilize():
    s = SeriesSequence(lambda n: ls_const(F(1, 2 ** n)))
    w = ls_seq_limit(s)
    assert isinstance(w, NoStabilization)
    assert w.exponent == 0
    assert w.coefficient_i != w.coefficient_j


def test_limit_without_bound_is_inconclusive():
    s = SeriesSequence(lambda n: ls_monomial(n))
    with pytest.raises(HeuristicInconclusive):
        ls_seq_limit(s)


def test_limit_bound_is_checked():
    s = SeriesSequence(lambda n: ls_monomial(n), lambda k: 0)
    with pytest.raises(StabilizationViolated):
        ls_seq_limit(s)


def test_constant_from():
    s = SeriesSequence(lambda n: ls_const(min(n, 3)), constant_from=3)
    assert ls_seq_limit(s).agrees_with(ls_const(3))


def test_alternating_sum():
    terms = SeriesSequence(lambda i: ls_monomial(i + 1, (-1) ** (i + 1)), lambda k: max(k, 0))
    total = ls_sum_series(terms)
    assert total.agrees_with(-e * ls_recip(one + e), 32)
    # closed form: (1 + e) S = -e
    assert ls_mul(one + e, total).agrees_with(-e, 32)


def test_sum_bound_is_checked():
    terms = SeriesSequence(lambda i: ls_const(1), lambda k: 0)
    with pytest.raises(NotSummable):
        ls_sum_series(terms)
    with pytest.raises(HeuristicInconclusive):
        ls_sum_series(SeriesSequence(lambda i: ls_monomial(i)))


def test_partial_sums():
    s = ls_partial_sums(SeriesSequence(lambda i: ls_monomial(i)))
    assert s(3).coefficients(0, 5) == [1, 1, 1, 1, 0]


def test_lazy_rule_called_once_per_exponent():
    calls = []

    def rule(k):
        calls.append(k)
        return k

    a = LaurentSeries.lazy(0, rule)
    a.coeff(5)
    a.coeff(3)
    a.coeff(5)
    assert calls == [0, 1, 2, 3, 4, 5]


def test_concurrent_reads_agree():
    a = ls_recip(one - e - e * e)
    out = []

    def work():
        out.append(a.coefficients(0, 60))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == out[0] for o in out)
    assert out[0][:6] == [1, 1, 2, 3, 5, 8]


finite = st.dictionaries(st.integers(-4, 8), st.builds(F, st.integers(-9, 9), st.integers(1, 9)),
                         max_size=4).map(ls_from_coefficients)


@settings(max_examples=80, deadline=None)
@given(finite, finite, finite)
def test_ring_laws(a, b, c):
    assert ls_mul(ls_mul(a, b), c).agrees_with(ls_mul(a, ls_mul(b, c)))
    assert ls_mul(a, ls_add(b, c)).agrees_with(ls_add(ls_mul(a, b), ls_mul(a, c)))
    assert ls_add(a, b).agrees_with(ls_add(b, a))


@settings(max_examples=80, deadline=None)
@given(finite)
def test_inverse(a):
    if a.zero_tag:
        return
    assert ls_mul(a, ls_recip(a)).agrees_with(one, 32)


@settings(max_examples=80, deadline=None)
@given(finite, finite)
def test_norm_is_ultrametric(a, b):
    assert ls_norm(ls_add(a, b)) <= max(ls_norm(a), ls_norm(b))
    assert ls_norm(ls_mul(a, b)) == ls_norm(a) * ls_norm(b)
