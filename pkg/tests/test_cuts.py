import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ordfield.errors import StabilizedSequence, UnsupportedField
from ordfield.kernel import dyadic_ceil
from ordfield.fields import LaurentField, RationalField, RationalFunctionField, sample_element
from ordfield.probes import (Side, cut_finite, cut_halo, cut_laurent_finite, cut_sqrt2,
                             dyadic_approximants, local_constancy_witness, locally_constant_check,
                             refute_cutpoint, refute_lub, separation_witness)
from ordfield.results import WitnessKind

Q = RationalField()
L = LaurentField()
R = RationalFunctionField()


def test_sqrt2_refuter_examples():
    cut = cut_sqrt2(Q)
    w = refute_cutpoint(cut, F(3, 2))
    assert w.kind is WitnessKind.WRONG_SIDE_ELEMENT
    assert w.elements[1] == F(10, 7) and w.verify()
    w = refute_cutpoint(cut, F(7, 5))
    assert w.elements[1] == F(24, 17) and w.verify()


def test_sqrt2_refuter_clamps_to_bracket():
    cut = cut_sqrt2(Q)
    w = refute_cutpoint(cut, F(-100))
    assert 1 < w.elements[1] < 2 and w.verify()
    w = refute_cutpoint(cut, F(10 ** 6))
    assert 1 < w.elements[1] < 2 and w.verify()


def test_refute_lub():
    cut = cut_sqrt2(Q)
    w = refute_lub(cut, F(1))
    assert w.kind is WitnessKind.LARGER_MEMBER and w.elements[1] == F(4, 3)
    w = refute_lub(cut, F(3, 2))
    assert w.kind is WitnessKind.SMALLER_UPPER_BOUND and w.verify()


def test_halo_refuter_example():
    cut = cut_halo(L)
    c = L.const(F(3, 2)) + L.epsilon()
    w = refute_cutpoint(cut, c)
    assert w.elements[1].agrees_with(L.const(F(3, 2)) + 2 * L.epsilon())
    assert w.verify()


def test_halo_needs_infinitesimals():
    with pytest.raises(UnsupportedField):
        cut_halo(Q)
    with pytest.raises(UnsupportedField):
        cut_finite(Q)


def test_local_constancy_examples():
    assert local_constancy_witness(cut_sqrt2(Q), F(1)) == F(1, 3)
    d = local_constancy_witness(cut_halo(L), L.const(F(3, 2)))
    assert L.eq(d, L.epsilon())
    assert L.eq(local_constancy_witness(cut_laurent_finite(), L.const(10 ** 100)), L.one)


def test_finite_cut_refuter():
    cut = cut_finite(R)
    w = refute_cutpoint(cut, R.omega())
    assert R.eq(w.elements[1], R.omega() - 1) and w.verify()
    w = refute_cutpoint(cut, R.const(10 ** 9))
    assert w.details["side"] == "A" and w.verify()


def _candidates(h, center, n, seed):
    rng = random.Random(seed)
    out = []
    for i in range(n):
        x = sample_element(h, rng)
        if i % 2 and center is not None:
            # perturb the center by an infinitesimal or a small rational
            x = h.add(h.const(center), h.div(x, h.add(h.abs(x), h.const(rng.randint(1, 9)))) if i % 4 == 1
                      else h.mul(h.epsilon(), x))
        out.append(x)
    return out


def test_sqrt2_refuter_on_random_candidates():
    cut = cut_sqrt2(Q)
    rng = random.Random(1)
    for _ in range(100):
        c = F(rng.randint(-300, 300), rng.randint(1, 100))
        w = refute_cutpoint(cut, c)
        assert w.verify()
        assert 1 < w.elements[1] < 2


@pytest.mark.parametrize("h", [L, R], ids=["laurent", "ratfun"])
def test_halo_refuter_on_random_candidates(h):
    cut = cut_halo(h)
    for c in _candidates(h, F(3, 2), 100, 2):
        w = refute_cutpoint(cut, c)
        assert w.verify()
        assert cut.side_of(w.elements[1]) is cut.side_of(c)


@pytest.mark.parametrize("h", [L, R], ids=["laurent", "ratfun"])
def test_finite_refuter_on_random_candidates(h):
    cut = cut_finite(h)
    for c in _candidates(h, None, 100, 3):
        assert refute_cutpoint(cut, c).verify()


def test_bracket_tightens_every_time():
    cut = cut_sqrt2(Q)
    rng = random.Random(4)
    lo, hi = F(1), F(2)
    for _ in range(100):
        # a coarse dyadic inside [lo, hi] keeps the numbers small
        n = 0
        while dyadic_ceil(lo, n) > hi:
            n += 1
        c = rng.choice([lo, hi, dyadic_ceil(lo, n)])
        w = refute_cutpoint(cut, c, Q.interval(lo, hi))
        x = w.elements[1]
        assert w.verify() and lo < x < hi
        if w.details["side"] == "A":
            lo = x
        else:
            hi = x
    assert lo * lo < 2 < hi * hi
    assert hi - lo < F(1, 10 ** 3)


def test_local_constancy_on_random_points():
    rng = random.Random(6)
    for cut in (cut_sqrt2(Q), cut_halo(L), cut_finite(L)):
        h = cut.field
        for _ in range(30):
            x = sample_element(h, rng)
            d = local_constancy_witness(cut, x)
            assert locally_constant_check(cut, x, d)


def test_dyadic_examples():
    a, b = dyadic_approximants(cut_sqrt2(Q), 4)
    assert a == [1, 1, F(5, 4), F(11, 8), F(11, 8)]
    assert b == [2, F(3, 2), F(3, 2), F(3, 2), F(23, 16)]


def test_dyadic_invariants():
    cut = cut_sqrt2(Q)
    a, b = dyadic_approximants(cut, 64)
    for n in range(65):
        assert a[n] * a[n] < 2 < b[n] * b[n]
        assert b[n] - a[n] == F(1, 2 ** n)
        assert (a[n] * 2 ** n).denominator == 1
        if n:
            assert a[n - 1] <= a[n] and b[n] <= b[n - 1]


def test_dyadics_need_a_rational_bracket():
    with pytest.raises(StabilizedSequence):
        cut_finite(L).dyadics()


def test_halo_dyadics_are_eventually_constant():
    a, _ = dyadic_approximants(cut_halo(L), 6)
    assert a[-1] == F(3, 2)


def test_separation_examples():
    cut = cut_sqrt2(Q)
    w = separation_witness(cut, F(7, 5))
    assert w.details["index"] == 5 and w.verify()
    assert "1/200" in w.certificate
    w = separation_witness(cut, F(3, 2))
    assert w.details["index"] == 4 and w.verify()


@settings(max_examples=100, deadline=None)
@given(st.builds(F, st.integers(-10 ** 4, 10 ** 4), st.integers(1, 10 ** 3)))
def test_separation_round_trip(c):
    assert separation_witness(cut_sqrt2(Q), c).verify()


def test_side_enum():
    assert str(Side.A) == "A"


def test_refute_lub_halo():
    cut = cut_halo(L)
    w = refute_lub(cut, L.const(F(3, 2)))
    assert w.kind is WitnessKind.LARGER_MEMBER
    assert w.elements[1].agrees_with(L.const(F(3, 2)) + L.epsilon()) and w.verify()
