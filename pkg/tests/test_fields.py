import random
from fractions import Fraction as F

import pytest

from ordfield.errors import UnsupportedField
from ordfield.fields import (Interval, LaurentField, RationalField, RationalFunctionField,
                             axiom_suite, default_fields, embed_rational, embed_ratfun_in_laurent,
                             get_field, sample_element)
from ordfield.kernel import Ordering
from ordfield.laurent import ls_cmp
from ordfield.ratfun import AT_INFINITY, NEAR_ZERO, Classification, rf_cmp
from ordfield.results import Status

ALL = ["q", "ratfun", "ratfun-eps", "laurent"]


@pytest.mark.parametrize("name", ALL)
def test_axiom_suite_holds(name):
    r = axiom_suite(get_field(name), trials=200)
    assert r.status is Status.HOLDS
    assert not r.witnesses


class SwappedField(RationalField):
    name = "broken"

    def mul(self, a, b):
        return a + b


def test_axiom_suite_catches_broken_field():
    r = axiom_suite(SwappedField(), trials=50)
    assert r.status is Status.FAILS
    assert r.witnesses and all(w.verify() for w in r.witnesses)


def test_axiom_suite_rejects_zero_trials():
    with pytest.raises(ValueError):
        axiom_suite(RationalField(), trials=0)


def test_get_field_names():
    assert [h.name for h in default_fields()] == ["q", "ratfun", "laurent"]
    assert get_field("Q(w)").label == "Q(w)"
    assert get_field("ratfun-eps").tag is NEAR_ZERO
    with pytest.raises(ValueError):
        get_field("reals")


def test_env_precision(monkeypatch):
    monkeypatch.setenv("ORDFIELD_ORDER", "12")
    monkeypatch.setenv("ORDFIELD_HORIZON", "40")
    h = LaurentField()
    assert (h.order, h.horizon) == (12, 40)
    assert LaurentField(order=5).order == 5


def test_rationals_have_no_units():
    h = RationalField()
    with pytest.raises(UnsupportedField):
        h.omega()
    with pytest.raises(UnsupportedField):
        h.epsilon()
    assert h.archimedean


@pytest.mark.parametrize("name", ["ratfun", "ratfun-eps", "laurent"])
def test_units_are_infinite_and_infinitesimal(name):
    h = get_field(name)
    w, e = h.omega(), h.epsilon()
    assert h.classify(w) is Classification.POSITIVE_INFINITE
    assert h.classify(e) is Classification.POSITIVE_INFINITESIMAL
    assert h.eq(h.mul(w, e), h.one)
    assert h.nat_bound(w) is None
    assert h.nat_bound(h.const(F(7, 2))) == 4


def test_interval_contains():
    h = LaurentField()
    iv = h.interval(h.const(1), h.omega())
    assert iv.contains(h, h.const(10 ** 9))
    assert not iv.contains(h, h.sub(h.one, h.epsilon()))
    assert isinstance(iv, Interval)


def test_max_min_abs():
    h = RationalFunctionField(AT_INFINITY)
    w = h.omega()
    assert h.eq(h.max(w, h.const(10 ** 6)), w)
    assert h.eq(h.min(h.neg(w), h.const(-5)), h.neg(w))
    assert h.eq(h.abs(h.sub(h.one, w)), h.sub(w, h.one))


def test_embed_rational_is_order_preserving():
    rng = random.Random(3)
    for name in ALL:
        h = get_field(name)
        for _ in range(50):
            p, q = (F(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(2))
            assert int(h.cmp(embed_rational(h, p), embed_rational(h, q))) == (p > q) - (p < q)


@pytest.mark.parametrize("tag", [AT_INFINITY, NEAR_ZERO])
def test_embed_ratfun_in_laurent_is_order_embedding(tag):
    h = RationalFunctionField(tag)
    rng = random.Random(17)
    for _ in range(60):
        a, b = sample_element(h, rng), sample_element(h, rng)
        assert ls_cmp(embed_ratfun_in_laurent(a), embed_ratfun_in_laurent(b)) == rf_cmp(a, b)
        s = embed_ratfun_in_laurent(a + b)
        assert s.agrees_with(embed_ratfun_in_laurent(a) + embed_ratfun_in_laurent(b))


def test_composite_embedding_of_rationals():
    # Q -> Q(w) -> Q((e)) agrees with Q -> Q((e))
    hr, hl = RationalFunctionField(AT_INFINITY), LaurentField()
    for q in (F(0), F(-3, 7), F(22, 7)):
        assert embed_ratfun_in_laurent(embed_rational(hr, q)).agrees_with(embed_rational(hl, q))


def test_omega_maps_to_inverse_epsilon():
    h = RationalFunctionField(AT_INFINITY)
    lw = embed_ratfun_in_laurent(h.omega())
    assert lw.agrees_with(LaurentField().omega())


@pytest.mark.parametrize("name", ALL)
def test_sampling_is_deterministic(name):
    h = get_field(name)
    a = [sample_element(h, random.Random(5)) for _ in range(3)]
    b = [sample_element(h, random.Random(5)) for _ in range(3)]
    assert all(h.eq(x, y) for x, y in zip(a, b))
    assert all(h.is_element(x) for x in a)


@pytest.mark.parametrize("name", ["ratfun", "laurent"])
def test_sampling_reaches_every_stratum(name):
    h = get_field(name)
    rng = random.Random(0)
    seen = {h.classify(sample_element(h, rng)) for _ in range(400)}
    assert {Classification.POSITIVE_INFINITE, Classification.NEGATIVE_INFINITE,
            Classification.POSITIVE_INFINITESIMAL,
            Classification.FINITE_NON_INFINITESIMAL} <= seen


@pytest.mark.parametrize("name", ALL)
def test_abs_properties(name):
    h = get_field(name)
    rng = random.Random(21)
    for _ in range(100):
        x, y = sample_element(h, rng), sample_element(h, rng)
        assert h.sign(h.abs(x)) >= 0
        assert h.le(h.abs(h.add(x, y)), h.add(h.abs(x), h.abs(y)))
        assert h.eq(h.abs(h.mul(x, y)), h.mul(h.abs(x), h.abs(y)))


def test_rational_cmp_is_ordering():
    h = RationalField()
    assert h.cmp(F(1, 3), F(1, 2)) is Ordering.LESS
