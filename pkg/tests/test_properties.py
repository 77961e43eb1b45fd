from fractions import Fraction as F

import pytest

from ordfield.fields import LaurentField, RationalField, RationalFunctionField, get_field
from ordfield.probes import candidates_for, main_gap, probe_property, safe_probe
from ordfield.report import expected_statuses
from ordfield.results import PROPERTY_SLUGS, Status

EXPECTED = expected_statuses()


@pytest.mark.parametrize("name", ["q", "ratfun", "ratfun-eps", "laurent"])
@pytest.mark.parametrize("n", list(PROPERTY_SLUGS))
def test_probe_matches_expected(name, n):
    h = get_field(name)
    r = probe_property(h, n)
    assert r.status.value == EXPECTED[name][n]
    assert all(w.verify() for w in r.witnesses)
    if r.status is Status.FAILS:
        assert r.witnesses


def test_candidates_are_deterministic():
    h = LaurentField()
    a, b = candidates_for(h, 3), candidates_for(h, 3)
    assert all(h.eq(x, y) for x, y in zip(a, b))


def test_main_gap():
    assert main_gap(RationalField()).kind == "sqrt2"
    assert main_gap(LaurentField()).kind == "finite"


def test_user_candidates():
    h = RationalFunctionField()
    r = probe_property(h, 18, candidates=[h.omega() / 2])
    assert r.witnesses[0].details["n"] == 3
    r = probe_property(RationalField(), 2, candidates=[F(7, 2)])
    assert r.status is Status.HOLDS and r.constructed == [4]


def test_unknown_property():
    with pytest.raises(ValueError):
        probe_property(RationalField(), 19)


def test_safe_probe_turns_errors_inconclusive():
    h = LaurentField(horizon=2)
    lazy_zero = h.sub(h.div(h.one, h.sub(h.one, h.epsilon())),
                      h.div(h.one, h.sub(h.one, h.epsilon())))
    r = safe_probe(h, 3, candidates=[lazy_zero])
    assert r.status is Status.INCONCLUSIVE
