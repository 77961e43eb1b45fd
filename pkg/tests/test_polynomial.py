from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ordfield.errors import DivisionByZero
from ordfield.polynomial import NEG_INF_DEGREE, X, Polynomial, poly_gcd

coeffs = st.lists(st.builds(F, st.integers(-50, 50), st.integers(1, 20)), max_size=5)
x = sympy.Symbol("x")


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(p.coeffs))


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_zero_polynomial():
    z = Polynomial()
    assert z.degree == NEG_INF_DEGREE
    assert not z
    assert z.format() == "0"


def test_format():
    p = Polynomial([1, -1, F(3, 2)])
    assert p.format("w") == "3/2*w^2 - w + 1"
    assert p.format("e", descending=False) == "1 - e + 3/2*e^2"


def test_divmod_example():
    q, r = divmod(X * X - 1, X - 1)
    assert q == X + 1
    assert not r


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(X, Polynomial())


def test_reversed():
    p = Polynomial([1, 2])
    assert p.reversed() == Polynomial([2, 1])
    assert p.reversed(3) == Polynomial([0, 0, 2, 1])


def test_evaluate():
    assert Polynomial([1, 0, 1])(F(1, 2)) == F(5, 4)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_arithmetic_matches_sympy(a, b):
    p, q = Polynomial(a), Polynomial(b)
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p - q) - (to_sympy(p) - to_sympy(q))) == 0


@given(coeffs, coeffs)
def test_divmod_identity(a, b):
    p, q = Polynomial(a), Polynomial(b)
    if not q:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_gcd_matches_sympy(a, b):
    p, q = Polynomial(a), Polynomial(b)
    if not p and not q:
        return
    g = poly_gcd(p, q)
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), x).monic()
    assert sympy.expand(to_sympy(g) - expected.as_expr()) == 0


@settings(max_examples=40, deadline=None)
@given(coeffs)
def test_root_bound(a):
    p = Polynomial(a)
    if p.degree < 1:
        return
    b = p.root_bound()
    for r in sympy.Poly(to_sympy(p), x).real_roots():
        assert abs(r) < b
