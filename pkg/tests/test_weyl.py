from fractions import Fraction

import pytest
from hypothesis import given

from sl3fmethod.ring import ParamPoly
from sl3fmethod.weyl import (X, ZETA, ArityMismatch, NotAPolynomial, SpaceMismatch, WeylElement,
                             fourier_hat, fourier_inverse, symb0, symb0_inverse, trun0,
                             weyl_act, weyl_mul)

from conftest import weyl_elements

x1, x2, x3 = (WeylElement.var(i) for i in (1, 2, 3))
d1, d2, d3 = (WeylElement.d(i) for i in (1, 2, 3))


def test_canonical_commutation():
    assert weyl_mul(d1, x1) == weyl_mul(x1, d1) + 1
    assert weyl_mul(d1, x2) == weyl_mul(x2, d1)
    # d^2 x^2 = x^2 d^2 + 4 x d + 2
    assert weyl_mul(d1 * d1, x1 * x1) == x1 * x1 * d1 * d1 + 4 * (x1 * d1) + 2


def test_act_on_polynomials():
    p = WeylElement.polynomial({(2, 1, 0): 1}, space=X)
    assert weyl_act(d1, p) == WeylElement.polynomial({(1, 1, 0): 2}, space=X)
    assert weyl_act(x3, p) == WeylElement.polynomial({(2, 1, 1): 1}, space=X)
    with pytest.raises(NotAPolynomial):
        weyl_act(d1, d2)


def test_space_and_arity_guards():
    z = WeylElement.var(1, space=ZETA)
    with pytest.raises(SpaceMismatch):
        _ = x1 + z
    with pytest.raises(SpaceMismatch):
        fourier_hat(z)
    with pytest.raises(SpaceMismatch):
        fourier_inverse(x1)
    with pytest.raises(ArityMismatch):
        _ = x1 + WeylElement.var(1, n=2)


def test_fourier_on_generators():
    z1, dz1 = WeylElement.var(1, space=ZETA), WeylElement.d(1, space=ZETA)
    assert fourier_hat(x1) == dz1
    assert fourier_hat(d1) == -z1
    # x1 d1 -> dz1 (-z1) = -z1 dz1 - 1
    assert fourier_hat(x1 * d1) == -(z1 * dz1) - 1


@given(weyl_elements(), weyl_elements(), weyl_elements())
def test_associative(a, b, c):
    assert weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))


@given(weyl_elements(), weyl_elements())
def test_fourier_is_multiplicative_and_invertible(a, b):
    assert fourier_hat(weyl_mul(a, b)) == weyl_mul(fourier_hat(a), fourier_hat(b))
    assert fourier_inverse(fourier_hat(a)) == a


@given(weyl_elements(), weyl_elements())
def test_action_is_a_module_structure(a, b):
    p = WeylElement.polynomial({(2, 1, 1): 1, (0, 3, 0): Fraction(-1, 2)}, space=X)
    assert weyl_act(weyl_mul(a, b), p) == weyl_act(a, weyl_act(b, p))


@given(weyl_elements())
def test_symbol_round_trip(a):
    t = trun0(a)
    assert symb0_inverse(symb0(a)) == t
    assert symb0(t) == symb0(a)


def test_symbol_of_a_composite():
    op = weyl_mul(d2 - weyl_mul(x1, d3).scale(Fraction(1, 2)),
                  weyl_mul(d1 + weyl_mul(x2, d3).scale(Fraction(1, 2)),
                           d1 + weyl_mul(x2, d3).scale(Fraction(1, 2))))
    assert symb0(op) == WeylElement.polynomial({(2, 1, 0): 1, (1, 0, 1): 1})


def test_params_in_coefficients():
    s = ParamPoly.var("s")
    a = d3.scale(s)
    assert a.eval_params({"s": 2}) == 2 * d3
    assert str(a) == "(s)*d3"


@given(weyl_elements())
def test_json_round_trip(schema, a):
    data = a.to_json()
    schema("weyl", data)
    assert WeylElement.from_json(data) == a


def test_rendering():
    assert str(weyl_mul(x1, d1 * d1)) == "x1*d1^2"
    z = WeylElement.var(1, space=ZETA) * WeylElement.d(1, space=ZETA)
    assert str(z) == "z1*dz1"
    assert r"\partial x_1" in (x1 * d1).to_latex()
