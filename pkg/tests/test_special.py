from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sl3fmethod.ring import ParamPoly
from sl3fmethod.special import (binom, cayley, cayley_det_generic, factorial_binom, falling,
                                jacobi_at0, krawtchouk, rising)

s, y = ParamPoly.var("s"), ParamPoly.var("l1")


def _q(v):
    v = Fraction(v)
    return sympy.Rational(v.numerator, v.denominator)


def test_factorials():
    assert falling(s, 3) == s * (s - 1) * (s - 2)
    assert rising(s, 2) == s * (s + 1)
    assert binom(s, 2) == s * (s - 1) / 2
    assert binom(5, 2) == 10 and binom(3, 5) == 0 and binom(-1, 3) == -1
    assert factorial_binom(s, 0, "falling") == 1
    with pytest.raises(ValueError):
        factorial_binom(s, 2, "other")


def test_small_continuants():
    assert cayley(0, s, y) == 1
    assert cayley(1, s, y) == s
    assert cayley(2, s, y) == s * s - y
    assert cayley(3, s, y) == s ** 3 - 3 * s * y + 2 * s


@pytest.mark.parametrize("m", range(0, 7))
def test_continuant_modes(m):
    r = cayley(m, s, y)
    assert cayley(m, s, y, "det") == r
    assert cayley(m, s, y, "closed") == r
    assert cayley_det_generic(m, s, y) == r


def test_continuant_against_sympy_determinant():
    xs, ys = sympy.symbols("x y")
    for m in range(1, 6):
        M = sympy.zeros(m, m)
        for i in range(m):
            M[i, i] = xs
            if i + 1 < m:
                M[i, i + 1] = i + 1
                M[i + 1, i] = ys - i
        for xv, yv in ((Fraction(1, 3), 4), (-2, Fraction(5, 2))):
            want = M.det().subs({xs: _q(xv), ys: _q(yv)})
            assert _q(cayley(m, xv, yv).constant_value()) == want


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_krawtchouk_generating_function(m, x, yy):
    # coefficient of t^m in (1+t)^(y-x) (1-t)^x
    if x > yy:
        x, yy = yy, x
    t = sympy.symbols("t")
    poly = sympy.expand((1 + t) ** (yy - x) * (1 - t) ** x)
    assert krawtchouk(m, x, yy) == int(poly.coeff(t, m))


@given(st.integers(0, 7), st.fractions(-5, 5, max_denominator=4), st.fractions(-5, 5, max_denominator=4))
def test_jacobi_against_sympy(m, a, b):
    # symbolic closed form first: the numeric recurrence divides by zero at a + b = -2
    A, B = sympy.symbols("A B")
    want = sympy.expand(sympy.expand_func(sympy.jacobi(m, A, B, 0))).subs({A: _q(a), B: _q(b)})
    assert _q(jacobi_at0(m, a, b).constant_value()) == want


def test_binomial_as_jacobi():
    for l in range(6):
        for m in range(6):
            assert jacobi_at0(m, l - m, -m).scale(2 ** m) == comb(l, m)
