"""Generating polynomials of the families and their F-system solutions."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..ring import ppoly
from ..special import cayley, falling, jacobi_at0, krawtchouk
from ..weyl import WeylElement
from .fsystem import t_saturate
from .params import A1, A2, BMINUS, BPLUS, IDENTITY, FamilyTag
from .tpoly import TPoly


def pplus_poly(k: int, l: int) -> TPoly:
    return TPoly(Fraction(factorial(m) * comb(k, m) * comb(l, m), 2 ** m)
                 for m in range(min(k, l) + 1))


def pminus_poly(k: int, l: int) -> TPoly:
    return pplus_poly(k, l).reflect()


def pc_poly(k: int, s="s") -> TPoly:
    s = ppoly(s)
    return TPoly(cayley(m, s, k).scale(Fraction(comb(k, m), 2 ** m)) for m in range(k + 1))


# -- Jacobi-polynomial forms -------------------------------------------------

def pplus_jacobi(k: int, l: int) -> TPoly:
    big, small = (k, l) if k >= l else (l, k)
    return TPoly(falling(big, m) * jacobi_at0(m, small - m, -m) for m in range(small + 1))


def pminus_jacobi(k: int, l: int) -> TPoly:
    big, small = (k, l) if k >= l else (l, k)
    return TPoly(falling(big, m) * jacobi_at0(m, -m, small - m) for m in range(small + 1))


def pc_jacobi(k: int, s="s") -> TPoly:
    s = ppoly(s)
    return TPoly(falling(k, m) * jacobi_at0(m, (k + s - 2 * m) / 2, (k - s - 2 * m) / 2)
                 for m in range(k + 1))


def pc_krawtchouk_first(k: int, l: int) -> TPoly:
    """sum_m k^(falling m) K_m(l; k) t^m / 2^m  (the s = k - 2l member)."""
    return TPoly((falling(k, m) * krawtchouk(m, l, k)).scale(Fraction(1, 2 ** m))
                 for m in range(k + 1))


def pc_krawtchouk_second(k: int, l: int) -> TPoly:
    """sum_m (-1)^m l^(falling m) K_m(k; l) t^m / 2^m  (the s = 2k - l member)."""
    return TPoly((falling(l, m) * krawtchouk(m, k, l)).scale(Fraction((-1) ** m, 2 ** m))
                 for m in range(l + 1))


# -- per family ----------------------------------------------------------------

def p_family(tag: FamilyTag) -> TPoly:
    v = tag.variant
    if v in (IDENTITY, A1, A2):
        return TPoly([1])
    if v == BPLUS:
        return pplus_poly(tag.k, tag.l)
    if v == BMINUS:
        return pminus_poly(tag.k, tag.l)
    return pc_poly(tag.k, tag.s)


def sol_generator(tag: FamilyTag) -> WeylElement:
    """Generator of the F-system solution space, as a zeta polynomial."""
    k, l = tag.degrees()
    return t_saturate(k, l, p_family(tag))


def c_coefficient_check(k: int) -> bool:
    """Closed coefficients of p_c agree with the coefficient recurrence."""
    from .fsystem import am_recurrence
    return tuple(pc_poly(k).padded(k + 1)) == am_recurrence(k)


__all__ = [
    "pplus_poly", "pminus_poly", "pc_poly", "pplus_jacobi", "pminus_jacobi", "pc_jacobi",
    "pc_krawtchouk_first", "pc_krawtchouk_second", "p_family", "sol_generator",
    "c_coefficient_check",
]
