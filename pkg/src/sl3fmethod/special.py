"""Cayley continuants, binary Krawtchouk polynomials, Jacobi values at 0.

All functions take and return :class:`ParamPoly` (ints and Fractions are
accepted wherever a ParamPoly is expected).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .ring import ParamPoly, ppoly

FALLING, RISING, BINOM = "falling", "rising", "binom"


def factorial_binom(r, m: int, kind: str = BINOM) -> ParamPoly:
    """r^{falling m}, r^{rising m}, or the generalized binomial C(r, m)."""
    if m < 0:
        if kind == BINOM:
            return ParamPoly.zero()
        raise ValueError("negative order")
    r = ppoly(r)
    out = ParamPoly.one(r.names)
    step = -1 if kind in (FALLING, BINOM) else 1
    if kind not in (FALLING, RISING, BINOM):
        raise ValueError(f"unknown kind {kind!r}")
    for i in range(m):
        out = out * (r + step * i)
    if kind == BINOM:
        out = out / factorial(m)
    return out


def falling(r, m: int) -> ParamPoly:
    return factorial_binom(r, m, FALLING)


def rising(r, m: int) -> ParamPoly:
    return factorial_binom(r, m, RISING)


def binom(r, m: int) -> ParamPoly:
    return factorial_binom(r, m, BINOM)


# -- Cayley continuants ---------------------------------------------------

def _cayley_det(m: int, x: ParamPoly, y: ParamPoly) -> ParamPoly:
    """Determinant of the m x m tridiagonal matrix by cofactor expansion.

    Entries: diagonal x, superdiagonal 1..m-1, subdiagonal y, y-1, ..., y-m+2.
    The expansion runs along the last row of each leading block, which for a
    tridiagonal matrix reduces to the three-term rule on leading minors.
    """
    if m == 0:
        return ParamPoly.one(x.names)

    def entry(i, j):  # 0-based
        if i == j:
            return x
        if j == i + 1:
            return ParamPoly.const(i + 1, x.names)
        if i == j + 1:
            return y - j
        return ParamPoly.zero(x.names)

    # minors[i] = det of the leading i x i block
    minors = [ParamPoly.one(x.names), entry(0, 0)]
    for i in range(1, m):
        # last row of the (i+1)-block has entries at (i, i-1) and (i, i)
        minors.append(entry(i, i) * minors[i] - entry(i, i - 1) * entry(i - 1, i) * minors[i - 1])
    return minors[m]


def _cayley_recurrence(m: int, x: ParamPoly, y: ParamPoly) -> ParamPoly:
    prev, cur = ParamPoly.one(x.names), x
    if m == 0:
        return prev
    for j in range(2, m + 1):
        prev, cur = cur, x * cur - (y - (j - 2)) * (j - 1) * prev
    return cur


def _cayley_closed(m: int, x: ParamPoly, y: ParamPoly) -> ParamPoly:
    plus, minus = (x + y) / 2, (x - y) / 2
    out = ParamPoly.zero(x.names)
    for j in range(m + 1):
        out = out + falling(plus, j) * rising(minus, m - j) * binom(m, j)
    return out


def cayley(m: int, x, y, mode: str = "recurrence") -> ParamPoly:
    if m < 0:
        raise ValueError("m must be nonnegative")
    x, y = ppoly(x), ppoly(y)
    fn = {"det": _cayley_det, "recurrence": _cayley_recurrence, "closed": _cayley_closed}.get(mode)
    if fn is None:
        raise ValueError(f"unknown mode {mode!r}")
    return fn(m, x, y)


def cayley_det_generic(m: int, x, y) -> ParamPoly:
    """Same determinant by full Laplace expansion (exponential; for small m as a check)."""
    x, y = ppoly(x), ppoly(y)

    def entry(i, j):
        if i == j:
            return x
        if j == i + 1:
            return ParamPoly.const(i + 1, x.names)
        if i == j + 1:
            return y - j
        return None

    def det(rows, cols):
        if not rows:
            return ParamPoly.one(x.names)
        i = rows[0]
        total = ParamPoly.zero(x.names)
        for pos, j in enumerate(cols):
            e = entry(i, j)
            if e is None or not e:
                continue
            sub = det(rows[1:], cols[:pos] + cols[pos + 1:])
            total = total + (e * sub if pos % 2 == 0 else -(e * sub))
        return total

    return det(tuple(range(m)), tuple(range(m)))


# -- Krawtchouk and Jacobi -------------------------------------------------

def krawtchouk(m: int, x, y) -> ParamPoly:
    """K_m(x; y) = sum_j (-1)^j C(x, j) C(y - x, m - j)."""
    x, y = ppoly(x), ppoly(y)
    out = ParamPoly.zero(x.names)
    for j in range(m + 1):
        term = binom(x, j) * binom(y - x, m - j)
        out = out + (term if j % 2 == 0 else -term)
    return out


def jacobi_at0(m: int, alpha, beta) -> ParamPoly:
    """P_m^{(alpha, beta)}(0) = sum_j C(m+a, m-j) C(m+b, j) (-1/2)^j (1/2)^(m-j)."""
    alpha, beta = ppoly(alpha), ppoly(beta)
    out = ParamPoly.zero(alpha.names)
    half = Fraction(1, 2)
    for j in range(m + 1):
        term = binom(alpha + m, m - j) * binom(beta + m, j)
        out = out + term.scale((-half) ** j * half ** (m - j))
    return out
