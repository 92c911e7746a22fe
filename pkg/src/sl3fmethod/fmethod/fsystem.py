"""The F-system: operators, T-saturation and the solver."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from ..ring import ParamPoly, ppoly
from ..weyl import ZETA, WeylElement, fourier_hat, weyl_act, weyl_mul
from .tpoly import TPoly


class FSystemError(ValueError):
    pass


class ImageOutsidePol(FSystemError):
    pass


def _lam(lam) -> Tuple[ParamPoly, ParamPoly]:
    return (ppoly(lam[0]), ppoly(lam[1]))


def dpi_star(j: int, lam) -> WeylElement:
    """The vector-field action of N_j^+ on the x side (j = 1, 2)."""
    l1, l2 = _lam(lam)
    x1, x2, x3 = (WeylElement.var(i) for i in (1, 2, 3))
    d1, d2, d3 = (WeylElement.d(i) for i in (1, 2, 3))
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    if j == 1:
        return (weyl_mul(x1, WeylElement.const(2 - l1))
                + weyl_mul(x1 * x1, d1)
                - weyl_mul(x1 * x2 - 2 * x3, d2).scale(half)
                + weyl_mul(x1 * x1 * x2 + 2 * (x1 * x3), d3).scale(quarter))
    if j == 2:
        return (weyl_mul(x2, WeylElement.const(2 - l2))
                - weyl_mul(x1 * x2 + 2 * x3, d1).scale(half)
                + weyl_mul(x2 * x2, d2)
                - weyl_mul(x1 * x2 * x2 - 2 * (x2 * x3), d3).scale(quarter))
    raise FSystemError(f"j must be 1 or 2, got {j}")


def dpi_star_hat(j: int, lam) -> WeylElement:
    return fourier_hat(dpi_star(j, lam))


def fsystem_operator(j: int, lam) -> WeylElement:
    """-zeta_j * hat(dpi(N_j^+)), the operator that preserves each Pol(k, l)."""
    return weyl_mul(-WeylElement.var(j, space=ZETA), dpi_star_hat(j, lam))


def t_basis(k: int, l: int, m: int) -> WeylElement:
    """T_{k,l}(t^m) = zeta1^(k-m) zeta2^(l-m) zeta3^m."""
    return WeylElement.polynomial({(k - m, l - m, m): 1})


def t_saturate(k: int, l: int, p: TPoly) -> WeylElement:
    """T_{k,l}(p) = zeta1^k zeta2^l p(zeta3 / (zeta1 zeta2)) as a polynomial."""
    if p.degree() > min(k, l):
        raise FSystemError(f"deg p = {p.degree()} exceeds min(k, l) = {min(k, l)}")
    return WeylElement.polynomial({(k - m, l - m, m): c for m, c in enumerate(p.coeffs)})


def t_unsaturate(k: int, l: int, psi: WeylElement) -> TPoly:
    """Inverse of t_saturate; raises ImageOutsidePol off Pol(k, l)."""
    n = min(k, l) + 1
    coeffs = [ParamPoly.zero() for _ in range(n)]
    for mono, c in psi.poly_coeffs().items():
        m = mono[2]
        if m >= n or mono != (k - m, l - m, m):
            raise ImageOutsidePol(f"monomial {mono} is not in Pol({k},{l})")
        coeffs[m] = c
    return TPoly(coeffs)


Matrix = List[List[ParamPoly]]


def tsat_matrix(k: int, l: int, j: int, lam) -> Matrix:
    """Matrix of the T-saturated F-system operator on the basis 1, t, ..., t^min(k,l).

    Column m holds the image of t^m, computed by acting on zeta-monomials.
    """
    op = fsystem_operator(j, lam)
    n = min(k, l) + 1
    cols = []
    for m in range(n):
        image = t_unsaturate(k, l, weyl_act(op, t_basis(k, l, m)))
        cols.append(image.padded(n))
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def closed_form_matrix(a: int, b: int, mu, negate_t: bool = False) -> Matrix:
    """Matrix of d/dt + (mu+a-b/2-1)(a-theta) + t(a-1-theta)(a-theta)(b-theta)/4.

    With ``negate_t`` the same operator in the variable -t is returned.
    """
    mu = ppoly(mu)
    n = min(a, b) + 1
    sgn = -1 if negate_t else 1
    M = [[ParamPoly.zero() for _ in range(n)] for _ in range(n)]
    for m in range(n):
        if m >= 1:
            M[m - 1][m] = ParamPoly.const(sgn * m)
        M[m][m] = (mu + a - Fraction(b, 2) - 1) * (a - m)
        if m + 1 < n:
            M[m + 1][m] = ParamPoly.const(sgn * Fraction((a - 1 - m) * (a - m) * (b - m), 4))
        elif (a - 1 - m) * (a - m) * (b - m) != 0:
            raise ImageOutsidePol("closed form leaves the truncated space")
    return M


def closed_form_pair(k: int, l: int, lam) -> Tuple[Matrix, Matrix]:
    l1, l2 = _lam(lam)
    return closed_form_matrix(k, l, l1), closed_form_matrix(l, k, l2, negate_t=True)


def apply_matrix(M: Matrix, p: TPoly) -> TPoly:
    n = len(M)
    v = p.padded(n)
    return TPoly(sum((M[r][c] * v[c] for c in range(n)), ParamPoly.zero()) for r in range(n))


def _nullspace(rows: List[List[Fraction]], n: int) -> List[List[Fraction]]:
    import sympy
    mat = sympy.Matrix(len(rows), n, lambda i, j: sympy.Rational(rows[i][j].numerator,
                                                                  rows[i][j].denominator))
    basis = mat.nullspace()
    return [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in vec]
            for vec in basis]


def fsystem_solve(k: int, l: int, lam) -> Tuple[int, Optional[TPoly]]:
    """Exact solution space of the T-saturated F-system at rational lambda."""
    l1, l2 = _lam(lam)
    if not (l1.is_constant() and l2.is_constant()):
        raise FSystemError("fsystem_solve needs rational lambda; use fsystem_verify for symbolic s")
    n = min(k, l) + 1
    rows = []
    for j in (1, 2):
        for row in tsat_matrix(k, l, j, (l1, l2)):
            rows.append([c.constant_value() for c in row])
    basis = _nullspace(rows, n)
    if not basis:
        return 0, None
    if len(basis) > 1:
        return len(basis), None
    vec = basis[0]
    pivot = vec[0] if vec[0] != 0 else next(x for x in vec if x != 0)
    return 1, TPoly(x / pivot for x in vec)


def annihilates(k: int, l: int, lam, p: TPoly) -> bool:
    return all(apply_matrix(tsat_matrix(k, l, j, lam), p).degree() < 0 for j in (1, 2))


def fsystem_verify(k: int, p: Optional[TPoly] = None, s="s") -> bool:
    """Check that p (default p_c^{(s;k)}) solves the system on the C-family line."""
    from .families import pc_poly
    from .params import c_family_lambda
    if k < 1:
        raise FSystemError("k must be positive")
    lam = c_family_lambda(k, s)
    if p is None:
        p = pc_poly(k, s)
    return annihilates(k, k, lam, p)


@lru_cache(maxsize=None)
def am_recurrence(k: int) -> Tuple[ParamPoly, ...]:
    """a_m = -(k-m+1)/(4m) * ((k-m+2)^2 a_{m-2} - 2 s a_{m-1}), a_0 = 1."""
    s = ParamPoly.var("s")
    a: List[ParamPoly] = [ParamPoly.one()]
    for m in range(1, k + 1):
        prev2 = a[m - 2] if m >= 2 else ParamPoly.zero()
        term = prev2 * ((k - m + 2) ** 2) - s * a[m - 1] * 2
        a.append(term.scale(Fraction(-(k - m + 1), 4 * m)))
    return tuple(a)
