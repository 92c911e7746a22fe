"""U(sl3) in PBW normal form, Verma-module action and the n_- realizations.

Basis order (index 0..7): N1-, N2-, N3-, H1, H2, N1+, N2+, N3+. A PBW monomial
is an exponent 8-vector read in that order. Structure constants are derived
from 3x3 matrix units when the module is imported.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple

from .ring import DEFAULT_NAMES, ParamPoly, ppoly
from .weyl import X, ZETA, WeylElement, weyl_act, weyl_mul

BASIS_NAMES = ("N1-", "N2-", "N3-", "H1", "H2", "N1+", "N2+", "N3+")
LATEX_NAMES = ("N_1^{-}", "N_2^{-}", "N_3^{-}", "H_1", "H_2",
               "N_1^{+}", "N_2^{+}", "N_3^{+}")
N1M, N2M, N3M, H1, H2, N1P, N2P, N3P = range(8)
NMINUS = (N1M, N2M, N3M)

Mono = Tuple[int, ...]
ZERO8: Mono = (0,) * 8

DEFAULT_DEGREE_CAP = 14


class PBWError(ValueError):
    pass


class BasisDecompositionFailure(PBWError):
    pass


class DegreeLimitExceeded(PBWError):
    pass


class NotInNilradical(PBWError):
    pass


# -- structure constants ---------------------------------------------------

def _unit(i: int, j: int):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i - 1][j - 1] = Fraction(1)
    return m


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _matsub(a, b):
    return [[a[i][j] - b[i][j] for j in range(3)] for i in range(3)]


def _diag(*d):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for i, v in enumerate(d):
        m[i][i] = Fraction(v)
    return m


MATRICES = (
    _unit(2, 1), _unit(3, 2), _unit(3, 1),
    _diag(1, -1, 0), _diag(0, 1, -1),
    _unit(1, 2), _unit(2, 3), _unit(1, 3),
)

_OFFDIAG = {(2, 1): N1M, (3, 2): N2M, (3, 1): N3M, (1, 2): N1P, (2, 3): N2P, (1, 3): N3P}


def decompose(mat) -> Dict[int, Fraction]:
    """Express a traceless 3x3 matrix in the basis above."""
    out: Dict[int, Fraction] = {}
    for (i, j), idx in _OFFDIAG.items():
        v = mat[i - 1][j - 1]
        if v:
            out[idx] = Fraction(v)
    d1, d2, d3 = (mat[i][i] for i in range(3))
    if d1 + d2 + d3 != 0:
        raise BasisDecompositionFailure("matrix is not traceless")
    # diag(d1,d2,d3) = d1*H1 + (d1+d2)*H2
    if d1:
        out[H1] = Fraction(d1)
    if d1 + d2:
        out[H2] = Fraction(d1 + d2)
    return out


def _structure_constants():
    table = {}
    for a in range(8):
        for b in range(8):
            comm = _matsub(_matmul(MATRICES[a], MATRICES[b]),
                           _matmul(MATRICES[b], MATRICES[a]))
            table[(a, b)] = decompose(comm)
    return table


_BRACKET = _structure_constants()


def bracket(a: int, b: int) -> Dict[int, Fraction]:
    """[a, b] as {basis index: coefficient}."""
    return dict(_BRACKET[(a, b)])


# -- PBW straightening over Q ------------------------------------------------

def _add_into(acc: Dict[Mono, Fraction], src: Mapping[Mono, Fraction], f=1):
    for m, c in src.items():
        v = acc.get(m, 0) + c * f
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


@lru_cache(maxsize=None)
def _gen_times(i: int, mono: Mono) -> Tuple[Tuple[Mono, Fraction], ...]:
    """x_i * mono in PBW form."""
    lead = next((k for k, e in enumerate(mono) if e), None)
    if lead is None or i <= lead:
        m = list(mono)
        m[i] += 1
        return ((tuple(m), Fraction(1)),)
    rest = list(mono)
    rest[lead] -= 1
    rest = tuple(rest)
    acc: Dict[Mono, Fraction] = {}
    # x_i x_lead rest = x_lead (x_i rest) + [x_i, x_lead] rest
    for m, c in _gen_times(i, rest):
        _add_into(acc, dict(_gen_times(lead, m)), c)
    for k, c in _BRACKET[(i, lead)].items():
        _add_into(acc, dict(_gen_times(k, rest)), c)
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def mono_mul(a: Mono, b: Mono) -> Tuple[Tuple[Mono, Fraction], ...]:
    """Product of two PBW monomials, as sorted (mono, coeff) pairs."""
    if not any(a):
        return ((b, Fraction(1)),)
    last = max(k for k, e in enumerate(a) if e)
    head = list(a)
    head[last] -= 1
    head = tuple(head)
    acc: Dict[Mono, Fraction] = {}
    for m, c in _gen_times(last, b):
        _add_into(acc, dict(mono_mul(head, m)), c)
    return tuple(sorted(acc.items()))


# -- UEnv ------------------------------------------------------------------

class UEnv:
    """Element of U(sl3): {PBW exponent 8-vector: ParamPoly}."""

    __slots__ = ("terms", "names", "_hash")

    def __init__(self, terms: Mapping[Mono, object] | None = None,
                 names: Iterable[str] = DEFAULT_NAMES):
        self.names = tuple(names)
        clean: Dict[Mono, ParamPoly] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != 8 or any(e < 0 for e in m):
                raise PBWError(f"bad PBW exponent vector {m}")
            c = ppoly(c, self.names)
            if m in clean:
                c = clean[m] + c
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, names=DEFAULT_NAMES):
        obj = object.__new__(cls)
        obj.terms, obj.names, obj._hash = terms, tuple(names), None
        return obj

    @classmethod
    def zero(cls) -> "UEnv":
        return cls._raw({})

    @classmethod
    def one(cls) -> "UEnv":
        return cls({ZERO8: 1})

    @classmethod
    def gen(cls, i: int) -> "UEnv":
        m = [0] * 8
        m[i] = 1
        return cls({tuple(m): 1})

    @classmethod
    def nminus(cls, a: int, b: int, c: int, coeff=1) -> "UEnv":
        """coeff * N1^a N2^b N3^c."""
        return cls({(a, b, c, 0, 0, 0, 0, 0): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_nminus(self) -> bool:
        return all(not any(m[3:]) for m in self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __add__(self, other):
        if not isinstance(other, UEnv):
            other = UEnv({ZERO8: other})
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out[m] + c if m in out else c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return UEnv._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return UEnv._raw({m: -c for m, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        if not isinstance(other, UEnv):
            other = UEnv({ZERO8: other})
        return self + (-other)

    def scale(self, c) -> "UEnv":
        c = ppoly(c, self.names)
        return UEnv._raw({m: v * c for m, v in self.terms.items() if v * c}, self.names)

    def __mul__(self, other):
        if isinstance(other, UEnv):
            return pbw_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = UEnv.one()
        for _ in range(k):
            out = pbw_mul(out, self)
        return out

    def eval_params(self, assignment) -> "UEnv":
        return UEnv({m: c.eval(assignment) for m, c in self.terms.items()}, self.names)

    def __eq__(self, other):
        if not isinstance(other, UEnv):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self):
        return self._render(BASIS_NAMES, "*", lambda e: f"^{e}", str)

    def __repr__(self):
        return f"UEnv({self})"

    def to_latex(self) -> str:
        def coef(c: ParamPoly):
            if c.is_constant():
                q = c.constant_value()
                if q.denominator == 1:
                    return str(q.numerator)
                sign = "-" if q < 0 else ""
                return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
            return rf"\left({c.to_latex()}\right)"
        return self._render(LATEX_NAMES, " ", lambda e: f"^{{{e}}}", coef, latex=True)

    def _render(self, names, sep, pw, coef, latex=False) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            parts = []
            for idx, e in enumerate(m):
                if e:
                    nm = f"({names[idx]})" if (latex and e > 1) else names[idx]
                    parts.append(nm + (pw(e) if e > 1 else ""))
            body = sep.join(parts)
            cs = coef(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if body and cs == "1":
                cs = ""
            if cs and not c.is_constant() and not latex:
                cs = f"({cs})"
            text = sep.join(p for p in (cs, body) if p)
            if i == 0:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"coeff": str(c), "exps": list(m)} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "UEnv":
        return cls({tuple(t["exps"]): ParamPoly.parse(t["coeff"]) for t in data["terms"]})


def pbw_mul(a: UEnv, b: UEnv) -> UEnv:
    acc: Dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            prod = mono_mul(m1, m2)
            for e1, v1 in c1.terms.items():
                for e2, v2 in c2.terms.items():
                    e = tuple(p + q for p, q in zip(e1, e2))
                    v12 = v1 * v2
                    for m, f in prod:
                        key = (m, e)
                        acc[key] = acc.get(key, 0) + v12 * f
    grouped: Dict[Mono, Dict] = {}
    for (m, e), c in acc.items():
        if c:
            grouped.setdefault(m, {})[e] = c
    return UEnv._raw({m: ParamPoly._raw(v, a.names) for m, v in grouped.items()}, a.names)


# -- symmetrization ----------------------------------------------------------

def degree_cap() -> int:
    raw = os.environ.get("FMETHOD_DEGREE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise PBWError(f"FMETHOD_DEGREE_CAP must be an integer, got {raw!r}") from None
    return DEFAULT_DEGREE_CAP


@lru_cache(maxsize=None)
def _word_sum(a: int, b: int, c: int) -> Tuple[Tuple[Mono, Fraction], ...]:
    """Sum over all distinct orderings of N1^a N2^b N3^c (unnormalized)."""
    if a + b + c == 0:
        return ((ZERO8, Fraction(1)),)
    acc: Dict[Mono, Fraction] = {}
    for gen, rest in ((N1M, (a - 1, b, c)), (N2M, (a, b - 1, c)), (N3M, (a, b, c - 1))):
        if min(rest) < 0:
            continue
        for m, coef in _word_sum(*rest):
            _add_into(acc, dict(_gen_times(gen, m)), coef)
    return tuple(sorted(acc.items()))


def symmetrize(a: int, b: int, c: int) -> UEnv:
    """s(N1^a N2^b N3^c): the average over distinct orderings of the multiset."""
    if min(a, b, c) < 0:
        raise PBWError("exponents must be nonnegative")
    if a + b + c > degree_cap():
        raise DegreeLimitExceeded(f"degree {a + b + c} exceeds cap {degree_cap()}")
    count = factorial(a + b + c) // (factorial(a) * factorial(b) * factorial(c))
    return UEnv({m: f / count for m, f in _word_sum(a, b, c)})


def symmetrize_poly(p: WeylElement) -> UEnv:
    """Linear extension of symmetrize to polynomials in three variables."""
    if not p.is_polynomial():
        from .weyl import NotAPolynomial
        raise NotAPolynomial("symmetrization needs a polynomial")
    out = UEnv.zero()
    for (m, _), c in p.terms.items():
        out = out + symmetrize(*m).scale(c)
    return out


# -- realizations -----------------------------------------------------------

def _half(v):
    return Fraction(1, 2) * v


def dR_generators():
    """dR(N1-), dR(N2-), dR(N3-) on the x side."""
    x1, x2 = WeylElement.var(1), WeylElement.var(2)
    d1, d2, d3 = WeylElement.d(1), WeylElement.d(2), WeylElement.d(3)
    return (d1 + weyl_mul(_half(x2), d3),
            d2 - weyl_mul(_half(x1), d3),
            d3)


def dLhat_generators():
    """Fourier-side generators on the zeta side."""
    z1, z2, z3 = (WeylElement.var(i, space=ZETA) for i in (1, 2, 3))
    dz1, dz2 = WeylElement.d(1, space=ZETA), WeylElement.d(2, space=ZETA)
    return (z1 - weyl_mul(_half(z3), dz2),
            z2 + weyl_mul(_half(z3), dz1),
            z3)


_GENS = {X: dR_generators(), ZETA: dLhat_generators()}


@lru_cache(maxsize=None)
def _gen_power(space: str, j: int, k: int) -> WeylElement:
    if k == 0:
        return WeylElement.one(3, space)
    return weyl_mul(_gen_power(space, j, k - 1), _GENS[space][j])


@lru_cache(maxsize=None)
def _realize_mono(space: str, a: int, b: int, c: int) -> WeylElement:
    out = weyl_mul(_gen_power(space, 0, a), _gen_power(space, 1, b))
    return weyl_mul(out, _gen_power(space, 2, c))


def _check_nminus(u: UEnv):
    if not u.is_nminus():
        raise NotInNilradical("element has Cartan or positive-root factors")


def _realize(u: UEnv, space: str) -> WeylElement:
    _check_nminus(u)
    out = WeylElement.zero(3, space)
    for m, c in u.terms.items():
        out = out + _realize_mono(space, *m[:3]).scale(c)
    return out


def dR_realize(u: UEnv) -> WeylElement:
    """Right-regular realization of u in U(n_-) as an x-space differential operator."""
    return _realize(u, X)


def dLhat_realize(u: UEnv) -> WeylElement:
    """Fourier-transformed left realization of u in U(n_-) on the zeta side."""
    return _realize(u, ZETA)


@lru_cache(maxsize=None)
def _fc_mono(a: int, b: int, c: int) -> WeylElement:
    # apply the rightmost factor first
    p = WeylElement.one(3, ZETA)
    g1, g2, g3 = _GENS[ZETA]
    for gen, k in ((g3, c), (g2, b), (g1, a)):
        for _ in range(k):
            p = weyl_act(gen, p)
    return p


def fc_forward(u: UEnv) -> WeylElement:
    """u -> dLhat(u) applied to the constant 1."""
    _check_nminus(u)
    out = WeylElement.zero(3, ZETA)
    for m, c in u.terms.items():
        out = out + _fc_mono(*m[:3]).scale(c)
    return out


def fc_inverse(p: WeylElement) -> UEnv:
    """Monomial-wise symmetrization of a zeta polynomial."""
    if p.space != ZETA or p.n != 3:
        from .weyl import SpaceMismatch
        raise SpaceMismatch("fc_inverse expects a polynomial in zeta_1..zeta_3")
    return symmetrize_poly(p)


def m_sign(b: Tuple[int, int, int], mono: Mono) -> int:
    """Sign of Ad(diag(b)) on the PBW monomial (b entries are +-1, product 1)."""
    b1, b2, b3 = b
    # Ad(diag(b)) E_ij = b_i b_j E_ij, so N1- ~ b2 b1 = b3, N2- ~ b1, N3- ~ b2
    scale = {N1M: b3, N2M: b1, N3M: b2, H1: 1, H2: 1, N1P: b3, N2P: b1, N3P: b2}
    s = 1
    for i, e in enumerate(mono):
        s *= scale[i] ** e
    return s


# -- Verma modules ----------------------------------------------------------

class VermaVector:
    """body (x) 1 inside M(mu1, mu2)^(eps1, eps2); hw holds the values on H1, H2."""

    __slots__ = ("body", "hw", "mchar")

    def __init__(self, body: UEnv, hw, mchar=(1, 1)):
        if not body.is_nminus():
            raise NotInNilradical("Verma vector body must lie in U(n_-)")
        self.body = body
        self.hw = (ppoly(hw[0]), ppoly(hw[1]))
        self.mchar = tuple(int(e) for e in mchar)
        if any(e not in (1, -1) for e in self.mchar):
            raise PBWError(f"bad character {mchar}")

    @classmethod
    def highest(cls, hw, mchar=(1, 1)) -> "VermaVector":
        return cls(UEnv.one(), hw, mchar)

    def with_body(self, body: UEnv) -> "VermaVector":
        return VermaVector(body, self.hw, self.mchar)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return (self.body, self.hw, self.mchar) == (other.body, other.hw, other.mchar)

    def __hash__(self):
        return hash((self.body, self.hw, self.mchar))

    def __repr__(self):
        return f"VermaVector({self.body} ; hw={self.hw[0]},{self.hw[1]} ; {self.mchar})"


def verma_reduce(u: UEnv, hw) -> UEnv:
    """Reduce u (x) 1: drop positive-root terms, replace H1, H2 by hw values."""
    h1, h2 = ppoly(hw[0]), ppoly(hw[1])
    out = UEnv.zero()
    for m, c in u.terms.items():
        if any(m[5:]):
            continue
        coef = c * h1 ** m[H1] * h2 ** m[H2]
        out = out + UEnv({m[:3] + (0,) * 5: coef})
    return out


def verma_act(x: UEnv, v: VermaVector) -> VermaVector:
    return v.with_body(verma_reduce(pbw_mul(x, v.body), v.hw))


def is_singular(v: VermaVector) -> bool:
    """True iff N1+ and N2+ kill v (N3+ then follows from the bracket)."""
    return all(verma_act(UEnv.gen(g), v).is_zero() for g in (N1P, N2P))
