"""Weyl algebra in n indexed variables over :class:`ParamPoly`.

A term ``(mono, deriv) -> c`` stands for ``c * x^mono * d^deriv`` with every
multiplication operator to the left of every derivative. Two coordinate
families exist: ``X`` (x_i, d/dx_i) and ``ZETA`` (zeta_i, d/dzeta_i).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Tuple

from .ring import DEFAULT_NAMES, ParamPoly, ppoly

X = "x"
ZETA = "zeta"
SPACES = (X, ZETA)

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


class WeylError(ValueError):
    pass


class SpaceMismatch(WeylError):
    pass


class ArityMismatch(WeylError):
    pass


class NotAPolynomial(WeylError):
    pass


def dual_space(space: str) -> str:
    return ZETA if space == X else X


def _falling(c: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= c - i
    return out


@lru_cache(maxsize=None)
def _leibniz(b: Tuple[int, ...], c: Tuple[int, ...]):
    """Expand d^b x^c = sum coef * x^(c-j) d^(b-j) over multi-indices j."""
    partial: List[Tuple[Tuple[int, ...], int]] = [((), 1)]
    for bi, ci in zip(b, c):
        nxt = []
        for j in range(min(bi, ci) + 1):
            f = comb(bi, j) * _falling(ci, j)
            for js, coef in partial:
                nxt.append((js + (j,), coef * f))
        partial = nxt
    return tuple(partial)


class WeylElement:
    """Normal-ordered Weyl-algebra element with ParamPoly coefficients."""

    __slots__ = ("n", "space", "names", "terms", "_hash")

    def __init__(self, n: int, space: str = X,
                 terms: Mapping[Key, object] | None = None,
                 names: Iterable[str] = DEFAULT_NAMES):
        if space not in SPACES:
            raise WeylError(f"unknown space {space!r}")
        self.n = n
        self.space = space
        self.names = tuple(names)
        clean: Dict[Key, ParamPoly] = {}
        for (m, d), c in (terms or {}).items():
            m, d = tuple(m), tuple(d)
            if len(m) != n or len(d) != n:
                raise ArityMismatch(f"term {(m, d)} does not have {n} slots")
            if any(v < 0 for v in m + d):
                raise WeylError("negative exponent")
            c = ppoly(c, self.names)
            if c:
                clean[(m, d)] = clean[(m, d)] + c if (m, d) in clean else c
                if not clean[(m, d)]:
                    del clean[(m, d)]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, space, terms, names=DEFAULT_NAMES):
        obj = object.__new__(cls)
        obj.n, obj.space, obj.names, obj.terms, obj._hash = n, space, tuple(names), terms, None
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int = 3, space: str = X) -> "WeylElement":
        return cls._raw(n, space, {})

    @classmethod
    def const(cls, c, n: int = 3, space: str = X) -> "WeylElement":
        z = (0,) * n
        return cls(n, space, {(z, z): c})

    @classmethod
    def one(cls, n: int = 3, space: str = X) -> "WeylElement":
        return cls.const(1, n, space)

    @classmethod
    def var(cls, i: int, n: int = 3, space: str = X) -> "WeylElement":
        """The multiplication operator by the i-th coordinate (1-based)."""
        m = tuple(1 if k == i - 1 else 0 for k in range(n))
        return cls(n, space, {(m, (0,) * n): 1})

    @classmethod
    def d(cls, i: int, n: int = 3, space: str = X) -> "WeylElement":
        """Partial derivative in the i-th coordinate (1-based)."""
        e = tuple(1 if k == i - 1 else 0 for k in range(n))
        return cls(n, space, {((0,) * n, e): 1})

    @classmethod
    def monomial(cls, mono, deriv=None, coeff=1, space: str = X) -> "WeylElement":
        mono = tuple(mono)
        deriv = tuple(deriv) if deriv is not None else (0,) * len(mono)
        return cls(len(mono), space, {(mono, deriv): coeff})

    @classmethod
    def polynomial(cls, coeffs: Mapping[Tuple[int, ...], object], n: int = 3,
                   space: str = ZETA) -> "WeylElement":
        z = (0,) * n
        return cls(n, space, {(tuple(m), z): c for m, c in coeffs.items()})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(not any(d) for _, d in self.terms)

    def order(self) -> int:
        """Highest total derivative order (-1 for zero)."""
        return max((sum(d) for _, d in self.terms), default=-1)

    def coeff(self, mono, deriv=None) -> ParamPoly:
        deriv = tuple(deriv) if deriv is not None else (0,) * self.n
        return self.terms.get((tuple(mono), deriv), ParamPoly.zero(self.names))

    def poly_coeffs(self) -> Dict[Tuple[int, ...], ParamPoly]:
        if not self.is_polynomial():
            raise NotAPolynomial("element has derivative terms")
        return {m: c for (m, _), c in self.terms.items()}

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "WeylElement"):
        if not isinstance(other, WeylElement):
            raise TypeError(f"expected WeylElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ArityMismatch(f"{self.n} vs {other.n} variables")
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")

    def _lift(self, other):
        if isinstance(other, WeylElement):
            self._check(other)
            return other
        return WeylElement.const(other, self.n, self.space)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return WeylElement._raw(self.n, self.space, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.n, self.space,
                                {k: -c for k, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylElement":
        c = ppoly(c, self.names)
        if not c:
            return WeylElement.zero(self.n, self.space)
        return WeylElement._raw(self.n, self.space,
                                {k: v * c for k, v in self.terms.items() if v * c},
                                self.names)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise WeylError("negative power")
        out = WeylElement.one(self.n, self.space)
        base = self
        while k:
            if k & 1:
                out = weyl_mul(out, base)
            base = weyl_mul(base, base)
            k >>= 1
        return out

    def eval_params(self, assignment) -> "WeylElement":
        return WeylElement(self.n, self.space,
                           {k: c.eval(assignment) for k, c in self.terms.items()},
                           self.names)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            if isinstance(other, (int, Fraction)):
                return self == WeylElement.const(other, self.n, self.space)
            return NotImplemented
        return (self.n, self.space, self.terms) == (other.n, other.space, other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.space, frozenset(self.terms.items())))
        return self._hash

    # -- rendering -------------------------------------------------------

    def sorted_terms(self):
        def key(item):
            (m, d), _ = item
            return (-sum(d), tuple(-v for v in d), -sum(m), tuple(-v for v in m))
        return sorted(self.terms.items(), key=key)

    def _factor_text(self, m, d) -> str:
        v = "x" if self.space == X else "z"
        dv = "d" if self.space == X else "dz"
        parts = []
        for i, e in enumerate(m, 1):
            if e:
                parts.append(f"{v}{i}" + (f"^{e}" if e > 1 else ""))
        for i, e in enumerate(d, 1):
            if e:
                parts.append(f"{dv}{i}" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, ((m, d), c) in enumerate(self.sorted_terms()):
            body = self._factor_text(m, d)
            neg = False
            if c.is_constant():
                q = c.constant_value()
                neg = q < 0
                a = abs(q)
                cs = "" if (a == 1 and body) else (str(a.numerator) if a.denominator == 1
                                                   else f"{a.numerator}/{a.denominator}")
            else:
                cs = f"({c})"
            text = "*".join(p for p in (cs, body) if p)
            if idx == 0:
                pieces.append(("-" if neg else "") + text)
            else:
                pieces.append((" - " if neg else " + ") + text)
        return "".join(pieces)

    def __repr__(self):
        return f"WeylElement[{self.space}]({self})"

    def to_latex(self) -> str:
        """LaTeX with \\frac{\\partial^r}{\\partial x_1^a ...} derivative blocks."""
        v = "x" if self.space == X else r"\zeta"
        if not self.terms:
            return "0"
        out = []
        for idx, ((m, d), c) in enumerate(self.sorted_terms()):
            mono = "".join(f"{v}_{i}" + (f"^{{{e}}}" if e > 1 else "")
                           for i, e in enumerate(m, 1) if e)
            order = sum(d)
            deriv = ""
            if order:
                den = "".join(rf"\partial {v}_{i}" + (f"^{{{e}}}" if e > 1 else "")
                              for i, e in enumerate(d, 1) if e)
                num = r"\partial" + (f"^{{{order}}}" if order > 1 else "")
                deriv = rf"\frac{{{num}}}{{{den}}}"
            body = " ".join(p for p in (mono, deriv) if p)
            neg = False
            if c.is_constant():
                q = c.constant_value()
                neg = q < 0
                a = abs(q)
                if a == 1 and body:
                    cs = ""
                elif a.denominator == 1:
                    cs = str(a.numerator)
                else:
                    cs = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                cs = rf"\left({c.to_latex()}\right)"
            text = " ".join(p for p in (cs, body) if p)
            if idx == 0:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "n": self.n,
            "terms": [{"coeff": str(c), "mono": list(m), "deriv": list(d)}
                      for (m, d), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeylElement":
        return cls(data["n"], data["space"],
                   {(tuple(t["mono"]), tuple(t["deriv"])): ParamPoly.parse(t["coeff"])
                    for t in data["terms"]})


def _collect(acc: Dict, n: int, space: str, names) -> WeylElement:
    """Turn a flat {(mono, deriv, pexp): Fraction} accumulator into an element."""
    grouped: Dict[Key, Dict] = {}
    for (m, d, e), c in acc.items():
        if c:
            grouped.setdefault((m, d), {})[e] = c
    return WeylElement._raw(n, space,
                            {k: ParamPoly._raw(v, names) for k, v in grouped.items()},
                            names)


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """Normal-ordered product a*b."""
    a._check(b)
    if a.names != b.names:
        raise WeylError("coefficient name lists differ")
    acc: Dict = {}
    for (m1, d1), c1 in a.terms.items():
        t1 = c1.terms
        for (m2, d2), c2 in b.terms.items():
            t2 = c2.terms
            for js, f in _leibniz(d1, m2):
                m = tuple(x + y - j for x, y, j in zip(m1, m2, js))
                d = tuple(x - j + y for x, j, y in zip(d1, js, d2))
                for e1, v1 in t1.items():
                    for e2, v2 in t2.items():
                        e = tuple(p + q for p, q in zip(e1, e2)) if any(e1) or any(e2) else e1
                        key = (m, d, e)
                        acc[key] = acc.get(key, 0) + v1 * v2 * f
    return _collect(acc, a.n, a.space, a.names)


def weyl_act(d: WeylElement, p: WeylElement) -> WeylElement:
    """The action of a differential operator on a polynomial."""
    d._check(p)
    if not p.is_polynomial():
        raise NotAPolynomial("right operand carries derivatives")
    acc: Dict = {}
    z = (0,) * d.n
    for (m1, d1), c1 in d.terms.items():
        for (m2, _), c2 in p.terms.items():
            if any(x > y for x, y in zip(d1, m2)):
                continue
            f = 1
            for x, y in zip(d1, m2):
                f *= _falling(y, x)
            m = tuple(x + y - k for x, y, k in zip(m1, m2, d1))
            for e1, v1 in c1.terms.items():
                for e2, v2 in c2.terms.items():
                    e = tuple(p_ + q for p_, q in zip(e1, e2))
                    key = (m, z, e)
                    acc[key] = acc.get(key, 0) + v1 * v2 * f
    return _collect(acc, d.n, d.space, d.names)


def _transform(d: WeylElement, target: str, var_img, der_img) -> WeylElement:
    n = d.n
    out = WeylElement.zero(n, target)
    for (m, dv), c in d.terms.items():
        term = WeylElement.const(c, n, target)
        for i, e in enumerate(m):
            if e:
                term = weyl_mul(term, var_img(i + 1) ** e)
        for i, e in enumerate(dv):
            if e:
                term = weyl_mul(term, der_img(i + 1) ** e)
        out = out + term
    return out


def fourier_hat(d: WeylElement) -> WeylElement:
    """Algebraic Fourier transform X -> ZETA: x_i -> d/dzeta_i, d/dx_i -> -zeta_i."""
    if d.space != X:
        raise SpaceMismatch("fourier_hat expects an x-space element; use fourier_inverse")
    n = d.n
    return _transform(d, ZETA, lambda i: WeylElement.d(i, n, ZETA),
                      lambda i: -WeylElement.var(i, n, ZETA))


def fourier_inverse(d: WeylElement) -> WeylElement:
    """Inverse transform ZETA -> X: zeta_i -> -d/dx_i, d/dzeta_i -> x_i."""
    if d.space != ZETA:
        raise SpaceMismatch("fourier_inverse expects a zeta-space element")
    n = d.n
    return _transform(d, X, lambda i: -WeylElement.d(i, n, X),
                      lambda i: WeylElement.var(i, n, X))


def trun0(d: WeylElement) -> WeylElement:
    """Constant-coefficient part."""
    return WeylElement._raw(d.n, d.space,
                            {k: c for k, c in d.terms.items() if not any(k[0])}, d.names)


def symb0(d: WeylElement) -> WeylElement:
    """Truncated symbol: keep constant-coefficient terms, d^b -> (dual coordinate)^b."""
    z = (0,) * d.n
    return WeylElement._raw(d.n, dual_space(d.space),
                            {(dv, z): c for (m, dv), c in d.terms.items() if not any(m)},
                            d.names)


def symb0_inverse(p: WeylElement) -> WeylElement:
    """Constant-coefficient operator whose truncated symbol is p."""
    if not p.is_polynomial():
        raise NotAPolynomial("symbol must be a polynomial")
    z = (0,) * p.n
    return WeylElement._raw(p.n, dual_space(p.space),
                            {(z, m): c for (m, _), c in p.terms.items()}, p.names)
