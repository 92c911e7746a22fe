"""Exact coefficient arithmetic.

Scalars are :class:`fractions.Fraction`. Everything symbolic lives in
:class:`ParamPoly`, a sparse polynomial over Q in a fixed, ordered list of
parameter names (``("s", "l1", "l2")`` unless stated otherwise).
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Tuple, Union

DEFAULT_NAMES: Tuple[str, ...] = ("s", "l1", "l2")

Rational = Fraction
Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]


class RingError(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class ParameterMismatch(RingError):
    pass


class UnknownParameter(RingError):
    pass


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, ``"p/q"`` string or constant ParamPoly to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, ParamPoly):
        if not value.is_constant():
            raise RingError(f"not a constant: {value}")
        return value.constant_value()
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rational_arith(a, b, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by zero rational")
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ParamPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples (aligned with ``names``) to nonzero
    Fractions. Instances are treated as immutable.
    """

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Scalar] | None = None,
                 names: Iterable[str] = DEFAULT_NAMES):
        self.names = tuple(names)
        clean: Dict[Exps, Fraction] = {}
        if terms:
            n = len(self.names)
            for e, c in terms.items():
                if len(e) != n:
                    raise RingError(f"exponent {e} does not match names {self.names}")
                if any(x < 0 for x in e):
                    raise RingError(f"negative exponent {e}")
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exps, Fraction], names: Tuple[str, ...]) -> "ParamPoly":
        obj = object.__new__(cls)
        obj.names = names
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, names: Iterable[str] = DEFAULT_NAMES) -> "ParamPoly":
        names = tuple(names)
        c = as_rational(c)
        return cls._raw({(0,) * len(names): c} if c else {}, names)

    @classmethod
    def var(cls, name: str, names: Iterable[str] = DEFAULT_NAMES) -> "ParamPoly":
        names = tuple(names)
        if name not in names:
            raise UnknownParameter(name)
        e = tuple(1 if n == name else 0 for n in names)
        return cls._raw({e: Fraction(1)}, names)

    @classmethod
    def zero(cls, names: Iterable[str] = DEFAULT_NAMES) -> "ParamPoly":
        return cls._raw({}, tuple(names))

    @classmethod
    def one(cls, names: Iterable[str] = DEFAULT_NAMES) -> "ParamPoly":
        return cls.const(1, names)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """Constant term (the value, if the polynomial is constant)."""
        return self.terms.get((0,) * len(self.names), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            if other.names != self.names:
                # a bare constant is allowed to cross name lists
                if other.is_constant():
                    return ParamPoly.const(other.constant_value(), self.names)
                if self.is_constant():
                    return NotImplemented
                raise ParameterMismatch(f"{self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.const(other, self.names)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, ParamPoly):
                return other.__add__(self)
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return ParamPoly._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, ParamPoly):
                return (-other).__add__(self)
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, ParamPoly):
                return other.__mul__(self)
            return NotImplemented
        if not self.terms or not o.terms:
            return ParamPoly._raw({}, self.names)
        if len(o.terms) == 1:
            (eo, co), = o.terms.items()
            if not any(eo):
                return self.scale(co)
        if len(self.terms) == 1:
            (es, cs), = self.terms.items()
            if not any(es):
                return o.scale(cs)
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ParamPoly._raw({e: c for e, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def scale(self, q) -> "ParamPoly":
        q = as_rational(q)
        if not q:
            return ParamPoly._raw({}, self.names)
        if q == 1:
            return self
        return ParamPoly._raw({e: c * q for e, c in self.terms.items()}, self.names)

    def __truediv__(self, other):
        q = as_rational(other)
        if q == 0:
            raise DivisionByZero("division of a polynomial by zero")
        return self.scale(1 / q)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise RingError("only nonnegative integer powers")
        result = ParamPoly.one(self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation -------------------------------------------------------

    def eval(self, assignment: Mapping[str, Scalar]) -> "ParamPoly":
        """Substitute rationals for some names; other names are kept as is."""
        for k in assignment:
            if k not in self.names:
                raise UnknownParameter(k)
        vals = [(i, as_rational(assignment[n])) for i, n in enumerate(self.names)
                if n in assignment]
        out: Dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in vals:
                if e2[i]:
                    c = c * v ** e2[i]
                    e2[i] = 0
            if c:
                key = tuple(e2)
                out[key] = out.get(key, 0) + c
        return ParamPoly._raw({e: c for e, c in out.items() if c}, self.names)

    def substitute(self, mapping: Mapping[str, "ParamPoly | Scalar"]) -> "ParamPoly":
        """Replace names by polynomials (over this polynomial's name list)."""
        for k in mapping:
            if k not in self.names:
                raise UnknownParameter(k)
        result = ParamPoly.zero(self.names)
        subs = {self.names.index(k): self._coerce(v) for k, v in mapping.items()}
        for e, c in self.terms.items():
            kept = list(e)
            term = ParamPoly.const(c, self.names)
            for i, p in subs.items():
                if kept[i]:
                    term = term * p ** kept[i]
                    kept[i] = 0
            mono = ParamPoly._raw({tuple(kept): Fraction(1)}, self.names)
            result = result + term * mono
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if self.names != other.names:
            if self.is_constant() and other.is_constant():
                return self.constant_value() == other.constant_value()
            return False
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    # -- rendering --------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending degree-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]]))

    def _mono_str(self, e: Exps, mul: str, pow_: str) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}{pow_}{k}")
        return mul.join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self._mono_str(e, "*", "^")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            else:
                body = format_rational(a)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"ParamPoly({self})"

    def to_latex(self) -> str:
        latex_names = {"s": "s", "l1": r"\lambda_1", "l2": r"\lambda_2"}
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            parts = []
            for name, k in zip(self.names, e):
                nm = latex_names.get(name, name)
                if k == 1:
                    parts.append(nm)
                elif k > 1:
                    parts.append(f"{nm}^{{{k}}}")
            mono = " ".join(parts)
            a = abs(c)
            if a.denominator == 1:
                coef = str(a.numerator)
            else:
                coef = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            body = mono if (mono and a == 1) else (f"{coef} {mono}".strip() if mono else coef)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    @classmethod
    def parse(cls, text: str, names: Iterable[str] = DEFAULT_NAMES) -> "ParamPoly":
        """Parse the output format of ``str()`` (sums of ``coef*name^k`` terms)."""
        names = tuple(names)
        src = text.replace(" ", "")
        if not src:
            raise RingError("empty polynomial text")
        if src[0] not in "+-":
            src = "+" + src
        result = cls.zero(names)
        for sign, body in re.findall(r"([+-])([^+-]+)", src):
            term = cls.const(-1 if sign == "-" else 1, names)
            for factor in body.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    term = term.scale(Fraction(factor))
                    continue
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(\^(\d+))?", factor)
                if not m:
                    raise RingError(f"cannot parse factor {factor!r} in {text!r}")
                term = term * cls.var(m.group(1), names) ** int(m.group(3) or 1)
            result = result + term
        return result


def ppoly(value, names: Iterable[str] = DEFAULT_NAMES) -> ParamPoly:
    """Coerce ints, Fractions, ``"p/q"`` strings or polynomials to a ParamPoly."""
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, str):
        return ParamPoly.parse(value, names)
    return ParamPoly.const(value, names)


def ppoly_arith(a: ParamPoly, b, op: str) -> ParamPoly:
    if op == "neg":
        return -a
    if op == "scale":
        return a.scale(b)
    if isinstance(b, ParamPoly) and a.names != b.names:
        raise ParameterMismatch(f"{a.names} vs {b.names}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def ppoly_eval(p: ParamPoly, assignment: Mapping[str, Scalar]) -> ParamPoly:
    return p.eval(assignment)


def symbols(*wanted: str, names: Iterable[str] | None = None):
    """Return ParamPoly variables; the name list defaults to ``wanted`` itself."""
    names = tuple(names) if names is not None else tuple(wanted)
    vs = tuple(ParamPoly.var(w, names) for w in wanted)
    return vs if len(vs) != 1 else vs[0]
