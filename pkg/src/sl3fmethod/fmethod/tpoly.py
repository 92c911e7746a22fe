"""One-variable polynomials p(t) with ParamPoly coefficients."""

from __future__ import annotations

from typing import Iterable, List, Sequence

from ..ring import ParamPoly, ppoly


class TPoly:
    """Coefficient list ``[a0, a1, ...]``; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs: List[ParamPoly] = [ppoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> ParamPoly:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else ParamPoly.zero()

    def padded(self, n: int) -> List[ParamPoly]:
        return [self[m] for m in range(n)]

    def reflect(self) -> "TPoly":
        """p(t) -> p(-t)."""
        return TPoly(c if m % 2 == 0 else -c for m, c in enumerate(self.coeffs))

    def eval_params(self, assignment) -> "TPoly":
        return TPoly(c.eval(assignment) for c in self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self[m] + other[m] for m in range(n))

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for m, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if m == 0 else ("t" if m == 1 else f"t^{m}")
            if c.is_constant():
                q = c.constant_value()
                neg, a = q < 0, abs(q)
                cs = "" if (a == 1 and mono) else (str(a.numerator) if a.denominator == 1
                                                  else f"{a.numerator}/{a.denominator}")
            else:
                neg, cs = False, f"({c})"
            body = "*".join(p for p in (cs, mono) if p)
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"TPoly({self})"

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]


def tpoly(coeffs: Sequence) -> TPoly:
    return TPoly(coeffs)
