"""Characters, weights, family tags and parameter classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from ..ring import ParamPoly, ppoly


class ParamError(ValueError):
    pass


class NonRationalInput(ParamError):
    pass


class InvalidFamily(ParamError):
    pass


def sign_pow(k: int) -> int:
    """(-1)^k for an integer k."""
    return -1 if k % 2 else 1


# -- M characters ------------------------------------------------------------

M_ELEMENTS = {
    "m0": (1, 1, 1),
    "m1": (-1, 1, -1),
    "m2": (1, -1, -1),
    "m3": (-1, -1, 1),
}


@dataclass(frozen=True)
class MChar:
    """Character (eps1, eps2) of M; diag(b) -> |b1|_eps1 * |b3|_eps2."""

    e1: int = 1
    e2: int = 1

    def __post_init__(self):
        if self.e1 not in (1, -1) or self.e2 not in (1, -1):
            raise ParamError(f"character entries must be +-1, got {(self.e1, self.e2)}")

    @classmethod
    def parse(cls, text: str) -> "MChar":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2 or any(p not in ("+", "-", "+1", "-1", "1") for p in parts):
            raise ParamError(f"cannot parse character {text!r}")
        return cls(*(-1 if p.startswith("-") else 1 for p in parts))

    def __call__(self, b: Tuple[int, int, int]) -> int:
        b1, _, b3 = b
        return (b1 if self.e1 == -1 else 1) * (b3 if self.e2 == -1 else 1)

    def at(self, name: str) -> int:
        return self(M_ELEMENTS[name])

    def __mul__(self, other: "MChar") -> "MChar":
        return MChar(self.e1 * other.e1, self.e2 * other.e2)

    def twist(self, a: int, b: int) -> "MChar":
        """Multiply by ((-1)^a, (-1)^b)."""
        return MChar(self.e1 * sign_pow(a), self.e2 * sign_pow(b))

    def pair(self) -> Tuple[int, int]:
        return (self.e1, self.e2)

    def __str__(self):
        return ",".join("+" if e == 1 else "-" for e in (self.e1, self.e2))


# -- weights -----------------------------------------------------------------

@dataclass(frozen=True)
class Weight3:
    """Element (v1, v2, v3) of the Cartan dual with v1 + v2 + v3 = 0."""

    v: Tuple[ParamPoly, ParamPoly, ParamPoly]

    def __init__(self, v1, v2=None, v3=None):
        if v2 is None:
            v1, v2, v3 = v1
        vals = tuple(ppoly(x) for x in (v1, v2, v3))
        if not (vals[0] + vals[1] + vals[2]).is_zero():
            raise ParamError(f"weight coordinates must sum to 0: {vals}")
        object.__setattr__(self, "v", vals)

    def pair(self, other: "Weight3") -> ParamPoly:
        return sum((a * b for a, b in zip(self.v, other.v)), ParamPoly.zero())

    def __sub__(self, other):
        return Weight3(*(a - b for a, b in zip(self.v, other.v)))

    def __add__(self, other):
        return Weight3(*(a + b for a, b in zip(self.v, other.v)))

    def scale(self, c) -> "Weight3":
        return Weight3(*(a * ppoly(c) for a in self.v))

    def __neg__(self):
        return self.scale(-1)

    def is_rational(self) -> bool:
        return all(x.is_constant() for x in self.v)

    def values(self) -> Tuple[Fraction, Fraction, Fraction]:
        if not self.is_rational():
            raise NonRationalInput("weight is symbolic")
        return tuple(x.constant_value() for x in self.v)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.v) + ")"


ALPHA = Weight3(1, -1, 0)
BETA = Weight3(0, 1, -1)
GAMMA = Weight3(1, 0, -1)
RHO = Weight3(1, 0, -1)
ROOTS = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}
ROOT_ORDER = ("alpha", "beta", "gamma")
_SWAPS = {"alpha": (1, 0, 2), "beta": (0, 2, 1), "gamma": (2, 1, 0)}


def reflect(w: Weight3, root: str) -> Weight3:
    """Root reflection: s_alpha swaps v1,v2; s_beta swaps v2,v3; s_gamma swaps v1,v3."""
    perm = _SWAPS[root]
    return Weight3(*(w.v[i] for i in perm))


def reflect_word(w: Weight3, word: Sequence[str]) -> Weight3:
    """Apply reflections left to right: word (a, b) gives s_b s_a w."""
    for r in word:
        w = reflect(w, r)
    return w


def mu_lambda(lam) -> Weight3:
    l1, l2 = ppoly(lam[0]), ppoly(lam[1])
    third = Fraction(1, 3)
    return Weight3((-(2 * l1 + l2 - 3)).scale(third),
                   (l1 - l2).scale(third),
                   (l1 + 2 * l2 - 3).scale(third))


def lambda_from_weight(w: Weight3) -> Tuple[ParamPoly, ParamPoly]:
    """Inverse of mu_lambda: lambda_i = 1 - <mu, simple root i>."""
    return (1 - w.pair(ALPHA), 1 - w.pair(BETA))


def link_check(lam_wt: Weight3, nu_wt: Weight3, max_len: int = 3) -> Optional[Tuple[str, ...]]:
    """First root sequence (in lexicographic order) that links lam_wt to nu_wt."""
    lam_v = lam_wt.values()
    nu_v = nu_wt.values()
    candidates = sorted(seq for n in range(max_len + 1)
                        for seq in product(range(3), repeat=n))
    for seq in candidates:
        cur = lam_v
        ok = True
        for r in seq:
            root = ROOTS[ROOT_ORDER[r]].values()
            p = sum(a * b for a, b in zip(cur, root))
            if p.denominator != 1 or p < 0:
                ok = False
                break
            cur = tuple(c - p * x for c, x in zip(cur, root))
        if ok and cur == nu_v:
            return tuple(ROOT_ORDER[r] for r in seq)
    return None


# -- families ------------------------------------------------------------------

IDENTITY, A1, A2, BPLUS, BMINUS, C = "Identity", "A1", "A2", "Bplus", "Bminus", "C"
VARIANTS = (IDENTITY, A1, A2, BPLUS, BMINUS, C)


def _as_int(x) -> Optional[int]:
    x = ppoly(x)
    if not x.is_constant():
        return None
    q = x.constant_value()
    return q.numerator if q.denominator == 1 else None


@dataclass(frozen=True)
class FamilyTag:
    """One of the operator families with its parameters.

    ``lam_free`` carries the unconstrained component of lambda for A1 (lambda_2),
    A2 (lambda_1) and both components for Identity; it defaults to the symbolic
    names l2, l1.
    """

    variant: str
    k: int = 0
    l: int = 0
    s: Optional[ParamPoly] = None
    lam_free: Optional[Tuple[ParamPoly, ...]] = field(default=None, compare=True)

    def __post_init__(self):
        v = self.variant
        if v not in VARIANTS:
            raise InvalidFamily(f"unknown family {v!r}")
        if v != IDENTITY and (not isinstance(self.k, int) or self.k < 1):
            raise InvalidFamily(f"{v} needs a positive integer k, got {self.k!r}")
        if v in (BPLUS, BMINUS) and (not isinstance(self.l, int) or self.l < 1):
            raise InvalidFamily(f"{v} needs a positive integer l, got {self.l!r}")
        if v == C:
            object.__setattr__(self, "s", ppoly(self.s if self.s is not None else ParamPoly.var("s")))
        elif self.s is not None:
            raise InvalidFamily(f"{v} takes no s parameter")
        if v in (A1, A2):
            free = self.lam_free
            if free is None:
                free = (ParamPoly.var("l2" if v == A1 else "l1"),)
            object.__setattr__(self, "lam_free", tuple(ppoly(x) for x in free))
        elif v == IDENTITY:
            free = self.lam_free or (ParamPoly.var("l1"), ParamPoly.var("l2"))
            object.__setattr__(self, "lam_free", tuple(ppoly(x) for x in free))
        elif self.lam_free is not None:
            raise InvalidFamily(f"{v} has no free lambda component")
        # revalidate against the defining equations
        lam, nu = self.lam(), self.nu()
        if v == A1 and _as_int(1 - lam[0]) != self.k:
            raise InvalidFamily("A1 requires lambda_1 = 1 - k")
        if v == C and _as_int(2 - lam[0] - lam[1]) != self.k:
            raise InvalidFamily("C requires lambda_1 + lambda_2 = 2 - k")
        if v == BPLUS and (_as_int(1 - lam[0]), _as_int(2 - lam[0] - lam[1])) != (self.k, self.l):
            raise InvalidFamily("Bplus parameters inconsistent")
        if v == BMINUS and (_as_int(2 - lam[0] - lam[1]), _as_int(1 - lam[1])) != (self.k, self.l):
            raise InvalidFamily("Bminus parameters inconsistent")
        _ = nu

    # constructors
    @classmethod
    def identity(cls, lam=None):
        return cls(IDENTITY, lam_free=None if lam is None else tuple(lam))

    @classmethod
    def a1(cls, k: int, lam2=None):
        return cls(A1, k, lam_free=None if lam2 is None else (lam2,))

    @classmethod
    def a2(cls, k: int, lam1=None):
        return cls(A2, k, lam_free=None if lam1 is None else (lam1,))

    @classmethod
    def bplus(cls, k: int, l: int):
        return cls(BPLUS, k, l)

    @classmethod
    def bminus(cls, k: int, l: int):
        return cls(BMINUS, k, l)

    @classmethod
    def c(cls, k: int, s="s"):
        return cls(C, k, s=ppoly(s))

    # parameters
    def lam(self) -> Tuple[ParamPoly, ParamPoly]:
        k, l = self.k, self.l
        one = ParamPoly.one()
        if self.variant == IDENTITY:
            return self.lam_free
        if self.variant == A1:
            return (one * (1 - k), self.lam_free[0])
        if self.variant == A2:
            return (self.lam_free[0], one * (1 - k))
        if self.variant == BPLUS:
            return (one * (1 - k), one * (1 - l + k))
        if self.variant == BMINUS:
            return (one * (1 - k + l), one * (1 - l))
        s = self.s
        return ((2 - k - s) / 2, (2 - k + s) / 2)

    def nu(self) -> Tuple[ParamPoly, ParamPoly]:
        l1, l2 = self.lam()
        v = self.variant
        if v == IDENTITY:
            return (l1, l2)
        if v == A1:
            return (2 - l1, l1 + l2 - 1)
        if v == A2:
            return (l1 + l2 - 1, 2 - l2)
        if v == BPLUS:
            return (l2, 3 - l1 - l2)
        if v == BMINUS:
            return (3 - l1 - l2, l1)
        return (2 - l2, 2 - l1)

    def delta(self, eps: MChar) -> MChar:
        v, k, l = self.variant, self.k, self.l
        if v == IDENTITY:
            return eps
        if v == A1:
            return eps.twist(0, k)
        if v == A2:
            return eps.twist(k, 0)
        if v in (BPLUS, BMINUS):
            return eps.twist(l, k)
        return eps.twist(k, k)

    def degrees(self) -> Tuple[int, int]:
        """(k, l) of the F-system block Pol(k, l) the generator lives in."""
        v = self.variant
        if v == IDENTITY:
            return (0, 0)
        if v == A1:
            return (self.k, 0)
        if v == A2:
            return (0, self.k)
        if v in (BPLUS, BMINUS):
            return (self.k, self.l)
        return (self.k, self.k)

    def order(self) -> int:
        a, b = self.degrees()
        return a + b

    def to_json(self) -> dict:
        out = {"tag": self.variant}
        if self.variant != IDENTITY:
            out["k"] = self.k
        if self.variant in (BPLUS, BMINUS):
            out["l"] = self.l
        if self.variant == C:
            out["s"] = str(self.s)
        return out

    def label(self) -> str:
        v = self.variant
        if v == IDENTITY:
            return "Identity"
        if v in (A1, A2):
            return f"{v}({self.k})"
        if v in (BPLUS, BMINUS):
            return f"{v}({self.k},{self.l})"
        return f"C({self.k}; s={self.s})"

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class InducedParams:
    eps: MChar
    lam: Tuple[ParamPoly, ParamPoly]

    def __init__(self, eps: MChar, lam):
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "lam", (ppoly(lam[0]), ppoly(lam[1])))


def _rational_pair(pair, what: str) -> Tuple[Fraction, Fraction]:
    vals = tuple(ppoly(x) for x in pair)
    if not all(v.is_constant() for v in vals):
        raise NonRationalInput(f"{what} must be rational; use c_family_lambda for symbolic s")
    return tuple(v.constant_value() for v in vals)


def _nonneg_int(q: Fraction) -> Optional[int]:
    if q.denominator == 1 and q >= 0:
        return q.numerator
    return None


def classify(eps: MChar, delta: MChar, lam, nu) -> List[FamilyTag]:
    """All family tags whose defining equations hold (empty means zero space)."""
    l1, l2 = _rational_pair(lam, "lambda")
    n1, n2 = _rational_pair(nu, "nu")
    found: List[FamilyTag] = []

    def matches(tag: FamilyTag) -> bool:
        tn = tuple(x.constant_value() for x in tag.nu())
        return tn == (n1, n2) and tag.delta(eps) == delta

    if (delta, (n1, n2)) == (eps, (l1, l2)):
        found.append(FamilyTag.identity((l1, l2)))
    k = _nonneg_int(1 - l1)
    if k and k >= 1:
        tag = FamilyTag.a1(k, l2)
        if matches(tag):
            found.append(tag)
    k = _nonneg_int(1 - l2)
    if k and k >= 1:
        tag = FamilyTag.a2(k, l1)
        if matches(tag):
            found.append(tag)
    k, l = _nonneg_int(1 - l1), _nonneg_int(2 - l1 - l2)
    if k and l:
        tag = FamilyTag.bplus(k, l)
        if matches(tag):
            found.append(tag)
    k, l = _nonneg_int(2 - l1 - l2), _nonneg_int(1 - l2)
    if k and l:
        tag = FamilyTag.bminus(k, l)
        if matches(tag):
            found.append(tag)
    k = _nonneg_int(2 - l1 - l2)
    if k:
        tag = FamilyTag.c(k, l2 - l1)
        if matches(tag):
            found.append(tag)
    return found


def c_family_lambda(k: int, s="s") -> Tuple[ParamPoly, ParamPoly]:
    """Symbolic entry point for the continuous family: ((2-k-s)/2, (2-k+s)/2)."""
    return FamilyTag.c(k, s).lam()


def ma_match(eps: MChar, delta: MChar, lam, nu) -> List[Tuple[int, int]]:
    """(k, l) with nu - lam = (2k - l, 2l - k) and matching character twist."""
    l1, l2 = _rational_pair(lam, "lambda")
    n1, n2 = _rational_pair(nu, "nu")
    d1, d2 = n1 - l1, n2 - l2
    k = _nonneg_int((2 * d1 + d2) / 3)
    l = _nonneg_int((d1 + 2 * d2) / 3)
    if k is None or l is None:
        return []
    if (eps * delta) != MChar(sign_pow(l), sign_pow(k)):
        return []
    return [(k, l)]
