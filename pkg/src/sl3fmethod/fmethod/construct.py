"""Operators and Verma-module homomorphisms attached to family tags."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from ..pbw import UEnv, VermaVector, dR_realize, fc_inverse, is_singular
from ..ring import ParamPoly, ppoly
from ..weyl import WeylElement
from .families import sol_generator
from .params import MChar, FamilyTag, mu_lambda, Weight3


class ConstructionError(ValueError):
    pass


class ParameterChainMismatch(ConstructionError):
    pass


@lru_cache(maxsize=None)
def singular_body(tag: FamilyTag) -> UEnv:
    """Symmetrized preimage of the F-system generator (the singular vector in U(n_-))."""
    return fc_inverse(sol_generator(tag))


@lru_cache(maxsize=None)
def build_operator(tag: FamilyTag) -> WeylElement:
    """The differential intertwining operator of the family, on the x side."""
    return dR_realize(singular_body(tag))


@dataclass(frozen=True)
class VermaHom:
    """A homomorphism M(-nu)^delta -> M(-lam)^eps given by its singular vector.

    ``tag`` is None for composites.
    """

    vector: VermaVector
    eps: MChar
    lam: Tuple[ParamPoly, ParamPoly]
    delta: MChar
    nu: Tuple[ParamPoly, ParamPoly]
    tag: Optional[FamilyTag] = None
    label: str = ""

    @property
    def body(self) -> UEnv:
        return self.vector.body

    def target_weight(self) -> Weight3:
        return mu_lambda(self.lam)

    def source_weight(self) -> Weight3:
        return mu_lambda(self.nu)

    def source(self) -> VermaVector:
        """Generating vector of the source Verma module."""
        return VermaVector.highest((-self.nu[0], -self.nu[1]), self.delta.pair())

    def is_singular(self) -> bool:
        return is_singular(self.vector)


def build_verma_hom(tag: FamilyTag, eps: MChar = MChar(1, 1)) -> VermaHom:
    lam = tag.lam()
    vec = VermaVector(singular_body(tag), (-lam[0], -lam[1]), eps.pair())
    return VermaHom(vec, eps, lam, tag.delta(eps), tag.nu(), tag, hom_label(tag))


def identity_hom(lam, eps: MChar = MChar(1, 1)) -> VermaHom:
    return build_verma_hom(FamilyTag.identity(tuple(ppoly(x) for x in lam)), eps)


def compose_homs(outer: VermaHom, inner: VermaHom) -> VermaHom:
    """outer o inner; the composite singular vector is inner.body * outer.body."""
    if tuple(inner.lam) != tuple(outer.nu) or inner.eps != outer.delta:
        raise ParameterChainMismatch(
            f"inner target ({inner.eps}; {inner.lam[0]}, {inner.lam[1]}) does not match "
            f"outer source ({outer.delta}; {outer.nu[0]}, {outer.nu[1]})")
    body = inner.body * outer.body
    vec = VermaVector(body, outer.vector.hw, outer.vector.mchar)
    return VermaHom(vec, outer.eps, outer.lam, inner.delta, inner.nu, None,
                    f"{outer.label} o {inner.label}")


def hom_label(tag: FamilyTag) -> str:
    v = tag.variant
    if v == "Identity":
        return "id"
    if v == "A1":
        return f"phi_1({tag.k})"
    if v == "A2":
        return f"phi_2({tag.k})"
    if v == "Bplus":
        return f"phi_+ ({tag.k},{tag.l})"
    if v == "Bminus":
        return f"phi_- ({tag.k},{tag.l})"
    return f"phi_c ({tag.s};{tag.k})"


def operator_label(tag: FamilyTag) -> str:
    v = tag.variant
    if v == "Identity":
        return "id"
    if v == "A1":
        return f"D_1^{tag.k}"
    if v == "A2":
        return f"D_2^{tag.k}"
    if v == "Bplus":
        return f"D_+ ({tag.k},{tag.l})"
    if v == "Bminus":
        return f"D_- ({tag.k},{tag.l})"
    return f"D_c ({tag.s};{tag.k})"
