"""Factorization identities of the homomorphisms and of the dual operators.

Each case lists rows of equal expressions. An expression is a chain of
homomorphisms, outermost first; every chain starts at the case's target
lambda, optionally after walking a ``start`` prefix. Each chain element
carries the diagram node its source should land on, so the weight chain and
the character chain are checked along the way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..pbw import dLhat_realize, fc_forward
from ..ring import ppoly
from ..weyl import WeylElement, weyl_act, weyl_mul
from .construct import (VermaHom, build_operator, build_verma_hom, compose_homs,
                        operator_label)
from .params import MChar, FamilyTag, mu_lambda, reflect_word


class RegimeMismatch(ValueError):
    pass


# a chain element: (family, params, node name)
Step = Tuple[str, Tuple, str]


def _tag_at(step: Step, lam) -> FamilyTag:
    fam, params, _ = step
    if fam == "A1":
        tag = FamilyTag.a1(params[0], lam[1])
    elif fam == "A2":
        tag = FamilyTag.a2(params[0], lam[0])
    elif fam == "P":
        tag = FamilyTag.bplus(*params)
    elif fam == "M":
        tag = FamilyTag.bminus(*params)
    elif fam == "C":
        tag = FamilyTag.c(params[0], params[1])
    else:
        raise ValueError(f"unknown chain family {fam!r}")
    if tuple(tag.lam()) != tuple(lam):
        raise RegimeMismatch(f"{tag} is not defined at lambda = ({lam[0]}, {lam[1]})")
    return tag


@dataclass
class CaseData:
    lam: Tuple[int, int]
    nodes: Dict[str, Tuple[Tuple[str, ...], Tuple[int, int]]]
    rows: List[Tuple[List[Step], List[List[Step]]]]  # (start prefix, expressions)


def case_data(case: int, k: int, l: int) -> CaseData:
    """Parameters, diagram nodes and identity rows for one case."""
    if case not in range(1, 7):
        raise RegimeMismatch(f"unknown case {case}")
    if k < 1 or l < 1:
        raise RegimeMismatch("k and l must be positive")
    need = {1: k < l, 2: k > l, 3: k > l, 4: k < l, 5: k == l, 6: k == l}[case]
    if not need:
        rel = {1: "k<l", 2: "k>l", 3: "k>l", 4: "k<l", 5: "k=l", 6: "k=l"}[case]
        raise RegimeMismatch(f"case {case} needs {rel}, got (k,l)=({k},{l})")

    A = (("alpha",), (0, k))
    BA = (("alpha", "beta"), (l, k))
    B = (("beta",), (l, 0))
    AB = (("beta", "alpha"), (l, k))
    T = ((), (0, 0))

    if case == 1:
        nodes = {"T": T, "A": A, "BA": BA, "G": (("gamma",), (l, l))}
        rows = [
            ([], [[("P", (k, l), "BA")],
                  [("A1", (k,), "A"), ("A2", (l,), "BA")]]),
            ([("A1", (k,), "A")],
             [[("M", (l - k, l), "G")],
              [("A2", (l,), "BA"), ("A1", (l - k,), "G")]]),
            ([], [[("C", (l, 2 * k - l), "G")],
                  [("P", (k, l), "BA"), ("A1", (l - k,), "G")],
                  [("A1", (k,), "A"), ("M", (l - k, l), "G")],
                  [("A1", (k,), "A"), ("A2", (l,), "BA"), ("A1", (l - k,), "G")]]),
        ]
        return CaseData((1 - k, 1 - l + k), nodes, rows)
    if case == 2:
        nodes = {"T": T, "A": A, "BA": BA, "G": (("gamma",), (l, l))}
        rows = [([], [[("C", (l, 2 * k - l), "G"), ("A1", (k - l,), "BA")],
                      [("P", (k, l), "BA")],
                      [("A1", (k,), "A"), ("A2", (l,), "BA")]])]
        return CaseData((1 - k, 1 - l + k), nodes, rows)
    if case == 3:
        nodes = {"T": T, "B": B, "AB": AB, "G": (("gamma",), (k, k))}
        rows = [
            ([("A2", (l,), "B")],
             [[("P", (k, k - l), "G")],
              [("A1", (k,), "AB"), ("A2", (k - l,), "G")]]),
            ([], [[("M", (k, l), "AB")],
                  [("A2", (l,), "B"), ("A1", (k,), "AB")]]),
            ([], [[("C", (k, k - 2 * l), "G")],
                  [("A2", (l,), "B"), ("P", (k, k - l), "G")],
                  [("M", (k, l), "AB"), ("A2", (k - l,), "G")],
                  [("A2", (l,), "B"), ("A1", (k,), "AB"), ("A2", (k - l,), "G")]]),
        ]
        return CaseData((1 - k + l, 1 - l), nodes, rows)
    if case == 4:
        nodes = {"T": T, "B": B, "AB": AB, "G": (("gamma",), (k, k))}
        rows = [([], [[("C", (k, k - 2 * l), "G"), ("A2", (l - k,), "AB")],
                      [("M", (k, l), "AB")],
                      [("A2", (l,), "B"), ("A1", (k,), "AB")]])]
        return CaseData((1 - k + l, 1 - l), nodes, rows)
    if case == 5:
        nodes = {"T": T, "A": A, "G": (("gamma",), (k, k))}
        rows = [([], [[("C", (k, k), "G")],
                      [("P", (k, k), "G")],
                      [("A1", (k,), "A"), ("A2", (k,), "G")]])]
        return CaseData((1 - k, 1), nodes, rows)
    nodes = {"T": T, "B": (("beta",), (k, 0)), "G": (("gamma",), (k, k))}
    rows = [([], [[("C", (k, -k), "G")],
                  [("M", (k, k), "G")],
                  [("A2", (k,), "B"), ("A1", (k,), "G")]])]
    return CaseData((1, 1 - k), nodes, rows)


@dataclass
class Check:
    kind: str
    lhs: str
    rhs: str
    ok: bool

    def to_json(self) -> dict:
        return {"kind": self.kind, "lhs": self.lhs, "rhs": self.rhs,
                "status": "pass" if self.ok else "fail"}


@dataclass
class FactorizationReport:
    case: int
    k: int
    l: int
    identities: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.identities)

    def failures(self) -> List[Check]:
        return [c for c in self.identities if not c.ok]

    def to_json(self) -> dict:
        return {"case": self.case, "k": self.k, "l": self.l,
                "identities": [c.to_json() for c in self.identities]}


def _walk(steps: Sequence[Step], lam, eps: MChar) -> List[VermaHom]:
    homs = []
    for step in steps:
        hom = build_verma_hom(_tag_at(step, lam), eps)
        homs.append(hom)
        lam, eps = hom.nu, hom.delta
    return homs


def _compose_chain(homs: Sequence[VermaHom]) -> VermaHom:
    out = homs[0]
    for h in homs[1:]:
        out = compose_homs(out, h)
    return out


def _operator_of_chain(homs: Sequence[VermaHom]) -> WeylElement:
    # phi_outer o phi_inner has body u_inner u_outer, dual to D_inner o D_outer
    op = WeylElement.one()
    for h in reversed(homs):
        op = weyl_mul(op, build_operator(h.tag))
    return op


def _word_text(word) -> str:
    names = {"alpha": "s_alpha", "beta": "s_beta", "gamma": "s_gamma"}
    return " ".join(names[w] for w in reversed(word)) + (" theta" if word else "theta")


def verify_factorization(case: int, k: int, l: int) -> FactorizationReport:
    data = case_data(case, k, l)
    lam = (ppoly(data.lam[0]), ppoly(data.lam[1]))
    eps = MChar(1, 1)
    theta = mu_lambda(lam)
    report = FactorizationReport(case, k, l)

    for start, exprs in data.rows:
        pre = _walk(start, lam, eps)
        lam0 = pre[-1].nu if pre else lam
        eps0 = pre[-1].delta if pre else eps
        chains = [_walk(e, lam0, eps0) for e in exprs]
        composites = [_compose_chain(c) for c in chains]

        # weight and character chain along every expression
        for expr, chain, comp in zip(exprs, chains, composites):
            for step, hom in zip(list(start) + list(expr), pre + chain):
                word, twist = data.nodes[step[2]]
                want_w = reflect_word(theta, word)
                want_c = MChar(1, 1).twist(*twist)
                report.identities.append(Check(
                    "weight", f"source of {hom.label} in {comp.label}", _word_text(word),
                    hom.source_weight() == want_w))
                report.identities.append(Check(
                    "character", f"source of {hom.label} in {comp.label}", str(want_c),
                    hom.delta == want_c))

        first = composites[0]
        for comp in composites[1:]:
            same = (comp.body == first.body and comp.nu == first.nu
                    and comp.delta == first.delta)
            report.identities.append(Check("hom", first.label, comp.label, same))

        # dual operators: compare compositions of the family operators
        ops = [_operator_of_chain(c) for c in chains]
        op_labels = [" o ".join(operator_label(h.tag) for h in reversed(c)) for c in chains]
        for op, lab in zip(ops[1:], op_labels[1:]):
            report.identities.append(Check("operator", op_labels[0], lab, op == ops[0]))

        # Fourier side of every genuine composite
        for chain, comp in zip(chains, composites):
            if len(chain) < 2:
                continue
            inner = _compose_chain(chain[1:]) if len(chain) > 2 else chain[1]
            lhs = fc_forward(comp.body)
            rhs = weyl_act(dLhat_realize(inner.body), fc_forward(chain[0].body))
            report.identities.append(Check("fourier", f"F_c({comp.label})",
                                           "dLhat(u_inner) . (dLhat(u_outer) . 1)",
                                           lhs == rhs))
    return report


def admissible_cases(max_k: int, max_l: int):
    """All (case, k, l) with 1 <= k <= max_k, 1 <= l <= max_l in the case's regime."""
    out = []
    for case in range(1, 7):
        for k in range(1, max_k + 1):
            for l in range(1, max_l + 1):
                ok = {1: k < l, 2: k > l, 3: k > l, 4: k < l, 5: k == l, 6: k == l}[case]
                if ok:
                    out.append((case, k, l))
    return out
