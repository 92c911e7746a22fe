from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl3fmethod.fmethod import (ALPHA, RHO, FamilyTag, MChar, RegimeMismatch, TPoly, Weight3,
                                annihilates, build_operator, build_verma_hom, classify,
                                compose_homs, dpi_star, dpi_star_hat, fsystem_solve,
                                fsystem_verify, identity_hom, link_check, ma_match, mu_lambda,
                                p_family, reflect, reflect_word, sol_generator, tsat_matrix,
                                verify_factorization)
from sl3fmethod.fmethod.construct import ParameterChainMismatch
from sl3fmethod.fmethod.params import InvalidFamily, M_ELEMENTS, NonRationalInput, ParamError
from sl3fmethod.pbw import UEnv, dLhat_realize, dR_generators, fc_forward, is_singular, symmetrize
from sl3fmethod.ring import ParamPoly
from sl3fmethod.weyl import ZETA, WeylElement, symb0, weyl_act, weyl_mul

F = Fraction
N1, N2, N3 = UEnv.gen(0), UEnv.gen(1), UEnv.gen(2)
l1, l2, s = ParamPoly.var("l1"), ParamPoly.var("l2"), ParamPoly.var("s")
D1, D2, D3 = dR_generators()


def zpoly(d):
    return WeylElement.polynomial(d)


# -- characters and weights ----------------------------------------------------

def test_character_table():
    table = {(1, 1): (1, 1, 1, 1), (1, -1): (1, -1, -1, 1),
             (-1, 1): (1, -1, 1, -1), (-1, -1): (1, 1, -1, -1)}
    for pair, row in table.items():
        chi = MChar(*pair)
        assert tuple(chi.at(f"m{i}") for i in range(4)) == row
    a, b = MChar(1, -1), MChar(-1, -1)
    for m in M_ELEMENTS.values():
        assert (a * b)(m) == a(m) * b(m)
    assert str(MChar.parse("+,-")) == "+,-"


def test_weights():
    assert mu_lambda((0, 0)) == RHO
    assert reflect_word(RHO, ("alpha", "beta", "alpha")) == -RHO
    w = mu_lambda((l1, l2))
    assert (w.v[0] + w.v[1] + w.v[2]).is_zero()
    assert reflect(Weight3(1, 2, -3), "gamma") == Weight3(-3, 2, 1)
    with pytest.raises(ParamError):
        Weight3(1, 1, 1)


def test_link_check():
    assert link_check(RHO, -RHO) == ("alpha", "beta", "alpha")
    assert link_check(RHO, reflect(RHO, "alpha")) == ("alpha",)
    w = Weight3(F(1, 2), 0, F(-1, 2))
    assert link_check(w, reflect(w, "alpha")) is None
    assert ALPHA.pair(ALPHA) == 2


# -- classification ------------------------------------------------------------

def test_classify_examples():
    pp = MChar(1, 1)
    assert classify(pp, MChar(1, -1), (0, 0), (2, -1)) == [FamilyTag.a1(1, 0)]
    assert classify(pp, pp, (F(1, 3), F(1, 5)), (F(1, 3), F(1, 5))) == \
        [FamilyTag.identity((F(1, 3), F(1, 5)))]
    assert classify(pp, MChar(-1, -1), (F(1, 2), 0), (0, 0)) == []
    with pytest.raises(NonRationalInput):
        classify(pp, pp, (s, 0), (0, 0))


@pytest.mark.parametrize("k", range(1, 5))
def test_degenerate_overlap(k):
    eps = MChar(1, -1)
    delta = eps.twist(k, k)
    tags = classify(eps, delta, (1 - k, 1), (1, 1 + k))
    assert set(tags) == {FamilyTag.bplus(k, k), FamilyTag.c(k, k)}
    assert sol_generator(FamilyTag.bplus(k, k)) == sol_generator(FamilyTag.c(k, k))
    assert sol_generator(FamilyTag.bminus(k, k)) == sol_generator(FamilyTag.c(k, -k))


def test_ma_match():
    pp = MChar(1, 1)
    assert ma_match(pp, pp, (0, 0), (0, 0)) == [(0, 0)]
    assert ma_match(pp, MChar(1, -1), (0, 0), (0, 3)) == [(1, 2)]
    assert ma_match(pp, pp, (0, 0), (F(1, 2), 0)) == []


def test_family_validation():
    with pytest.raises(InvalidFamily):
        FamilyTag("Bplus", 0, 1)
    with pytest.raises(InvalidFamily):
        FamilyTag("A1", 2, s=s)
    assert FamilyTag.bplus(2, 3).order() == 5
    assert FamilyTag.c(3).to_json() == {"tag": "C", "k": 3, "s": "s"}


# -- operators and the F-system ------------------------------------------------

def test_dpi_operators():
    x1, x2, x3 = (WeylElement.var(i) for i in (1, 2, 3))
    d1, d2, d3 = (WeylElement.d(i) for i in (1, 2, 3))
    h, q = F(1, 2), F(1, 4)
    want1 = (x1 * WeylElement.const(2 - l1) + x1 * x1 * d1 - ((x1 * x2 - 2 * x3) * d2).scale(h)
             + ((x1 * x1 * x2 + 2 * (x1 * x3)) * d3).scale(q))
    assert dpi_star(1, (l1, l2)) == want1
    zeta_op = weyl_mul(-WeylElement.var(1, space=ZETA), dpi_star_hat(1, (l1, l2)))
    assert weyl_act(zeta_op, WeylElement.polynomial({(0, 0, 0): 1})).is_zero()
    # the zeroth-order part of dpi(N1+) vanishes at lambda_1 = 2
    assert dpi_star(1, (2, l2)).coeff((1, 0, 0), (0, 0, 0)).is_zero()


def test_tsat_trivial_block():
    assert tsat_matrix(0, 0, 1, (l1, l2)) == [[0]]
    assert tsat_matrix(0, 0, 2, (l1, l2)) == [[0]]


def test_solver_examples():
    assert fsystem_solve(2, 0, (-1, F(7, 3))) == (1, TPoly([1]))
    assert fsystem_solve(1, 2, (0, 0)) == (1, TPoly([1, 1]))
    assert fsystem_solve(1, 2, (F(1, 7), 0)) == (0, None)


def test_symbolic_cayley_examples():
    assert fsystem_verify(1)
    assert fsystem_verify(2, TPoly([1, s, (s * s - 2) / 4]))
    assert not fsystem_verify(2, TPoly([1, s, (s * s - 2) / 4 + 1]))


def test_family_polynomials():
    assert p_family(FamilyTag.bplus(1, 2)) == TPoly([1, 1])
    assert p_family(FamilyTag.bminus(1, 2)) == TPoly([1, -1])
    assert p_family(FamilyTag.c(2, 0)) == TPoly([1, 0, F(-1, 2)])
    assert sol_generator(FamilyTag.a1(2)) == zpoly({(2, 0, 0): 1})
    assert sol_generator(FamilyTag.c(2, 0)) == zpoly({(2, 2, 0): 1, (0, 0, 2): F(-1, 2)})
    assert sol_generator(FamilyTag.bplus(1, 2)) == zpoly({(1, 2, 0): 1, (0, 1, 1): 1})


def test_operator_examples():
    x2, d1, d3 = WeylElement.var(2), WeylElement.d(1), WeylElement.d(3)
    assert build_operator(FamilyTag.a1(1)) == d1 + (x2 * d3).scale(F(1, 2))
    # Cayley operator for k = 1: s(D1 D2) + (s/2) D3
    sym = (weyl_mul(D1, D2) + weyl_mul(D2, D1)).scale(F(1, 2))
    assert build_operator(FamilyTag.c(1)) == sym + D3.scale(s / 2)
    # B+(2,1): D_1 (s(D1 D2) + 3/2 D3) = D2 D1^2
    assert build_operator(FamilyTag.bplus(2, 1)) == weyl_mul(D1, sym + D3.scale(F(3, 2)))
    assert build_operator(FamilyTag.bplus(2, 1)) == weyl_mul(D2, weyl_mul(D1, D1))


@pytest.mark.parametrize("tag", [FamilyTag.a1(3), FamilyTag.a2(2), FamilyTag.bplus(2, 3),
                                 FamilyTag.bminus(3, 1), FamilyTag.c(3)])
def test_operator_order_and_symbol(tag):
    op = build_operator(tag)
    nu, lam = tag.nu(), tag.lam()
    assert op.order() == (nu[0] + nu[1] - lam[0] - lam[1]).constant_value()
    assert symb0(op) == sol_generator(tag)


def test_verma_hom_examples():
    h = build_verma_hom(FamilyTag.a1(2))
    assert h.body == N1 * N1
    assert h.source_weight() == reflect(h.target_weight(), "alpha")
    assert h.delta == MChar(1, 1).twist(0, 2)
    c = build_verma_hom(FamilyTag.c(2, 0))
    assert c.lam == (0, 0)
    assert c.body == symmetrize(2, 2, 0) - (N3 * N3).scale(F(1, 2))
    assert c.is_singular()


def _weight_space(k, l):
    return [UEnv.nminus(k - c, l - c, c) for c in range(min(k, l) + 1)]


@pytest.mark.parametrize("tag", [FamilyTag.bplus(2, 3), FamilyTag.c(3), FamilyTag.bminus(2, 2),
                                 FamilyTag.a1(3)])
def test_singularity_is_fragile(tag):
    hom = build_verma_hom(tag)
    assert hom.is_singular()
    for mono in _weight_space(*tag.degrees()):
        bumped = hom.body + mono
        if len(hom.body.terms) == 1 and bumped.scale(F(1, 2)) == hom.body:
            continue  # a pure rescaling stays singular
        assert not is_singular(hom.vector.with_body(bumped))


# -- composition and factorization ---------------------------------------------

def test_composition_order():
    outer = build_verma_hom(FamilyTag.a1(2, 2))
    inner = build_verma_hom(FamilyTag.a2(1, outer.nu[0]), outer.delta)
    comp = compose_homs(outer, inner)
    assert comp.body == N2 * N1 * N1
    assert comp.body != N1 * N1 * N2
    assert compose_homs(identity_hom(outer.lam), outer).body == outer.body
    assert fc_forward(comp.body) == weyl_act(dLhat_realize(inner.body), fc_forward(outer.body))
    with pytest.raises(ParameterChainMismatch):
        compose_homs(outer, build_verma_hom(FamilyTag.a2(1, 0)))


def test_worked_example_first():
    # phi_c(0;2) = phi_1(1) o phi_2(2) o phi_1(1) = phi_2(1) o phi_1(2) o phi_2(1) at lambda = (0,0)
    want = symmetrize(2, 2, 0) - (N3 * N3).scale(F(1, 2))
    assert build_verma_hom(FamilyTag.c(2, 0)).body == want
    assert N1 * N2 * N2 * N1 == want
    assert N2 * N1 * N1 * N2 == want


def test_worked_example_second():
    # phi_c(3;1) o phi_1(1) = phi_+(2,1) = phi_1(2) o phi_2(1)
    plus = build_verma_hom(FamilyTag.bplus(2, 1))
    assert plus.body == N2 * N1 * N1
    assert plus.body == symmetrize(2, 1, 0) + symmetrize(1, 0, 1)
    cay = build_verma_hom(FamilyTag.c(1, 3))
    assert cay.lam == plus.lam
    a1 = build_verma_hom(FamilyTag.a1(1, cay.nu[1]), cay.delta)
    assert compose_homs(cay, a1).body == plus.body


@pytest.mark.parametrize("case,k,l", [(1, 1, 2), (2, 3, 1), (3, 3, 1), (4, 1, 3), (5, 2, 2), (6, 3, 3)])
def test_factorization_cases(case, k, l, schema):
    rep = verify_factorization(case, k, l)
    assert rep.ok, rep.failures()
    schema("factorization_report", rep.to_json())
    kinds = {c.kind for c in rep.identities}
    assert {"hom", "operator", "weight", "character"} <= kinds


def test_regime_mismatch():
    with pytest.raises(RegimeMismatch):
        verify_factorization(1, 2, 1)
    with pytest.raises(RegimeMismatch):
        verify_factorization(5, 1, 2)
    with pytest.raises(RegimeMismatch):
        verify_factorization(7, 1, 1)


@given(st.integers(1, 4), st.integers(1, 4))
def test_duality(k, l):
    lam = (1 - k, 1 - l + k)
    dim, p = fsystem_solve(k, l, lam)
    dim2, q = fsystem_solve(l, k, (lam[1], lam[0]))
    assert dim == dim2 == 1 and q == p.reflect()
    assert annihilates(l, k, (lam[1], lam[0]), p.reflect())
