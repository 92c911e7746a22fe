from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl3fmethod.pbw import (H1, H2, N1M, N1P, N2M, N2P, N3M, N3P, MATRICES,
                            BasisDecompositionFailure, DegreeLimitExceeded, NotInNilradical,
                            UEnv, VermaVector, bracket, dLhat_realize, dR_generators,
                            dR_realize, decompose, fc_forward, fc_inverse, is_singular,
                            pbw_mul, symmetrize, verma_act)
from sl3fmethod.ring import ParamPoly
from sl3fmethod.weyl import WeylElement, symb0, trun0, weyl_mul

from conftest import nminus_elements, small_fracs

G = [UEnv.gen(i) for i in range(8)]


def lie(a, b):
    return {k: v for k, v in bracket(a, b).items() if v}


def test_bracket_table():
    assert lie(N1M, N2M) == {N3M: -1}
    assert lie(N1P, N1M) == {H1: 1}
    assert lie(H1, N1M) == {N1M: -2}
    assert lie(N1P, N2P) == {N3P: 1}


def test_jacobi_identity_and_antisymmetry():
    for a in range(8):
        for b in range(8):
            assert lie(a, b) == {k: -v for k, v in lie(b, a).items()}
            for c in range(8):
                tot = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for i, f in bracket(y, z).items():
                        for j, g in bracket(x, i).items():
                            tot[j] = tot.get(j, 0) + f * g
                assert all(v == 0 for v in tot.values())


def test_decompose_rejects_trace():
    with pytest.raises(BasisDecompositionFailure):
        decompose(((1, 0, 0), (0, 0, 0), (0, 0, 0)))
    assert decompose(MATRICES[H2]) == {H2: 1}


def test_straightening_examples():
    assert G[N2M] * G[N1M] == G[N1M] * G[N2M] + G[N3M]
    assert G[N1P] * G[N1M] == G[N1M] * G[N1P] + G[H1]


@st.composite
def small_uenv(draw):
    u = UEnv.zero()
    for _ in range(draw(st.integers(1, 2))):
        mono = [0] * 8
        for _ in range(draw(st.integers(0, 3))):
            mono[draw(st.integers(0, 7))] += 1
        u = u + UEnv({tuple(mono): draw(small_fracs)})
    return u


@settings(max_examples=40)
@given(small_uenv(), small_uenv(), small_uenv())
def test_pbw_associative(a, b, c):
    assert pbw_mul(pbw_mul(a, b), c) == pbw_mul(a, pbw_mul(b, c))


def _brute_symmetrize(a, b, c):
    letters = [N1M] * a + [N2M] * b + [N3M] * c
    words = set(permutations(letters))
    acc = UEnv.zero()
    for w in words:
        term = UEnv.one()
        for g in w:
            term = term * G[g]
        acc = acc + term
    return acc.scale(Fraction(1, len(words)))


@pytest.mark.parametrize("abc", [(1, 1, 0), (2, 1, 0), (1, 1, 1), (2, 2, 0), (2, 1, 2), (3, 2, 1)])
def test_symmetrize_against_brute_force(abc):
    assert symmetrize(*abc) == _brute_symmetrize(*abc)


def test_symmetrize_examples():
    assert symmetrize(1, 1, 0) == G[N1M] * G[N2M] + G[N3M].scale(Fraction(1, 2))
    assert symmetrize(2, 1, 0) + symmetrize(1, 0, 1) == G[N2M] * G[N1M] * G[N1M]


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("FMETHOD_DEGREE_CAP", "3")
    with pytest.raises(DegreeLimitExceeded):
        symmetrize(2, 2, 0)


def test_truncated_realization_of_symmetrized_monomials():
    for a in range(4):
        for b in range(4 - a):
            for c in range(4 - a - b):
                expect = WeylElement.monomial((0, 0, 0), (a, b, c))
                assert trun0(dR_realize(symmetrize(a, b, c))) == expect


def test_realization_generators():
    D1, D2, D3 = dR_generators()
    assert weyl_mul(D1, D2) - weyl_mul(D2, D1) == -D3
    x2, d1, d3 = WeylElement.var(2), WeylElement.d(1), WeylElement.d(3)
    assert D1 == d1 + weyl_mul(x2, d3).scale(Fraction(1, 2))
    with pytest.raises(NotInNilradical):
        dR_realize(G[H1])


@settings(max_examples=40)
@given(nminus_elements(max_deg=3), nminus_elements(max_deg=3))
def test_realizations_are_multiplicative(u, v):
    assert dR_realize(u * v) == weyl_mul(dR_realize(u), dR_realize(v))
    assert dLhat_realize(u * v) == weyl_mul(dLhat_realize(u), dLhat_realize(v))


@settings(max_examples=60)
@given(nminus_elements())
def test_fourier_bridge(u):
    assert fc_forward(u) == symb0(dR_realize(u))


def test_fc_round_trips():
    for a in range(5):
        for b in range(5 - a):
            for c in range(5 - a - b):
                u = UEnv.nminus(a, b, c)
                assert fc_inverse(fc_forward(u)) == u
                z = WeylElement.polynomial({(a, b, c): 1})
                assert fc_forward(fc_inverse(z)) == z


def test_fc_of_a_word():
    u = G[N2M] * G[N1M] * G[N1M]
    assert fc_forward(u) == WeylElement.polynomial({(2, 1, 0): 1, (1, 0, 1): 1})


def test_verma_action():
    mu1 = ParamPoly.var("l1")
    hw = (mu1, ParamPoly.var("l2"))
    top = VermaVector.highest(hw)
    assert verma_act(G[N1P], top).is_zero()
    v = VermaVector(G[N1M], hw)
    assert verma_act(G[H1], v) == v.with_body(G[N1M].scale(mu1 - 2))
    for k in range(1, 6):
        vk = VermaVector(UEnv.nminus(k, 0, 0), hw)
        want = UEnv.nminus(k - 1, 0, 0).scale((mu1 - k + 1) * k)
        assert verma_act(G[N1P], vk).body == want


def test_singular_vectors():
    for k in range(1, 5):
        assert is_singular(VermaVector(UEnv.nminus(k, 0, 0), (k - 1, Fraction(2, 7))))
        assert not is_singular(VermaVector(UEnv.nminus(k, 0, 0), (Fraction(1, 3), 0)))
    assert is_singular(VermaVector.highest((Fraction(1, 3), 5)))
    with pytest.raises(NotInNilradical):
        VermaVector(G[N2P], (0, 0))


@given(nminus_elements())
def test_uenv_json(schema, u):
    data = u.to_json()
    schema("uenv", data)
    assert UEnv.from_json(data) == u
