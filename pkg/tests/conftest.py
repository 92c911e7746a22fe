import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sl3fmethod.pbw import UEnv
from sl3fmethod.ring import ParamPoly
from sl3fmethod.weyl import WeylElement

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def param_polys(draw, max_terms=4, max_deg=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(3))
        terms[e] = draw(small_fracs)
    return ParamPoly(terms)


@st.composite
def weyl_elements(draw, max_terms=3, max_deg=2, space="x"):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = tuple(draw(st.integers(0, max_deg)) for _ in range(3))
        d = tuple(draw(st.integers(0, max_deg)) for _ in range(3))
        terms[(m, d)] = ParamPoly.const(draw(small_fracs))
    return WeylElement(3, space, terms)


@st.composite
def nminus_elements(draw, max_terms=3, max_deg=5):
    u = UEnv.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        a = draw(st.integers(0, max_deg))
        b = draw(st.integers(0, max_deg - a))
        c = draw(st.integers(0, max_deg - a - b))
        u = u + UEnv.nminus(a, b, c, draw(small_fracs))
    return u


@pytest.fixture(scope="session")
def schema():
    import jsonschema

    def validate(name, obj):
        data = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
        jsonschema.validate(obj, data)
    return validate
