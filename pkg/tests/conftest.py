import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arcval import Arc, Series

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def arc(*rows, precision=16):
    """Arc from coefficient rows starting at t^1."""
    return Arc.from_coeffs(rows, precision)


CATALOG = {
    "parabola": ([[1], [0, 1]], 16),
    "tilted": ([[1, 1], [0, 0, 1]], 16),
    "high_contact": ([[1], [0, 1, 0, 0, 1]], 16),
    "axis3": ([[1], [], []], 16),
    "cusp": ([[0, 1], [0, 0, 1]], 16),
    "cusp_tangent": ([[0, 1], [0, 1, 1]], 16),
}


def catalog_arc(name):
    rows, prec = CATALOG[name]
    return Arc.from_coeffs(rows, prec)


@pytest.fixture(params=sorted(CATALOG))
def catalog(request):
    return catalog_arc(request.param)


small_rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
small_ints = st.integers(-4, 4)


@st.composite
def series(draw, precision=None, min_order=0, coeffs=small_rationals):
    n = precision or draw(st.integers(3, 10))
    vals = [draw(coeffs) for _ in range(n)]
    for j in range(min(min_order, n)):
        vals[j] = 0
    return Series(vals)


@st.composite
def order_one(draw, precision=None, coeffs=small_rationals):
    s = draw(series(precision, min_order=1, coeffs=coeffs))
    lead = draw(coeffs.filter(bool))
    return Series([0, lead] + list(s.coeffs[2:]))


@st.composite
def units(draw, precision=None, coeffs=small_rationals, lead=None):
    s = draw(series(precision, coeffs=coeffs))
    c0 = lead if lead is not None else draw(coeffs.filter(bool))
    return Series([c0] + list(s.coeffs[1:]))


@st.composite
def arcs(draw, n=None, precision=12, degree=4, coeffs=small_ints, nontrivial=True):
    n = n or draw(st.integers(2, 3))
    rows = [[draw(coeffs) for _ in range(degree)] for _ in range(n)]
    if nontrivial and not any(any(r) for r in rows):
        rows[0][draw(st.integers(0, degree - 1))] = 1
    return Arc.from_coeffs(rows, precision)
