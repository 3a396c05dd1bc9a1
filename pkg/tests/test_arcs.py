import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from arcval import (
    Arc,
    ArcError,
    AtLeast,
    Finite,
    Poly,
    Series,
    TrivialArcError,
    is_nonsingular,
    is_trivial,
    normalization_index,
    ord_ideal,
    ord_poly,
    parse_poly,
    realized_orders,
)

from conftest import arc, arcs
from oracles import normalization_index_oracle, ord_oracle, subalgebra_orders


def P(text, n=2):
    return parse_poly(text, n)


def test_arc_validation():
    with pytest.raises(ArcError, match="n >= 2"):
        Arc((Series.t(4),))
    with pytest.raises(ArcError, match="origin-centered"):
        Arc((Series([1, 1]), Series([0, 1])))
    with pytest.raises(ArcError, match="at most 3"):
        Arc.from_coeffs([[1, 0, 0, 1], [1]], 4)
    a = Arc((Series([0, 1, 1, 1]), Series([0, 1])))
    assert a.precision == 2


def test_ord_poly_examples():
    axis = arc([1], [], [], precision=10)
    assert ord_poly(axis, P("x1", 3)) == Finite(1)
    assert ord_poly(axis, P("x2", 3)) == AtLeast(10)
    cusp = arc([0, 1], [0, 0, 1], precision=12)
    assert ord_poly(cusp, P("x1^3 - x2^2")) == AtLeast(12)
    assert ord_poly(cusp, P("x1 + x2")) == Finite(2)


def test_ord_poly_dimension_mismatch():
    with pytest.raises(ArcError):
        ord_poly(arc([1], [0, 1]), P("x1", 3))


def test_ord_ideal_examples():
    cusp = arc([0, 1], [0, 0, 1])
    assert ord_ideal(cusp, [P("x1"), P("x2")]) == Finite(2)
    assert ord_ideal(arc([1], [], precision=10), [P("x2")]) == AtLeast(10)
    assert ord_ideal(arc([0, 0, 1], [0, 0, 0, 1]), [P("x1^2"), P("x2")]) == Finite(4)
    with pytest.raises(ArcError):
        ord_ideal(cusp, [])


def test_trivial_and_nonsingular():
    assert is_trivial(arc([], []))
    assert not is_trivial(arc([1], []))
    assert not is_trivial(arc([], [0] * 14 + [1]))
    assert is_nonsingular(arc([1], [0, 0, 0, 0, 1]))
    assert not is_nonsingular(arc([0, 1], [0, 0, 1]))
    assert not is_nonsingular(arc([0, 1, 1], [0] * 6 + [1]))


# values frozen from tests/oracles.py:normalization_index_oracle at bound 16
NORMALIZATION = [
    ([[0, 1], [0, 0, 1]], 1),
    ([[0, 1], [0, 0, 0, 1]], 2),
    ([[0, 1], [0, 1, 1]], 1),
    ([[0, 0, 1], [0, 0, 0, 0, 0, 1]], 3),
    ([[1], [0, 0, 0, 5]], 1),
]


@pytest.mark.parametrize("rows,d", NORMALIZATION)
def test_normalization_index(rows, d):
    assert normalization_index(Arc.from_coeffs(rows, 16)) == d


def test_normalization_oracle_reproduces_frozen_values():
    for rows, d in NORMALIZATION[:4]:
        comps = [[0] + r for r in rows]
        assert normalization_index_oracle(comps, 16) == d


def test_cancellation_is_witnessed():
    w = realized_orders(arc([0, 1], [0, 1, 1]))
    assert 3 in w.orders  # x2 - x1
    assert set(w.orders) == subalgebra_orders([[0, 0, 1], [0, 0, 1, 1]], 16)


def test_normalization_index_rejects_trivial():
    with pytest.raises(TrivialArcError):
        normalization_index(arc([], []))


@given(arcs(precision=8, degree=3, coeffs=st.integers(-2, 2), n=2))
def test_realized_orders_match_echelon_oracle(a):
    comps = [list(c.coeffs) for c in a.components]
    assert set(realized_orders(a).orders) == subalgebra_orders(comps, 8)


@given(arcs(precision=10))
def test_nonsingular_implies_normalized(a):
    if is_nonsingular(a):
        assert normalization_index(a) == 1


@given(arcs(precision=10, n=2), st.sampled_from([(1, 1, 0, 1), (2, 1, 1, 1), (1, -1, 1, 1)]))
def test_normalization_index_linear_invariance(a, m):
    x, y = a[1], a[2]
    b = Arc((x * m[0] + y * m[1], x * m[2] + y * m[3]))
    if not is_trivial(b):
        assert normalization_index(b) == normalization_index(a)


x1, x2, x3 = sp.symbols("x1 x2 x3")


@given(arcs(precision=9, n=2, degree=3), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_ord_poly_matches_sympy(a, cs):
    expr = cs[0] * x1**2 + cs[1] * x1 * x2 + cs[2] * x2**3 + cs[3] * x1
    psi = Poly({(2, 0): cs[0], (1, 1): cs[1], (0, 3): cs[2], (1, 0): cs[3]}, 2)
    expected = ord_oracle([list(c.coeffs) for c in a.components], expr, [x1, x2], 9)
    got = ord_poly(a, psi)
    assert got == (Finite(expected) if expected is not None else AtLeast(9))


@given(arcs(precision=12, n=2, degree=3))
def test_valuation_axioms(a):
    f, g = P("x1 + 2*x2^2"), P("x2 - x1^2 + x1*x2")
    of, og = ord_poly(a, f), ord_poly(a, g)
    prod = ord_poly(a, f * g)
    if of.finite and og.finite and of.value + og.value < 12:
        assert prod == Finite(of.value + og.value)
    s = ord_poly(a, f + g)
    assert s.value >= min(of.value, og.value)
    if of.value != og.value:
        assert s.value == min(of.value, og.value)
