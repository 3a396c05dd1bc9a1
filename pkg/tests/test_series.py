from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcval import AtLeast, Finite, Series, SeriesError, UnitRootError
from arcval.fields import PrimeField
from arcval.series import add, comp_inverse, compose, mul, ord, scale, unit_inverse, unit_root

from conftest import order_one, series, units
from oracles import compose_oracle, lagrange_inversion, reversion_by_undetermined_coefficients, root_oracle


def S(*coeffs, precision=None):
    return Series(coeffs, precision=precision)


def t(precision):
    return Series.t(precision)


# ord

def test_ord_examples():
    assert ord(S(0, 1, 0, 1, precision=8)) == Finite(1)
    assert ord(Series.zero(8)) == AtLeast(8)
    assert ord(S(0, 0, 3, 0, -1, precision=6)) == Finite(2)


def test_order_strings():
    assert str(Finite(3)) == "Finite(3)"
    assert str(AtLeast(10)) == "AtLeast(10)"
    assert AtLeast(10).at_least(10) and not Finite(2).at_least(3)


# ring operations

def test_ring_examples():
    assert add(t(4), t(4)) == S(0, 2, 0, 0)
    assert mul(Series.monomial(2, 8), Series.monomial(3, 8)) == Series.monomial(5, 8)
    assert mul(S(1, 1, 0, 0), S(1, -1, 0, 0)) == S(1, 0, -1, 0)
    assert scale(Fraction(1, 2), S(2, 4)) == S(1, 2)


def test_binary_ops_take_min_precision():
    assert (S(1, 2, 3) + S(1, 1)).precision == 2
    assert (S(1, 2, 3) * S(1, 1, 1, 1)).precision == 3


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Series([1, 1]) + Series([1, 1], PrimeField(5))


def test_floats_rejected():
    with pytest.raises(ValueError):
        Series([0.5, 1])


# compose

def test_compose_examples():
    assert compose(Series.monomial(2, 8), Series.monomial(3, 8)) == Series.monomial(6, 8)
    assert compose(S(1, 1, 1, precision=8), Series.monomial(2, 8)) == S(1, 0, 1, 0, 1, precision=8)
    assert compose(S(0, 1, 1, precision=5), S(0, 1, 1, precision=5)) == S(0, 1, 2, 2, 1)


def test_compose_precision_formula():
    # g known mod t^3, f of order 2 known mod t^10: result known mod t^6
    assert compose(S(0, 1, 1), Series.monomial(2, 10)).precision == 6
    assert compose(S(0, 1, 1, 0, 0, 0, 0), t(4)).precision == 4


def test_compose_requires_positive_order():
    with pytest.raises(SeriesError, match="composition requires positive order"):
        compose(t(4), S(1, 1, 0, 0))


@given(series(8), order_one(8))
def test_compose_matches_sympy(g, f):
    assert list(compose(g, f).coeffs) == compose_oracle(g.coeffs, f.coeffs, 8)


@given(series(7), order_one(7), order_one(7))
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


# comp_inverse

def test_comp_inverse_examples():
    assert comp_inverse(t(6)) == t(6)
    assert comp_inverse(S(0, 2, 0, 0)) == S(0, Fraction(1, 2), 0, 0)
    assert comp_inverse(S(0, 1, 1, precision=6)) == S(0, 1, -1, 2, -5, 14)


def test_comp_inverse_oracles_agree_on_example():
    f = [0, 1, 1, 0, 0, 0]
    frozen = [0, 1, -1, 2, -5, 14]
    assert reversion_by_undetermined_coefficients(f, 6) == frozen
    assert lagrange_inversion(f, 6) == frozen


@pytest.mark.parametrize("bad", [S(0, 0, 1, 0), S(1, 1, 0), Series.zero(4)])
def test_comp_inverse_rejects_wrong_order(bad):
    with pytest.raises(SeriesError, match="no compositional inverse at this order"):
        comp_inverse(bad)


@given(order_one(9))
def test_comp_inverse_matches_lagrange(f):
    assert list(comp_inverse(f).coeffs) == lagrange_inversion(f.coeffs, 9)


@given(order_one())
def test_comp_inverse_round_trip(f):
    s = comp_inverse(f)
    n = f.precision
    assert compose(s, f) == t(n)
    assert compose(f, s) == t(n)


def test_comp_inverse_prime_field():
    F = PrimeField(7)
    f = Series([0, 3, 5, 1, 2, 6], F)
    s = comp_inverse(f)
    assert compose(s, f) == Series.t(6, F)
    assert compose(f, s) == Series.t(6, F)


# unit_inverse

def test_unit_inverse_examples():
    assert unit_inverse(Series.one(5)) == Series.one(5)
    assert unit_inverse(S(1, -1, 0, 0)) == S(1, 1, 1, 1)
    assert unit_inverse(S(2, 1, 0)) == S(Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8))


def test_unit_inverse_rejects_nonunit():
    with pytest.raises(SeriesError, match="not a unit"):
        unit_inverse(t(4))


@given(units())
def test_unit_inverse_property(u):
    assert u * unit_inverse(u) == Series.one(u.precision)


def test_negative_power():
    u = S(1, 1, 0, 0)
    assert u ** -2 == unit_inverse(u * u)


# unit_root

def test_unit_root_examples():
    assert unit_root(Series.one(6), 2) == Series.one(6)
    assert unit_root(S(1, 1, 0, 0), 1) == S(1, 1, 0, 0)
    assert unit_root(S(1, 1, 0, 0), 2) == S(1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))


def test_unit_root_oracle_agrees_on_example():
    assert root_oracle([1, 1], 2, 4) == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]


def test_unit_root_scalar_root():
    v = unit_root(S(4, 4, 1, 0, 0), 2)
    assert v == S(2, 1, 0, 0, 0)
    assert unit_root(S(Fraction(8, 27), 0, 0), 3) == S(Fraction(2, 3), 0, 0)


def test_unit_root_missing_scalar_root():
    with pytest.raises(UnitRootError) as exc:
        unit_root(S(2, 1, 0), 2)
    assert exc.value.leading == 2 and exc.value.r == 2
    with pytest.raises(UnitRootError):
        unit_root(S(-1, 1, 0), 2)


def test_unit_root_prime_field():
    F = PrimeField(7)
    u = Series([2, 1, 3, 0, 5, 1], F)
    for r in (2, 3, 5):
        try:
            v = unit_root(u, r)
        except UnitRootError:
            continue
        assert v ** r == u
    with pytest.raises(SeriesError, match="characteristic 7"):
        unit_root(u, 7)


@given(units(8, lead=1), st.sampled_from([2, 3, 5]))
def test_unit_root_matches_sympy(u, r):
    v = unit_root(u, r)
    assert v ** r == u
    assert list(v.coeffs) == root_oracle(u.coeffs, r, 8)


# valuation axioms

@given(series(10), series(10))
def test_ord_of_product(a, b):
    oa, ob = a.order(), b.order()
    if oa.finite and ob.finite and oa.value + ob.value < 10:
        assert (a * b).order() == Finite(oa.value + ob.value)


@given(series(10), series(10))
def test_ord_of_sum(a, b):
    oa, ob, os = a.order(), b.order(), (a + b).order()
    assert os.value >= min(oa.value, ob.value)
    if oa.value != ob.value:
        assert os.value == min(oa.value, ob.value)


def test_series_is_immutable_and_hashable():
    s = S(1, 2)
    with pytest.raises(AttributeError):
        s.coeffs = (0,)
    assert len({s, S(1, 2)}) == 1


def test_format():
    assert S(0, 1, -1, 2).format() == "t - t^2 + 2*t^3"
    assert Series.zero(3).format() == "0"
