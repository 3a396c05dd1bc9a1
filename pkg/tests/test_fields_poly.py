from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcval import QQ, FieldError, JetPoly, Poly, PolyParseError, PrimeField, Series, field_from_name, parse_poly
from arcval.fields import ModP


def test_rationals_normalize_integral_fractions():
    assert QQ.convert(Fraction(4, 2)) == 2 and type(QQ.convert(Fraction(4, 2))) is int
    assert QQ.convert("3/6") == Fraction(1, 2)
    with pytest.raises(FieldError):
        QQ.convert(0.5)


def test_rational_roots():
    assert QQ.root(Fraction(9, 4), 2) == Fraction(3, 2)
    assert QQ.root(-8, 3) == -2
    assert QQ.root(2, 2) is None
    assert QQ.root(-4, 2) is None
    assert QQ.root(10**40, 4) == 10**10


def test_prime_field_arithmetic():
    F = PrimeField(7)
    a = F.convert(3)
    assert a + 5 == F.convert(1)
    assert a * a == 2
    assert a / 3 == 1
    assert F.convert(Fraction(1, 2)) == 4
    assert -a == 4
    assert a.inverse() * a == 1
    with pytest.raises(FieldError):
        F.convert(Fraction(1, 7))
    with pytest.raises(FieldError):
        PrimeField(9)
    with pytest.raises(FieldError):
        a + ModP(1, 5)


@given(st.integers(1, 10), st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 12))
def test_prime_root_is_a_root(x, p, r):
    F = PrimeField(p)
    v = F.convert(x) ** r
    root = F.root(v, r)
    assert root is not None and root ** r == v


def test_field_names_round_trip():
    assert field_from_name("rational") is QQ
    assert field_from_name("prime:5") == PrimeField(5)
    assert PrimeField(5).name == "prime:5"
    for bad in ("real", "prime:x", "prime:4"):
        with pytest.raises(FieldError):
            field_from_name(bad)


# Poly

def test_parse_and_print():
    p = parse_poly("x1^3 - x2^2", 2)
    assert str(p) == "x1^3 - x2^2"
    assert parse_poly("(x1 + x2)**2", 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2)
    assert parse_poly("x1/2 + 1/3", 2) == Poly({(1, 0): Fraction(1, 2), (0, 0): Fraction(1, 3)}, 2)
    assert parse_poly("x1 - x1", 2).is_zero()


@pytest.mark.parametrize("text,col", [
    ("x1 +* 2", 5),
    ("x3", 0),
    ("y1", 0),
    ("x1^x2", 0),
    ("x1 / x2", 0),
    ("1.5*x1", 0),
    ("x1^-1", 0),
])
def test_parse_errors_are_positional(text, col):
    with pytest.raises(PolyParseError) as exc:
        parse_poly(text, 2)
    assert exc.value.position == col
    assert "column" in str(exc.value)


def test_parse_in_prime_field():
    F = PrimeField(5)
    p = parse_poly("x1^7 + 6*x2", 2, F)
    assert p.terms == {(7, 0): F.convert(1), (0, 1): F.convert(1)}


def test_substitute_series():
    p = parse_poly("x1^2 - x2", 2)
    t = Series.t(6)
    assert p.substitute([t, t * t]).is_zero()
    assert p.substitute([2, 3]) == 1


def test_jetpoly():
    x11, x22 = JetPoly.var(1, 1), JetPoly.var(2, 2)
    g = x22 - x11 ** 2
    assert str(g) == "-x1_1^2 + x2_2"
    assert g.evaluate({(1, 1): 2, (2, 2): 4}) == 0
    assert g.variables() == {(1, 1), (2, 2)}
    with pytest.raises(ValueError, match="missing"):
        g.evaluate({(1, 1): 1})


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_poly_ring_homomorphism(cs, pt):
    a = Poly({(1, 0): cs[0], (0, 2): cs[1]}, 2)
    b = Poly({(2, 1): cs[2], (0, 0): cs[3]}, 2)
    assert (a * b).substitute(pt) == a.substitute(pt) * b.substitute(pt)
    assert (a + b).substitute(pt) == a.substitute(pt) + b.substitute(pt)
