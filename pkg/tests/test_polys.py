from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schatunowsky.polys import IntPoly, QX, QZPoly, X, format_coeffs, parse_coeffs

from oracles import poly_lt, to_sympy

small = st.integers(-12, 12)
fracs = st.fractions(min_value=-12, max_value=12, max_denominator=12)


@st.composite
def int_polys(draw, cone=False, max_degree=4):
    cs = draw(st.lists(small, min_size=0, max_size=max_degree + 1))
    f = IntPoly(cs)
    if cone and f.sign() < 0:
        f = -f
    return f


@st.composite
def qz_polys(draw, cone=False, max_degree=4):
    c0 = draw(small)
    rest = draw(st.lists(fracs, min_size=0, max_size=max_degree))
    f = QZPoly([c0] + rest)
    if cone and f.sign() < 0:
        f = -f
    return f


@pytest.mark.parametrize("text, coeffs", [
    ("3X^2 - 5/2X + 1", [1, Fraction(-5, 2), 3]),
    ("(3/2)X + 1", [1, Fraction(3, 2)]),
    ("2*X^3 + X - 7", [-7, 1, 0, 2]),
    ("-X", [0, -1]),
    ("0", [0]),
    ("X^2 + X^2", [0, 0, 2]),
    ("  7 ", [7]),
])
def test_parse(text, coeffs):
    assert parse_coeffs(text) == [Fraction(c) for c in coeffs]


@pytest.mark.parametrize("text", ["", "X +", "3 3", "X^", "2**X", "+", "X + (1/2"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_coeffs(text)


def test_qz_constant_must_be_integral():
    with pytest.raises(ValueError):
        QZPoly.parse("X + 1/2")
    with pytest.raises(ValueError):
        IntPoly.parse("1/2X + 1")


@pytest.mark.parametrize("coeffs, text", [
    ((), "0"),
    ((1,), "1"),
    ((1, 1), "X + 1"),
    ((-1, 0, 1), "X^2 - 1"),
    ((1, Fraction(1, 2)), "1/2X + 1"),
    ((0, -3), "-3X"),
])
def test_format(coeffs, text):
    assert format_coeffs(coeffs) == text


@settings(max_examples=300)
@given(qz_polys())
def test_text_roundtrip_qz(f):
    assert QZPoly.parse(str(f)) == f


@settings(max_examples=300)
@given(int_polys())
def test_text_roundtrip_int(f):
    assert IntPoly.parse(str(f)) == f


def test_constants_and_coercion():
    assert X == IntPoly((0, 1)) and QX == QZPoly((0, 1))
    assert X + 1 == IntPoly.parse("X + 1")
    assert 2 * (X + 1) == IntPoly.parse("2X + 2")
    assert (QX + 2) * Fraction(1, 2) == QZPoly.parse("1/2X + 1")
    assert (X + 2) ** 2 == IntPoly.parse("X^2 + 4X + 4")
    assert (X + 1)(3) == 4
    assert hash(X + 1) == hash(IntPoly.parse("X + 1"))
    assert IntPoly.parse("3").is_constant() and not X.is_constant()


@pytest.mark.parametrize("f, g, expected", [("X + 1", "2X", -1), ("X + 1", "X + 1", 0), ("X - 5", "100", 1), ("-X + 1000", "0", -1)])
def test_compare(f, g, expected):
    assert IntPoly.parse(f).compare(IntPoly.parse(g)) == expected


def test_cone_membership():
    assert IntPoly.parse("X - 5").in_cone()
    assert not IntPoly.parse("-X + 5").in_cone()
    assert IntPoly().in_cone()
    assert not IntPoly.const(-1).in_cone()


# -- the cone axioms on sampled elements ------------------------------------------------


@settings(max_examples=400)
@given(qz_polys(cone=True), qz_polys(cone=True), qz_polys(cone=True))
def test_ring_axioms_qz(x, y, z):
    zero, one = QZPoly(), QZPoly.const(1)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + zero == x and x * zero == zero and x * one == x
    # closure of the cone
    assert (x + y).in_cone() and (x * y).in_cone()


@settings(max_examples=400)
@given(int_polys(cone=True), int_polys(cone=True), int_polys(cone=True))
def test_order_axioms_int(x, y, z):
    assert not x < x
    assert (x < y) + (x == y) + (y < x) == 1
    if x < y and y < z:
        assert x < z
    if x < y:
        assert x + z < y + z
        assert (y - x).in_cone()
        if z > 0:
            assert x * z < y * z
    assert x > 0 or x == 0


@settings(max_examples=400)
@given(int_polys(), int_polys())
def test_order_matches_leading_coefficient_oracle(f, g):
    assert (f < g) == poly_lt(f.coeffs, g.coeffs)


@settings(max_examples=300)
@given(qz_polys(), qz_polys())
def test_product_matches_sympy(f, g):
    assert to_sympy((f * g).coeffs) == to_sympy(f.coeffs) * to_sympy(g.coeffs)


@settings(max_examples=400)
@given(int_polys(cone=True), int_polys(cone=True), st.integers(1, 30))
def test_discreteness(f, g, c):
    # nothing lies strictly between f and f + 1
    assert not (f < g < f + 1)
    # f < g <= f + c forces g - f to be an integer in [1, c]
    if f < g <= f + c:
        d = g - f
        assert d.is_constant() and 1 <= d.constant <= c


@settings(max_examples=400)
@given(qz_polys(cone=True), qz_polys(cone=True))
def test_discreteness_qz(f, g):
    assert not (f < g < f + 1)


@pytest.mark.parametrize("k", range(1, 21))
def test_no_even_or_odd_in_run(k):
    from schatunowsky.polymodels import divides_int

    # 2h = X + k or 2h + 1 = X + k needs h = (X + k - r)/2, which has a
    # half-integer coefficient and so is not in Z[X]
    for r in (0, 1):
        f = X + k - r
        half = to_sympy(f.coeffs) * sympy.Rational(1, 2)
        assert any(c.q != 1 for c in half.all_coeffs())
        assert not divides_int(IntPoly.const(2), f)
