from decimal import ROUND_HALF_EVEN
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulislope.catalog import PUSHED_W2_B0, weierstrass
from modulislope.pushpull import push_quadratic
from modulislope.scalar import (
    GenusPolynomial,
    format_rational,
    parse_rational,
    poly_identity_check,
    rational,
    render_decimal,
)

from .conftest import rationals

g = GenusPolynomial.g()


def long_division_reduce(p, q):
    # Euclid by repeated remainder, independent of Fraction
    a, b = p, q
    while b:
        a, b = b, a % b
    return p // a, q // a


def test_compare_with_seven():
    assert Fraction(78, 11) > 7


def test_half_plus_half():
    assert Fraction(1, 2) + Fraction(1, 2) == 1


def test_reduction_against_euclid():
    assert long_division_reduce(540540, 7572) == (45045, 631)
    x = rational("540540/7572")
    assert (x.numerator, x.denominator) == (45045, 631)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x


@given(rationals)
def test_canonical_form(x):
    assert x.denominator > 0
    assert gcd(abs(x.numerator), x.denominator) == 1


@given(rationals)
def test_serialization_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_serialization_format():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational(" -10/4 ") == Fraction(-5, 2)


@pytest.mark.parametrize("bad", ["1.5", "x", "1/2/3", ""])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_floats_rejected():
    with pytest.raises(TypeError):
        rational(0.5)


def test_render_truncates_by_default():
    assert render_decimal(Fraction(45045, 631)) == "71.3866"
    assert render_decimal(Fraction(6435, 631)) == "10.1980"
    assert render_decimal(Fraction(6435, 631), rounding=ROUND_HALF_EVEN) == "10.1981"
    assert render_decimal(Fraction(-1, 3), 2) == "-0.33"
    assert render_decimal(Fraction(7), 0) == "7"


def test_closed_form_at_four():
    a = g * (g + 1) * (3 * g**2 + g + 2)
    assert a(4) == 1080
    assert a.degree == 4


def test_times_zero():
    p = 3 * g**2 - 1
    assert p * 0 == GenusPolynomial()
    assert (p * 0).coefficients == ()
    assert (p * 0).degree == -1


def test_remark_numerator_at_three():
    p = 13 * g**3 + 6 * g**2 - 9 * g + 2
    assert p(3) == 13 * 27 + 6 * 9 - 27 + 2 == 380


def test_trailing_zeros_stripped():
    assert GenusPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert (g - g).coefficients == ()


def test_degree_cap():
    GenusPolynomial([0] * 8 + [1])
    with pytest.raises(OverflowError):
        GenusPolynomial([0] * 9 + [1])
    with pytest.raises(OverflowError):
        g**5 * g**4


def test_str():
    assert str(2 * g**2 - g + Fraction(1, 2)) == "2*g^2 - g + 1/2"
    assert str(GenusPolynomial()) == "0"


polys = st.lists(rationals, max_size=5).map(GenusPolynomial)


@given(polys, polys, st.integers(min_value=2, max_value=40))
def test_eval_is_a_ring_map(p, q, n):
    assert (p + q)(n) == p(n) + q(n)
    assert (p * q)(n) == p(n) * q(n)
    assert (p - q)(n) == p(n) - q(n)


@given(polys, st.integers(min_value=2, max_value=40))
def test_horner_matches_power_sum(p, n):
    assert p(n) == sum(c * Fraction(n) ** k for k, c in enumerate(p.coefficients))


def test_identity_check_against_push_engine():
    def b0(n):
        return -push_quadratic(weierstrass(n), weierstrass(n)).delta[0]

    expected = Fraction(1, 4) * g**2 * (g + 1) ** 2
    assert expected == PUSHED_W2_B0
    assert poly_identity_check(expected, b0, 4, range(2, 11))


def test_identity_check_trivial_cases():
    assert poly_identity_check(GenusPolynomial(), lambda n: 0, 0, [2])
    assert not poly_identity_check(g, lambda n: n + 1, 1, [2, 3])


def test_identity_check_needs_enough_samples():
    with pytest.raises(ValueError):
        poly_identity_check(g, lambda n: n, 3, [2, 3, 3, 4])
