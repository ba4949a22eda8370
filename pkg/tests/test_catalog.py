from fractions import Fraction
from math import comb

import pytest

from modulislope.catalog import (
    Convention,
    brill_noether,
    canonical_pointed,
    is_prime,
    k3_divisor,
    named_class,
    petri_slope,
    pushed_weierstrass_square_closed,
    weierstrass,
)
from modulislope.picard import ClassError, Unknown, make_class, slope
from modulislope.pushpull import push_quadratic

COMPOSITE = [g for g in range(2, 31) if not is_prime(g + 1)]


def test_weierstrass_two():
    assert weierstrass(2) == make_class("Mg1", 2, {"lambda": -1, "psi": 3, "delta1": -1})


def test_weierstrass_three():
    assert weierstrass(3) == make_class("Mg1", 3, {"lambda": -1, "psi": 6, "delta1": -3, "delta2": -1})


def test_weierstrass_ten():
    W = weierstrass(10)
    assert W.psi == 55
    assert W.delta[1] == -45
    assert W.delta[0] == 0
    assert W.delta[9] == -comb(2, 2)


def test_brill_noether_five():
    assert brill_noether(5) == make_class("Mg", 5, {"lambda": 8, "delta0": -1, "delta1": -4, "delta2": -6})


@pytest.mark.parametrize("g", COMPOSITE)
def test_brill_noether_slope(g):
    assert slope(brill_noether(g)) == 6 + Fraction(12, g + 1)


@pytest.mark.parametrize("g", [COMPOSITE[0], 8, 23])
def test_brill_noether_slope_scale_free(g):
    assert slope(Fraction(7, 3) * brill_noether(g)) == slope(brill_noether(g))


def test_brill_noether_prime():
    with pytest.raises(ClassError):
        brill_noether(10)


def test_petri():
    assert petri_slope(10) == Fraction(36, 5)
    assert petri_slope(20) == Fraction(731, 110)
    with pytest.raises(ClassError):
        petri_slope(7)


def test_k3_divisor():
    K = k3_divisor()
    assert K.coefficient("lambda") == 7
    assert K.coefficient("delta2") == -9
    assert K.coefficient("delta5") is Unknown


def test_canonical_three():
    assert canonical_pointed(3, "paper") == make_class(
        "Mg1", 3, {"lambda": 13, "psi": 1, "delta1": -3, "delta2": -3}
    )
    assert canonical_pointed(3, Convention.STANDARD) == make_class(
        "Mg1", 3, {"lambda": 13, "psi": 1, "delta0": -2, "delta1": -3, "delta2": -3}
    )


def test_canonical_five_middle():
    K = canonical_pointed(5, Convention.PAPER)
    assert K.delta == (0, -3, -2, -2, -3)


def test_canonical_needs_three():
    with pytest.raises(ClassError):
        canonical_pointed(2)


def test_closed_form_values():
    assert pushed_weierstrass_square_closed(4) == make_class(
        "Mg", 4, {"lambda": 1080, "delta0": -100, "delta1": -345, "delta2": -289}
    )
    assert pushed_weierstrass_square_closed(2) == make_class("Mg", 2, {"lambda": 96, "delta0": -9, "delta1": -16})
    # g^3+3g^2+g-1 at g=5 is 204
    assert pushed_weierstrass_square_closed(5).delta[2] == -2 * 3 * 204 == -1224


@pytest.mark.parametrize("g", range(2, 31))
def test_closed_form_matches_engine(g):
    W = weierstrass(g)
    assert push_quadratic(W, W) == pushed_weierstrass_square_closed(g)


@pytest.mark.parametrize("g", [g for g in COMPOSITE if g >= 4])
def test_effectivity_ratios(g):
    P = pushed_weierstrass_square_closed(g)
    a = P.lam
    assert P.b(0) / a <= Fraction(g + 1, 6 * g + 18)
    for i in range(1, g // 2 + 1):
        assert P.b(i) / a <= Fraction(i * (g - i), g + 3)


def test_named_classes():
    assert named_class("k3divisor") == k3_divisor()
    assert named_class("weierstrass:4") == weierstrass(4)
    assert named_class("brillnoether:5") == brill_noether(5)
    assert named_class("canonical:4:standard") == canonical_pointed(4, "standard")
    assert named_class("pushedw2:3") == pushed_weierstrass_square_closed(3)
    for bad in ("nothing", "weierstrass", "weierstrass:x", "canonical:4:odd"):
        with pytest.raises(ClassError):
            named_class(bad)
