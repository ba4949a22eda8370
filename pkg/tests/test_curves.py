from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulislope.catalog import brill_noether, k3_divisor
from modulislope.curves import (
    glued_pencil,
    intersect,
    lefschetz_pencil,
    parse_curve,
    pointed_k3_pencil,
)
from modulislope.picard import ClassError, IndeterminateError, Unknown, make_class
from modulislope.pushpull import pull_attach10

from .conftest import classes, rationals


def test_lefschetz_ten():
    B = lefschetz_pencil(10)
    assert B.pairing("lambda") == 11 and B.pairing("delta0") == 78
    assert B.pairing("delta3") == 0


def test_lefschetz_two():
    B = lefschetz_pencil(2)
    assert (B.pairing("lambda"), B.pairing("delta0")) == (3, 30)


@pytest.mark.parametrize("i", [1, 12])
def test_lefschetz_range(i):
    with pytest.raises(ClassError):
        lefschetz_pencil(i)


def test_glued_two():
    B = glued_pencil(2, 5)
    assert B.pairings == {"lambda": 3, "delta0": 30, "delta2": -1}


def test_elliptic_pencil():
    B = glued_pencil(1, 5)
    assert B.pairings == {"lambda": 1, "delta0": 12, "delta1": -1}


def test_glued_index_out_of_basis():
    with pytest.raises(ClassError):
        glued_pencil(3, 4)


def test_pointed_pencil_pairings():
    R = pointed_k3_pencil()
    assert R.pairing("lambda") == 11
    assert R.pairing("psi") == 1
    assert R.pairing("delta3") == 0
    B = lefschetz_pencil(10)
    assert (R.pairing("lambda"), R.pairing("delta0")) == (B.pairing("lambda"), B.pairing("delta0"))


@given(st.tuples(rationals, rationals, rationals))
def test_pointed_pencil_reproduces_m_bound(abc):
    a, b0, b10 = abc
    coeffs = {f"delta{i}": Unknown for i in range(1, 11)}
    coeffs.update({"lambda": a, "delta0": -b0, "delta10": -b10})
    J = pull_attach10(make_class("Mg", 20, coeffs))
    assert -intersect(pointed_k3_pencil(), J) == -11 * a + 78 * b0 - b10


def test_b_dot_k_is_minus_one():
    assert intersect(lefschetz_pencil(10), k3_divisor()) == -1


def test_elliptic_pencil_on_brill_noether():
    assert intersect(glued_pencil(1, 5), brill_noether(5)) == 0


def test_reference_slope_class_pairs_to_zero():
    D = make_class("Mg", 10, {"lambda": 78, "delta0": -11, "delta1": -50, "delta4": -3})
    assert intersect(lefschetz_pencil(10), D) == 0


def test_unknown_meets_nonzero_pairing():
    with pytest.raises(IndeterminateError, match="indeterminate"):
        intersect(glued_pencil(3, 10), k3_divisor())


def test_space_mismatch():
    with pytest.raises(ClassError):
        intersect(lefschetz_pencil(5), make_class("Mg", 6, {}))


@given(st.integers(2, 11).flatmap(lambda g: st.tuples(classes(genus=g), classes(genus=g))), rationals)
def test_intersect_linear(pair, c):
    D, E = pair
    for B in (lefschetz_pencil(D.genus), glued_pencil(1, D.genus)):
        assert intersect(B, D + c * E) == intersect(B, D) + c * intersect(B, E)


@given(st.data())
def test_glued_pencil_is_inequality_lhs(data):
    i = data.draw(st.integers(2, 11))
    g = data.draw(st.integers(2 * i + 1, 2 * i + 6))
    D = data.draw(classes(genus=g))
    a, b0, bi = D.lam, -D.delta[0], -D.delta[i]
    assert intersect(glued_pencil(i, g), D) == (i + 1) * a - (6 * i + 18) * b0 + bi


@pytest.mark.parametrize("i", range(2, 12))
def test_lefschetz_ratio(i):
    B = lefschetz_pencil(i)
    assert B.pairing("delta0") / B.pairing("lambda") == 6 + Fraction(12, i + 1)


def test_parse_curve():
    assert parse_curve("lefschetz:10") == lefschetz_pencil(10)
    assert parse_curve("glued:2,5") == glued_pencil(2, 5)
    assert parse_curve("elliptic:5") == glued_pencil(1, 5)
    assert parse_curve("R") == pointed_k3_pencil()
    for bad in ("lefschetz", "glued:2", "foo:1", "lefschetz:x"):
        with pytest.raises(ClassError):
            parse_curve(bad)
