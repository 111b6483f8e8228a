import pytest

from jordanian.algebras.catalog import sl2h
from jordanian.errors import LegMismatch
from jordanian.tensor import (apply_counit_leg, coproduct, embed, extend_delta,
                              flip, flipped_coproduct, multiply_legs, permute)


def test_unit_and_simple_products():
    A = sl2h()
    g = A.at(2)
    x = g.J3 @ g.Jm + g.h * g.Jp @ g.one
    assert (g.one @ g.one) * x == x
    assert (g.Jp @ g.one) * (g.one @ g.Jp) == g.Jp @ g.Jp


def test_componentwise_ordering():
    A = sl2h()
    g = A.at(0)
    assert (g.Jm @ g.one) * (g.Jp @ g.one) == (g.Jp * g.Jm) @ g.one - g.J3 @ g.one


def test_flip():
    A = sl2h()
    g = A.at(1)
    assert flip(g.one @ g.one) == g.one @ g.one
    assert flip(g.Jp @ g.J3) == g.J3 @ g.Jp
    d = A.coproduct("J3", 1)
    expected = g.J3 @ g.one + g.one @ g.J3 - g.h * (g.J3 @ g.Jp - g.Jp @ g.J3)
    assert flip(d) == expected
    assert flipped_coproduct(g.J3) == expected


def test_embeddings():
    A = sl2h()
    g = A.at(2)
    assert embed(g.Jp @ g.J3, "13") == g.Jp @ g.one @ g.J3
    assert embed(g.Jp @ g.J3, "12") == g.Jp @ g.J3 @ g.one
    assert embed(g.Jp @ g.J3, "23") == g.one @ g.Jp @ g.J3
    with pytest.raises(ValueError):
        embed(g.Jp @ g.J3, "14")


def test_extend_delta():
    A = sl2h()
    g = A.at(2)
    assert extend_delta("left", g.Jp @ g.one) == g.Jp @ g.one @ g.one + g.one @ g.Jp @ g.one
    assert extend_delta("right", g.one @ g.Jp) == g.one @ g.Jp @ g.one + g.one @ g.one @ g.Jp


def test_coproduct_is_multiplicative():
    A = sl2h()
    g = A.at(3)
    x, y = g.J3, g.Jm
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


def test_counit_and_multiply_legs():
    A = sl2h()
    g = A.at(3)
    d = A.coproduct("Jm", 3)
    assert apply_counit_leg(d, 0) == g.Jm
    assert multiply_legs(g.Jp @ g.Jm) == g.Jp * g.Jm


def test_permute_and_leg_errors():
    A = sl2h()
    g = A.at(1)
    t = g.Jp @ g.J3 @ g.Jm
    assert permute(t, (2, 1, 0)) == g.Jm @ g.J3 @ g.Jp
    with pytest.raises(LegMismatch):
        permute(t, (0, 0, 1))
    with pytest.raises(LegMismatch):
        (g.Jp @ g.Jp) + g.Jp
