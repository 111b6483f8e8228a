import itertools

import pytest
from hypothesis import given, settings, strategies as st

from jordanian.algebras.catalog import sl2h, so4h
from jordanian.algebras.definition import AlgebraDef
from jordanian.errors import (FuelExhausted, NonCommutativeInput,
                              NonNilpotentArgument, NotDivisible, OrderMismatch)
from jordanian.kernel.analytic import (COSH, SINH, SINH_OVER_X, X_OVER_SINH,
                                       cosh, series_exp, sinh, x_over_sinh)
from jordanian.kernel.division import series_div_exact
from jordanian.kernel.rational import Rational
from jordanian.kernel.series import HSeries

Q = Rational


def word(A, K, *letters):
    return HSeries.from_words(A, {tuple(letters): 1}, K)


# -- normal ordering ------------------------------------------------------------------

def test_swap_gives_commutator():
    A = sl2h()
    g = A.at(0)
    assert word(A, 0, "Jm", "Jp") == g.Jp * g.Jm - g.J3


def test_ordered_word_unchanged():
    A = sl2h()
    for K in range(4):
        w = word(A, K, "Jp", "J3")
        assert list(w.terms) == [(0, ((0, 1),))]


def test_j3_jp_at_order_three():
    A = sl2h()
    g = A.at(3)
    expected = g.Jp * g.J3 + 2 * g.Jp + Q(1, 3) * g.h ** 2 * g.Jp ** 3
    assert word(A, 3, "J3", "Jp") == expected


def test_products_match_words():
    A = sl2h()
    g = A.at(0)
    assert g.Jp * 1 == g.Jp
    assert g.Jp * g.Jm == word(A, 0, "Jp", "Jm")
    assert g.Jm * g.Jp == g.Jp * g.Jm - g.J3


@pytest.mark.parametrize("name", ["sl2h", "so4h"])
def test_confluence_length_three(name):
    A = {"sl2h": sl2h, "so4h": so4h}[name]()
    for K in range(5):
        for w in itertools.product(A.generators, repeat=3):
            fast = HSeries.from_words(A, {w: 1}, K)
            left = HSeries.from_words(A, {w: 1}, K, strategy="leftmost")
            right = HSeries.from_words(A, {w: 1}, K, strategy="rightmost")
            assert fast == left == right, (K, w)


def test_truncation_consistency():
    A = so4h()
    for w in itertools.product(A.generators, repeat=3):
        high = HSeries.from_words(A, {w: 1}, 4)
        for K in range(4):
            assert high.truncate(K) == HSeries.from_words(A, {w: 1}, K)


def test_fuel_exhaustion():
    base = sl2h()
    A = AlgebraDef("tiny-fuel", base.generators, base.commutators, fuel=5)
    with pytest.raises(FuelExhausted):
        HSeries.from_words(A, {("Jm", "Jm", "J3", "J3", "Jp", "Jp"): 1}, 4)


def test_order_mismatch():
    A = sl2h()
    with pytest.raises(OrderMismatch):
        HSeries.generator(A, "Jp", 2) + HSeries.generator(A, "Jp", 3)


# -- ring laws (random elements) ---------------------------------------------------------

def _elements(A, K):
    letters = st.sampled_from(A.generators)
    words = st.lists(letters, max_size=3).map(tuple)
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    terms = st.dictionaries(words, coeffs, max_size=3)
    powers = st.integers(0, 2)
    return st.builds(lambda d, p: HSeries.from_words(A, d, K).shift(p)
                     if p else HSeries.from_words(A, d, K), terms, powers)


SL2 = sl2h()


@settings(max_examples=40, deadline=None)
@given(_elements(SL2, 3), _elements(SL2, 3), _elements(SL2, 3))
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert a - a == HSeries.zero(SL2, 3)


@settings(max_examples=30, deadline=None)
@given(_elements(SL2, 4))
def test_exp_inverse(a):
    x = a.shift(1)
    assert series_exp(x) * series_exp(-x) == HSeries.one(SL2, 4)


# -- analytic functions -----------------------------------------------------------------

def test_exp_zero():
    A = sl2h()
    assert series_exp(HSeries.zero(A, 4)) == HSeries.one(A, 4)


def test_sinh_and_x_over_sinh():
    A = sl2h()
    g = A.at(4)
    x = g.h * g.Jp
    assert sinh(x) == x + Q(1, 6) * x ** 3
    assert x_over_sinh(x) == 1 - Q(1, 6) * x ** 2 + Q(7, 360) * x ** 4


def test_exp_of_h_jp():
    A = sl2h()
    g = A.at(2)
    x = g.h * g.Jp
    assert series_exp(x) == 1 + x + Q(1, 2) * x ** 2


def test_tensor_exp_inverse():
    A = sl2h()
    g = A.at(4)
    X = g.h * (g.J3 @ g.Jp - g.Jp @ g.J3)
    assert series_exp(X) * series_exp(-X) == g.one @ g.one


def test_x_over_sinh_coefficients_invert():
    # sinh(x)/x = 1 + x^2/6 + x^4/120 + ... times x/sinh x is 1 through x^10
    assert SINH_OVER_X.coeffs(4) == [1, 0, Q(1, 6), 0, Q(1, 120)]
    assert X_OVER_SINH.coeffs(6) == [1, 0, Q(-1, 6), 0, Q(7, 360), 0, Q(-31, 15120)]
    assert SINH_OVER_X.check_inverse(X_OVER_SINH, 10)


def test_cosh_sinh_identity():
    A = sl2h()
    g = A.at(6)
    x = g.h * g.Jp
    assert cosh(x) ** 2 - sinh(x) ** 2 == HSeries.one(A, 6)
    assert COSH.coeff(2) == Q(1, 2) and SINH.coeff(3) == Q(1, 6)


def test_non_nilpotent_argument():
    A = sl2h()
    with pytest.raises(NonNilpotentArgument):
        series_exp(HSeries.generator(A, "Jp", 3))


# -- exact division ------------------------------------------------------------------

def test_div_identity():
    A = so4h()
    g = A.at(3)
    x = 1 + g.h * g.Jp
    assert series_div_exact(x, x) == HSeries.one(A, 3)


def test_difference_of_squares():
    A = so4h()
    g = A.at(3)
    num = g.h ** 2 * (g.Jp ** 2 - g.Np ** 2)
    den = g.h * (g.Jp - g.Np)
    q = series_div_exact(num, den)
    assert q == (g.h * (g.Jp + g.Np)).truncate(q.order)


def test_cosh_difference_quotient():
    A = so4h()
    g = A.at(4)
    num = 2 * (cosh(g.h * g.Jp) - cosh(g.h * g.Np))
    den = g.h ** 2 * (g.Jp ** 2 - g.Np ** 2)
    q = series_div_exact(num, den)
    expected = 1 + Q(1, 12) * g.h ** 2 * (g.Jp ** 2 + g.Np ** 2)
    assert q == expected.truncate(q.order)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3),
                min_size=6, max_size=6))
def test_division_round_trip(cs):
    A = so4h()
    g = A.at(4)
    den = 1 + cs[0] * g.h * g.Jp + cs[1] * g.h * g.Np + cs[2] * g.h ** 2 * g.Jp * g.Np
    q0 = cs[3] + cs[4] * g.h * g.Np ** 2 + cs[5] * g.h ** 3 * g.Jp
    num = q0 * den
    assert series_div_exact(num, den) == q0


def test_division_failures():
    A = so4h()
    g = A.at(3)
    with pytest.raises(NonCommutativeInput):
        series_div_exact(g.Jm, 1 + g.h * g.J3)
    with pytest.raises(NotDivisible):
        series_div_exact(g.Jp + g.h, g.h * g.Np)


def test_x_over_sinh_against_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.symbols("x")
    s = sp.series(x / sp.sinh(x), x, 0, 11).removeO()
    expected = [Q(int(c.p), int(c.q)) for c in (sp.Rational(s.coeff(x, k)) for k in range(11))]
    assert X_OVER_SINH.coeffs(10) == expected
