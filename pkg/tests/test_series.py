from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lbpriordan.series import (
    RatFunc,
    Series,
    add,
    compose,
    expand,
    mul,
    reciprocal,
    revert,
    sqrt,
)

from conftest import ints, nonzero_rat, small_rat


def S(*cs):
    return Series(tuple(cs))


def test_expand_geometric():
    assert ints(expand(RatFunc((1,), (1, -1)), 5)) == [1, 1, 1, 1, 1]


def test_expand_lbp11_first_column():
    assert ints(expand(RatFunc((1, -1), (1, 1)), 6)) == [1, -2, 2, -2, 2, -2]


def test_expand_against_long_division():
    rf = RatFunc((1, -2, 1), (1, 2, 1))
    s = expand(rf, 4)
    assert ints(s) == [1, -4, 8, -12]
    # den * s reproduces num up to the truncation
    back = mul(expand(RatFunc((1, 2, 1)), 4), s)
    assert ints(back) == [1, -2, 1, 0]


def test_expand_rejects_singular_denominator():
    with pytest.raises(ValueError):
        RatFunc((1,), (0, 1))
    with pytest.raises(ValueError):
        expand(RatFunc((1,), (1,)), 0)


def test_mul_examples():
    assert ints(mul(S(1, 1, 1), S(1, -1, 0))) == [1, 0, 0]
    a = expand(RatFunc((1, -1), (1, 1)), 4)
    b = expand(RatFunc((1, 1), (1, -1)), 4)
    assert ints(mul(a, b)) == [1, 0, 0, 0]
    assert ints(mul(S(1, 2, 6, 22), S(1, 2, 6, 22))) == [1, 4, 16, 68]


def test_truncation_is_minimum():
    assert mul(S(1, 2, 3), S(1, 1)).order == 2
    assert add(S(1, 2, 3), S(1, 1, 1, 1)).order == 3


def test_reciprocal_examples():
    assert ints(reciprocal(S(1, 1))) == [1, -1]
    assert reciprocal(S(2, 0, 0)).coeffs == (Fraction(1, 2), 0, 0)
    # A-sequence of ((1-x)/(1+x), x(1-x)/(1+x)); its reciprocal is fbar/x
    assert ints(reciprocal(S(1, -2, -2, -6, -22))) == [1, 2, 6, 22, 90]
    with pytest.raises(ZeroDivisionError):
        reciprocal(S(0, 1))


def test_compose_examples():
    s = S(3, 1, 4, 1, 5)
    assert compose(s, Series.x(5)) == s
    assert ints(compose(S(1, 1, 1, 1), S(0, 1, 1, 0))) == [1, 1, 2, 3]
    geo = expand(RatFunc((1,), (1, -1)), 5)
    assert ints(compose(geo, expand(RatFunc((0, 1), (1, 1)), 5))) == [1, 1, 0, 0, 0]
    with pytest.raises(ValueError):
        compose(s, S(1, 1))


def test_revert_examples():
    f = expand(RatFunc((0, 1), (1, -1)), 8)
    assert revert(f) == expand(RatFunc((0, 1), (1, 1)), 8)
    g = expand(RatFunc((0, 1, -1), (1, 1)), 7)
    assert ints(revert(g)) == [0, 1, 2, 6, 22, 90, 394]
    with pytest.raises(ValueError):
        revert(S(1, 1, 0))
    with pytest.raises(ValueError):
        revert(S(0, 0, 1))


def lagrange_revert(f: Series) -> Series:
    """[x^n] fbar = (1/n) [x^(n-1)] (x/f)^n."""
    n = f.order
    phi = reciprocal(f.shift_down())  # x/f, order n-1
    out = [Fraction(0)]
    for k in range(1, n):
        out.append((phi.truncate(k) ** k)[k - 1] / k)
    return Series(tuple(out))


def test_revert_matches_lagrange_inversion():
    f = expand(RatFunc((0, 1, -3), (1, 2, -1)), 12)
    assert revert(f) == lagrange_revert(f)


def test_sqrt_examples():
    assert ints(sqrt(S(1, 0, 0, 0))) == [1, 0, 0, 0]
    s = sqrt(expand(RatFunc((1, -6, 1)), 5))
    assert ints(s[:4]) == [1, -3, -4, -12]
    assert mul(s, s) == expand(RatFunc((1, -6, 1)), 5)
    with pytest.raises(ValueError):
        sqrt(S(4, 1))


def test_schroeder_from_sqrt():
    s = sqrt(expand(RatFunc((1, -6, 1)), 6))
    top = Series.constant(1, 6) - Series.x(6) - s
    assert ints(top.shift_down() / 2) == [1, 2, 6, 22, 90]


def test_ratfunc_str_and_eval():
    assert str(RatFunc((1, -1), (1, 1))) == "(1-x)/(1+x)"
    assert str(RatFunc((0, 1, -2), (1, 3))) == "(x-2*x^2)/(1+3*x)"
    assert RatFunc((1, -1), (1, 1))(Fraction(1, 2)) == Fraction(1, 3)
    assert RatFunc((2, 2), (2,)).equivalent(RatFunc((1, 1)))


# --- properties -------------------------------------------------------------

ORDER = 30

series_unit = st.lists(small_rat, min_size=ORDER - 1, max_size=ORDER - 1).map(
    lambda cs: Series((Fraction(1),) + tuple(cs)))
series_invertible = st.tuples(nonzero_rat, st.lists(small_rat, min_size=ORDER - 1, max_size=ORDER - 1)).map(
    lambda t: Series((t[0],) + tuple(t[1])))
series_revertible = st.tuples(nonzero_rat, st.lists(small_rat, min_size=ORDER - 2, max_size=ORDER - 2)).map(
    lambda t: Series((Fraction(0), t[0]) + tuple(t[1])))


@settings(max_examples=40, deadline=None)
@given(series_invertible)
def test_prop_reciprocal(a):
    one = mul(a, reciprocal(a))
    assert one == Series.constant(1, a.order)


@settings(max_examples=15, deadline=None)
@given(series_revertible)
def test_prop_revert_round_trip(f):
    fbar = revert(f)
    assert fbar.order == f.order
    assert compose(f, fbar) == Series.x(f.order)
    assert compose(fbar, f) == Series.x(f.order)


@settings(max_examples=25, deadline=None)
@given(series_unit)
def test_prop_sqrt_squares_back(a):
    s = sqrt(a)
    assert s[0] == 1
    assert mul(s, s) == a


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=0, max_size=2),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=0, max_size=2),
       st.integers(1, 12))
def test_prop_expand_is_multiplicative(n1, d1, n2, d2, n):
    r1 = RatFunc(tuple(n1), (1,) + tuple(d1))
    r2 = RatFunc(tuple(n2), (1,) + tuple(d2))
    assert expand(r1 * r2, n) == mul(expand(r1, n), expand(r2, n))


def test_binomial_series_coefficients():
    # (1-4x)^(1/2) = 1 - 2 sum Cat_{n-1} x^n
    s = sqrt(expand(RatFunc((1, -4)), 10))
    expected = [1] + [-2 * comb(2 * (k - 1), k - 1) // k for k in range(1, 10)]
    assert ints(s) == expected
