import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordanlab import INFINITY, Field, Series
from riordanlab.errors import (
    InnerValuationZero,
    NotInvertible,
    NotValuationOne,
)


def S(field, order, *vals):
    return Series.from_values(field, order, vals)


def test_valuation(QQ):
    assert S(QQ, 4, 1, 1).valuation() == 0
    assert S(QQ, 4, 0, 0, 1, 1).valuation() == 2
    assert Series.zero(QQ, 4).valuation() == INFINITY


def test_mul(QQ):
    one_plus = S(QQ, 4, 1, 1)
    one_minus = S(QQ, 4, 1, -1)
    assert one_plus * one_minus == S(QQ, 4, 1, 0, -1)
    s = S(QQ, 4, 2, 0, 5)
    assert s * Series.one(QQ, 4) == s
    # telescoping: (sum y^n)(1 - y) = 1 at any order
    geom = S(QQ, 6, *([1] * 6))
    assert geom * S(QQ, 6, 1, -1) == Series.one(QQ, 6)


def test_invert(QQ):
    assert S(QQ, 5, 1, -1).invert() == S(QQ, 5, *([1] * 5))
    assert Series.one(QQ, 4).invert() == Series.one(QQ, 4)
    with pytest.raises(NotInvertible):
        S(QQ, 4, 0, 1, 1).invert()


def test_compose(QQ):
    expish = S(QQ, 4, "1", "1", "1/2", "1/6")
    assert expish.compose(Series.identity(QQ, 4)) == expish
    # (y + y^2)^2 = y^2 + 2 y^3 + y^4, truncated at order 4
    assert S(QQ, 4, 0, 0, 1).compose(S(QQ, 4, 0, 1, 1)) == S(QQ, 4, 0, 0, 1, 2)
    with pytest.raises(InnerValuationZero):
        expish.compose(S(QQ, 4, 1, 1))


def test_comp_inverse(QQ):
    y = Series.identity(QQ, 4)
    assert y.comp_inverse() == y
    # back-substitution by hand: g2 = -1, g3 = 2
    assert S(QQ, 4, 0, 1, 1).comp_inverse() == S(QQ, 4, 0, 1, -1, 2)
    assert S(QQ, 4, 0, 2).comp_inverse() == S(QQ, 4, 0, "1/2")
    with pytest.raises(NotValuationOne):
        S(QQ, 4, 1, 1).comp_inverse()
    with pytest.raises(NotValuationOne):
        S(QQ, 4, 0, 0, 1).comp_inverse()


def test_comp_inverse_is_two_sided(QQ):
    b = S(QQ, 6, 0, 3, -1, "1/2", 0, 2)
    g = b.comp_inverse()
    y = Series.identity(QQ, 6)
    assert b.compose(g) == y
    assert g.compose(b) == y


def test_json_roundtrip(QQ, F7):
    s = S(QQ, 4, "1/2", "-3", 0, "7")
    assert Series.from_json(QQ, s.to_json()) == s
    t = S(F7, 4, 1, 6, 3)
    assert Series.from_json(F7, t.to_json()) == t


def _coeff_lists(order):
    return st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
        min_size=order,
        max_size=order,
    )


@settings(max_examples=50, deadline=None)
@given(_coeff_lists(6), _coeff_lists(6))
def test_valuation_multiplicative(a, b):
    f = Field()
    x, y = Series.from_values(f, 6, a), Series.from_values(f, 6, b)
    va, vb = x.valuation(), y.valuation()
    if va + vb < 6:
        assert (x * y).valuation() == va + vb


@settings(max_examples=30, deadline=None)
@given(_coeff_lists(5), _coeff_lists(4), _coeff_lists(4))
def test_compose_associative(a, b, c):
    f = Field()
    outer = Series.from_values(f, 5, a)
    g = Series.from_values(f, 5, [0] + b)
    h = Series.from_values(f, 5, [0] + c)
    assert outer.compose(g).compose(h) == outer.compose(g.compose(h))


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=1, max_value=4, max_denominator=3), _coeff_lists(4))
def test_comp_inverse_involution(lead, rest):
    f = Field()
    b = Series.from_values(f, 6, [0, lead] + rest)
    assert b.comp_inverse().comp_inverse() == b


@settings(max_examples=40, deadline=None)
@given(_coeff_lists(6), _coeff_lists(6))
def test_inverse_of_product(a, b):
    f = Field()
    x, y = Series.from_values(f, 6, a), Series.from_values(f, 6, b)
    if x.coeff(0) and y.coeff(0):
        assert (x * y).invert() == y.invert() * x.invert()


def test_order_bounds(QQ):
    import pytest

    with pytest.raises(ValueError):
        Series(QQ, [QQ.one()])
    with pytest.raises(ValueError):
        Series.zero(QQ, 65)
