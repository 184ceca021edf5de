from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.errors import ContextMismatch
from artifact.series import SeriesContext, TruncatedSeries as T

CTX = SeriesContext.make(("s", "t"), 4)


def mono(m, c, a=1):
    return T.monomial(CTX, m, c, a)


def test_truncation_drops_high_order():
    f = (1 + mono((1, 0), {"s": 1})) ** 5
    assert max(CTX.order(c) for (_, _, c) in f.terms) == 4
    assert f.coefficient((4, 0), {"s": 4}) == 5


def test_inverse_and_log_exp():
    f = 1 + mono((1, 0), {"s": 1}) + mono((0, 1), {"t": 1})
    assert f * f.inverse() == T.one(CTX)
    g = mono((1, 1), {"s": 1, "t": 1})
    assert (1 + g).log().exp() == 1 + g


def test_fractional_power():
    f = 1 + mono((1, 0), {"s": 1})
    h = f.power(F(1, 2))
    assert h * h == f


def test_context_mismatch():
    other = SeriesContext.make(("u",), 4)
    with pytest.raises(ContextMismatch):
        T.one(CTX) + T.one(other)


def test_render_truncates():
    f = (1 + mono((1, 0), {"s": 1})) ** 3
    assert f.render(2).count("+") >= 1
    assert len(f.render(3)) < len(f.render())


coef = st.integers(-3, 3)


@st.composite
def series(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        cs, ct = draw(st.integers(0, 2)), draw(st.integers(0, 2))
        mx, my = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
        terms[(mx, my, (cs, ct))] = F(draw(coef))
    return T(CTX, terms)


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@settings(max_examples=40, deadline=None)
@given(series())
def test_roundtrip_data(a):
    assert T.from_data(CTX, a.to_data()) == a
