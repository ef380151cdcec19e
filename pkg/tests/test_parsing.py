import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from darbouxp.errors import ParseError, UnknownVariable
from darbouxp.parsing import parse_polynomial
from darbouxp.poly import Polynomial, RingContext


def test_examples(R2):
    assert parse_polynomial("y^3 + x*y", R2) == R2.var(1) ** 3 + R2.var(0) * R2.var(1)
    assert parse_polynomial("3*x", R2) == R2.var(0)
    with pytest.raises(UnknownVariable) as info:
        parse_polynomial("x + z", R2)
    assert info.value.name == "z" and info.value.position == 4


def test_precedence():
    R = RingContext.create(7, "x y")
    assert R.parse("-x^2") == -(R.var(0) ** 2)
    assert R.parse("2*(x+y)^2") == R.const(2) * (R.var(0) + R.var(1)) ** 2
    assert R.parse("x - -y") == R.var(0) + R.var(1)
    assert R.parse("x^0") == R.one()
    assert R.parse("10") == R.const(3)


@pytest.mark.parametrize(
    "text,pos",
    [("x y", 2), ("x +", 3), ("2x", 1), ("x^y", 2), ("(x", 2), ("x $ y", 2), ("", 0), ("x^-1", 2)],
)
def test_syntax_errors_carry_position(R2, text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, R2)
    assert info.value.position == pos


@st.composite
def polys(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    ctx = RingContext.create(p, ["x", "y", "z"])
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 5)] * 3), st.integers(0, p - 1), max_size=8))
    return Polynomial(ctx, terms)


@settings(max_examples=300, deadline=None)
@given(polys())
def test_round_trip(f):
    assert parse_polynomial(str(f), f.ctx) == f
