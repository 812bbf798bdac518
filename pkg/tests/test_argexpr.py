from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g2theta import ArgExpr, make_period_matrix, parse_arg
from g2theta.argexpr import PERIODS, SWAP, SYMBOLS


@pytest.mark.parametrize(
    "text",
    ["y+y'+alpha", "tau1/2+tau12/2+1/2", "-3*u2/2+v1", "0", "y-y'", "-beta+alpha'+1/2", "2*tau2"],
)
def test_round_trip(text):
    assert str(parse_arg(text)) == text


def test_canonical_order():
    assert str(parse_arg("1/2 + tau12/2 + y")) == "y+tau12/2+1/2"


@pytest.mark.parametrize("bad", ["q", "y++z", "y*z", "1/2y"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_arg(bad)


def test_exact_arithmetic():
    half = ArgExpr.constant(Fraction(1, 2))
    assert half + half == ArgExpr.constant(1)
    assert (parse_arg("y+z") - parse_arg("z")) == ArgExpr.symbol("y")
    assert parse_arg("y").scale(0) == ArgExpr()


def test_substitute_and_evaluate():
    om = make_period_matrix(1j, 2j, 0.5j)
    e = parse_arg("y+alpha").substitute({"alpha": parse_arg("tau1/2+1/2")})
    assert str(e) == "y+tau1/2+1/2"
    assert e.evaluate({"y": 0.25}, om) == 0.75 + 0.5j


def test_unbound_symbol():
    with pytest.raises(KeyError):
        parse_arg("y").evaluate({}, make_period_matrix(1j, 2j, 0.5j))


def test_swap_is_involution():
    for k, v in SWAP.items():
        assert SWAP[v] == k


_names = st.sampled_from(SYMBOLS + PERIODS + ("1",))
_coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@given(st.dictionaries(_names, _coeffs, max_size=5))
def test_property_round_trip(mapping):
    expr = ArgExpr.from_dict(mapping)
    assert parse_arg(str(expr)) == expr
