import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourier_monodromy import (
    ExpClass,
    ExponentQ,
    ParseError,
    PolyScalar,
    WeylOp,
    bessel,
    parse_class,
    parse_exponent,
    parse_operator,
    parse_scalar,
    parse_zeta,
    print_operator,
)
from fourier_monodromy.zeta import ZetaFunction
from support import rand_operator, rand_zeta


def test_bessel_prints_canonically():
    assert print_operator(bessel()) == "z^2*d^2 + z*d + z^2 - nu^2"
    assert parse_operator("z^2*d^2 + z*d + z^2 - nu^2") == bessel()


def test_products_are_normal_ordered():
    assert print_operator(parse_operator("d*z")) == "z*d + 1"
    assert print_operator(parse_operator("th^2")) == "z^2*d^2 + z*d"
    assert print_operator(parse_operator("(d - 1)*(z + 1)")) == "z*d + d - z"


def test_zero_operator_and_leading_minus():
    assert print_operator(parse_operator("z - z")) == "0"
    assert parse_operator("-d") == WeylOp({(0, 1): -1})


def test_w_side_uses_w():
    P = parse_operator("w^2*d + 1/2", side="w")
    assert P.side == "w"
    assert print_operator(P) == "w^2*d + 1/2"
    with pytest.raises(ParseError):
        parse_operator("z*d", side="w")


@pytest.mark.parametrize(
    "text",
    ["", "z*", "2 z", "z^", "z^-1", "(z + 1", "z + )", "1/0", "d^a", "x$y", "z^1/2"],
)
def test_malformed_input_raises(text):
    with pytest.raises(ParseError):
        parse_operator(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_operator("z + + d")
    assert info.value.position == 4


def test_scalars_and_exponents():
    assert parse_scalar("(a + 1)^2") == (PolyScalar.param("a") + 1) ** 2
    assert parse_exponent("1/3 - alpha") == ExponentQ(F(1, 3)) - ExponentQ.param("alpha")
    with pytest.raises(ParseError):
        parse_exponent("alpha^2")
    with pytest.raises(ParseError):
        parse_scalar("z + 1")


def test_classes_round_trip():
    c = parse_class("e(-3*alpha + 4/3)")
    assert c == ExpClass(ExponentQ.param("alpha", -3) + F(1, 3))
    assert parse_class(str(c)) == c


def test_operator_round_trip_random():
    rng = random.Random(101)
    for i in range(300):
        side = "w" if i % 3 == 0 else "z"
        P = rand_operator(rng, side)
        assert parse_operator(print_operator(P), side) == P


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31))
def test_zeta_round_trip(seed):
    z = rand_zeta(random.Random(seed))
    assert parse_zeta(str(z)) == z


def test_zeta_literals():
    assert parse_zeta("1") == ZetaFunction.one()
    assert parse_zeta("1 - t^3") == ZetaFunction.factor(m=3)
    assert parse_zeta("(1 + t)") == ZetaFunction.factor(ExpClass(F(1, 2)))
    assert parse_zeta("e(1/2)*t^-2").power == -2
    with pytest.raises(ParseError):
        parse_zeta("(1 - t^0)")
    with pytest.raises(ParseError):
        parse_zeta("(2 - t)")
