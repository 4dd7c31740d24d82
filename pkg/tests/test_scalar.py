from fractions import Fraction

import pytest
from hypothesis import given

from toricpoisson.scalar import I, ONE, ZERO, Scalar, parse_scalar
from conftest import scalars


def test_lowest_terms():
    s = Scalar(Fraction(4, 8), Fraction(-6, 4))
    assert s.re == Fraction(1, 2)
    assert s.im == Fraction(-3, 2)
    assert s.re.denominator == 2


def test_i_squared():
    assert I * I == -ONE
    assert (1 + I) * (1 - I) == 2


def test_division():
    z = Scalar(3, 4)
    assert z / z == ONE
    assert (ONE / z) == Scalar(Fraction(3, 25), Fraction(-4, 25))
    with pytest.raises(ZeroDivisionError):
        z / ZERO


def test_equality_with_numbers():
    assert Scalar(2) == 2
    assert Scalar(Fraction(1, 3)) == Fraction(1, 3)
    assert Scalar(1, 1) != 1
    assert hash(Scalar(Fraction(1, 3))) == hash(Fraction(1, 3))


@pytest.mark.parametrize(
    "text,value",
    [
        ("3", Scalar(3)),
        ("-1/2", Scalar(Fraction(-1, 2))),
        ("2i", Scalar(0, 2)),
        ("-i", Scalar(0, -1)),
        ("1-i", Scalar(1, -1)),
        ("1/2+3/4i", Scalar(Fraction(1, 2), Fraction(3, 4))),
        ("2+i", Scalar(2, 1)),
        ("0", ZERO),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "i2", "1-", "1/0", "a", "1//2", "3 4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(scalars())
def test_str_round_trip(z):
    assert parse_scalar(str(z)) == z


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
