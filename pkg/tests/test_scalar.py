from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from majorana_codes.scalar import Scalar, parse_scalar

small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
scalars = st.builds(Scalar, small, small)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_str_roundtrip(a):
    assert parse_scalar(str(a)) == a
    assert parse_scalar(a.signed_str()) == a


@pytest.mark.parametrize(
    "value, text",
    [
        (Scalar(Fraction(3, 2)), "3/2"),
        (Scalar(0, Fraction(-1, 2)), "-1/2*i"),
        (Scalar(1, Fraction(1, 2)), "1+1/2*i"),
        (Scalar(0), "0"),
    ],
)
def test_formatting(value, text):
    assert str(value) == text


def test_i_powers_and_conjugate():
    i = Scalar(0, 1)
    assert i * i == -1
    assert Scalar.i_power(3) == -i
    assert Scalar(1, 2).conjugate() == Scalar(1, -2)
    assert Scalar(2).times_i_power(1) == Scalar(0, 2)
    assert parse_scalar("-i") == -i


def test_rejects_floats():
    with pytest.raises(TypeError):
        Scalar.coerce(0.5)
    with pytest.raises(ValueError):
        parse_scalar("1.5.2")
