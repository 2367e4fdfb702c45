from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hermgt.scalar import (
    I_UNIT,
    ONE,
    ZERO,
    GaussianRational,
    binomial,
    exact_rank,
    factorial,
    rational_from_str,
    rational_to_str,
)

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
gaussians = st.builds(GaussianRational, fractions, fractions)


def test_imaginary_unit_squares_to_minus_one():
    assert I_UNIT * I_UNIT == -ONE
    assert (I_UNIT ** 4) == ONE


def test_division_and_zero_division():
    z = GaussianRational(1, 2)
    assert z / z == ONE
    assert ONE / GaussianRational(0, 1) == -I_UNIT
    with pytest.raises(ZeroDivisionError):
        z / ZERO


def test_text_rendering():
    assert str(GaussianRational(2, -3)) == "2-3i"
    assert str(GaussianRational(Fraction(1, 2))) == "1/2"


def test_json_schema():
    z = GaussianRational(Fraction(-3, 4), Fraction(5))
    assert z.to_json() == {"re": "-3/4", "im": "5"}
    assert GaussianRational.from_json(z.to_json()) == z


def test_rational_strings():
    assert rational_to_str(Fraction(6, -4)) == "-3/2"
    assert rational_from_str("-3/2") == Fraction(-3, 2)


def test_binomial_conventions():
    assert binomial(3, 5) == 0
    assert binomial(5, 2) == 10
    assert factorial(0) == 1 and factorial(4) == 24


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[ONE, I_UNIT], [I_UNIT, -ONE]]) == 1
    assert exact_rank([[ONE, I_UNIT], [I_UNIT, ONE]]) == 2
    assert exact_rank([]) == 0


@given(gaussians, gaussians, gaussians)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * x.conjugate()) == GaussianRational(x.norm2())
    if y:
        assert (x / y) * y == x


@given(gaussians)
def test_hash_matches_equality(x):
    assert hash(x) == hash(GaussianRational(x.re, x.im))
