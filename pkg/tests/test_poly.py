import random

import pytest
from hypothesis import given, settings

from helpers import polynomials, random_polynomial
from hermgt.poly import SpaceDescriptor, SpinorPolynomial, monomial_basis, monomial_count, normalized_monomial
from hermgt.scalar import GaussianRational


def test_descriptor_validation():
    with pytest.raises(ValueError):
        SpaceDescriptor(2, 1, 1, 3)
    with pytest.raises(ValueError):
        SpaceDescriptor(0, 0, 0, 0)
    assert str(SpaceDescriptor(2, 1, 1, 1)) == "M^(1)_{1,1}(C^2)"


def test_partial_and_multiplication():
    P = SpinorPolynomial.monomial(2, (2, 0), (0, 1), (1,), 3)
    assert P.partial(1) == SpinorPolynomial.monomial(2, (1, 0), (0, 1), (1,), 6)
    assert P.partial(2).is_zero()
    assert P.mul_var(2, conjugated=True) == SpinorPolynomial.monomial(2, (2, 0), (0, 2), (1,), 3)


def test_bidegree_and_grade():
    P = SpinorPolynomial.monomial(2, (1, 0), (0, 1), (1,)) + SpinorPolynomial.monomial(2, (0, 1), (1, 0), (2,))
    assert P.bidegree() == (1, 1)
    assert P.grade() == 1
    assert P.conforms_to(SpaceDescriptor(2, 1, 1, 1))
    mixed = P + SpinorPolynomial.spinor(2, ())
    assert mixed.grade() is None


def test_restrict_and_embed():
    # f†_2 sits behind f†_1, so peeling it off costs one sign
    P = SpinorPolynomial.monomial(2, (1, 0), (0, 0), (1, 2))
    p0, p1 = P.restrict_last()
    assert p0.is_zero()
    assert p1 == -SpinorPolynomial.monomial(1, (1,), (0,), (1,))
    assert p1.embed(2).n == 2
    assert P.mul_var(2).restrict_last() == (SpinorPolynomial.zero(1), SpinorPolynomial.zero(1))


def test_normalized_monomial():
    P = normalized_monomial(1, (3,), (0,), (1,))
    assert P.to_text() == "1/6*z1^3*f+1*I"


def test_monomial_basis_count():
    d = SpaceDescriptor(3, 2, 1, 1)
    assert len(monomial_basis(d)) == monomial_count(d) == 6 * 3 * 3


def test_text_and_latex():
    P = SpinorPolynomial.monomial(2, (1, 0), (0, 1), (1,), GaussianRational(-1, 0))
    assert P.to_text() == "-z1*zb2*f+1*I"
    assert "\\bar{z}_{2}" in P.to_latex()


@given(polynomials())
def test_json_roundtrip(P):
    assert SpinorPolynomial.from_json(P.to_json()) == P


@given(polynomials(), polynomials())
@settings(max_examples=50)
def test_addition_commutes(P, Q):
    if P.n == Q.n:
        assert P + Q == Q + P
        assert (P - P).is_zero()


def test_dimension_mismatch():
    rng = random.Random(1)
    with pytest.raises(ValueError):
        random_polynomial(rng, 2) + random_polynomial(rng, 3)
