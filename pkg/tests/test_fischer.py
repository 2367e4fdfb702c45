import pytest
from hypothesis import given, settings

from helpers import polynomials
from hermgt.fischer import fischer, gram, is_orthogonal
from hermgt.poly import SpinorPolynomial
from hermgt.scalar import I_UNIT, GaussianRational


def test_monomial_norm():
    P = SpinorPolynomial.monomial(2, (2, 0), (0, 3), (1,))
    assert fischer(P, P) == GaussianRational(2 * 6)


def test_distinct_states_orthogonal():
    assert fischer(SpinorPolynomial.spinor(2, (1,)), SpinorPolynomial.spinor(2, (2,))) == 0


def test_conjugate_linear_first_slot():
    P = SpinorPolynomial.spinor(1, ())
    assert fischer(P.scale(I_UNIT), P) == -I_UNIT
    assert fischer(P, P.scale(I_UNIT)) == I_UNIT


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        fischer(SpinorPolynomial.spinor(1), SpinorPolynomial.spinor(2))


@given(polynomials(n=2), polynomials(n=2))
def test_hermitean_symmetry(P, Q):
    assert fischer(P, Q) == fischer(Q, P).conjugate()


@given(polynomials())
def test_positivity(P):
    v = fischer(P, P)
    assert v.is_real()
    assert (v.re > 0) == (not P.is_zero())


@given(polynomials(n=2), polynomials(n=2))
@settings(max_examples=50)
def test_phase_substitution(P, Q):
    # z -> i z, zbar -> -i zbar
    Pu, Qu = P.substitute_phase(I_UNIT), Q.substitute_phase(I_UNIT)
    assert fischer(Pu, Pu) == fischer(P, P)
    before, after = fischer(P, Q), fischer(Pu, Qu)
    assert (before == 0) == (after == 0)
    if before:
        assert (after / before).norm2() == 1


def test_gram_of_list():
    polys = [SpinorPolynomial.spinor(2, ()), SpinorPolynomial.spinor(2, (1,)), SpinorPolynomial.spinor(2, ()).scale(2)]
    g = gram(polys)
    assert g.is_hermitean()
    assert not g.is_diagonal()
    assert g.off_diagonal_nonzeros() == [(0, 2), (2, 0)]
    assert is_orthogonal(polys[:2])
