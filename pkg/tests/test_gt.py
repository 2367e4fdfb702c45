import json
from fractions import Fraction
from math import factorial

import pytest

from hermgt.dimensions import dim_M
from hermgt.fischer import gram
from hermgt.fock import all_states
from hermgt.gt import (
    BasisFamily,
    GTLabel,
    closed_form_n2,
    edge_closed_form,
    gt_basis,
    interlacing_set,
    interlaces,
    monogenic_basis,
    weight_of,
)
from hermgt.operators import apply_dirac, is_hermitean_monogenic
from hermgt.poly import SpinorPolynomial


def _m(z, zb, K=(), c=1):
    return SpinorPolynomial.monomial(2, z, zb, K, c)


def test_weights():
    assert weight_of(3, 2, 1, 2) == (4, -2)
    assert weight_of(0, 5, 0, 3) == (0, 0, -5)
    assert weight_of(2, 0, 3, 3) == (3, 1, 1)
    assert weight_of(1, 1, 2, 4) == (2, 1, 0, -1)


def test_interlacing():
    assert interlaces((2, 0, -1), (1, 0))
    assert not interlaces((2, 0, -1), (1, 1))
    assert interlacing_set((2, -1)) == {(2,), (1,), (0,), (-1,)}


def test_single_variable_base_case():
    fam = gt_basis(1, 0, 3, 0)
    assert len(fam) == 1
    lab, P = fam.members[0]
    assert lab.weights == ((-3,),)
    assert P.to_text() == "1/6*zb1^3*I"


def test_antiholomorphic_plane():
    b = 3
    fam = gt_basis(2, 0, b, 0)
    assert len(fam) == b + 1
    for lab, P in fam.members:
        j = lab.weights[1][0] + b
        expected = SpinorPolynomial.monomial(2, (0, 0), (b - j, j), ())
        assert P == expected.scale(Fraction(1, factorial(j) * factorial(b - j)))


def test_grade_one_plane_anchor():
    fam = gt_basis(2, 1, 1, 1)
    by_mu = {lab.weights[1][0]: P for lab, P in fam.members}
    assert sorted(by_mu) == [-1, 0, 1, 2]
    closed = (_m((0, 1), (0, 1), (1,)) - _m((1, 0), (1, 0), (1,))) + _m((1, 0), (0, 1), (2,))
    assert by_mu[1] == -closed


@pytest.mark.parametrize(
    "a,b,mu,expected",
    [
        (0, 0, 1, SpinorPolynomial.spinor(2, (1,))),
        (0, 0, 0, SpinorPolynomial.spinor(2, (2,))),
        (1, 0, 1, _m((1, 0), (0, 0), (2,)) + _m((0, 1), (0, 0), (1,))),
        (1, 0, 3, SpinorPolynomial.zero(2)),
        (-1, 0, 0, SpinorPolynomial.zero(2)),
    ],
)
def test_closed_forms(a, b, mu, expected):
    assert closed_form_n2(a, b, mu) == expected


def test_closed_form_derivatives():
    P = closed_form_n2(1, 1, 1)
    assert P.partial(2, True) == closed_form_n2(1, 0, 1)
    assert P.partial(1, True) == -closed_form_n2(1, 0, 2)
    assert P.partial(1, True) == -_m((1, 0), (0, 0), (1,))


def test_empty_family():
    fam = gt_basis(3, 1, 1, 0)
    assert len(fam) == 0
    assert gram(fam).size == 0


@pytest.mark.parametrize("n,a,b,r", [(3, 1, 1, 1), (3, 2, 1, 2), (4, 1, 1, 2), (3, 0, 2, 0), (3, 2, 0, 3)])
def test_family_invariants(n, a, b, r):
    fam = gt_basis(n, a, b, r)
    assert len(fam) == dim_M(n, a, b, r)
    assert len(set(fam.labels)) == len(fam)
    top = weight_of(a, b, r, n)
    for lab, P in fam.members:
        assert lab.weights[0] == top and lab.is_interlacing()
        assert len(lab.weights) == n
        assert is_hermitean_monogenic(P)
        assert P.conforms_to(fam.descriptor)
    g = gram(fam)
    assert g.is_diagonal() and g.has_positive_diagonal()


def test_json_roundtrip_and_determinism():
    fam = gt_basis(3, 1, 1, 1)
    data = fam.to_json()
    assert BasisFamily.from_json(json.loads(json.dumps(data))) == fam
    assert json.dumps(gt_basis.__wrapped__(3, 1, 1, 1).to_json(), sort_keys=True) == json.dumps(data, sort_keys=True)


def test_label_text():
    lab = GTLabel(((2, -1), (1,)))
    assert str(lab) == "(2,-1)(1)"
    assert GTLabel.from_json(lab.to_json()) == lab


def test_edge_display_holomorphic():
    fam = edge_closed_form(2, 2, 0, 2)
    assert [P.to_text() for _, P in fam.members] == ["1/2*z1^2*f+1*f+2*I", "z1*z2*f+1*f+2*I", "1/2*z2^2*f+1*f+2*I"]


def test_monogenic_degree_one():
    B = monogenic_basis(2, 1)
    assert len(B) == 12
    embedded = [P for _, P, emb, _ in B.members if emb]
    assert len(embedded) == 2
    target = _m((1, 0), (0, 0), ()) - _m((0, 0), (0, 1), (1, 2))
    assert target in embedded
    for _, P, emb, _ in B.members:
        assert apply_dirac(P).is_zero()
        assert is_hermitean_monogenic(P) != emb


def test_monogenic_degree_zero():
    B = monogenic_basis(3, 0)
    assert len(B) == 8
    assert {tuple(P.terms) for P in B.polynomials} == {(((0,) * 3, (0,) * 3, K),) for K in all_states(3)}
