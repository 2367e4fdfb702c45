import pytest

from hermgt.ck import InitialDatum
from hermgt.gt import closed_form_n2
from hermgt.poly import SpaceDescriptor, SpinorPolynomial
from hermgt.scalar import GaussianRational
from hermgt.verify import (
    appell_check,
    ck_restriction_check,
    closed_form_agreement,
    data_for,
    derivative_matrix,
    edge_agreement,
    edge_derivative_check,
    lattice_check,
    scalar_multiple,
)

ONE, MINUS = GaussianRational(1), GaussianRational(-1)


def test_appell_small():
    rep = appell_check(2, 2)
    assert rep.passed
    assert rep.info["identities"]["i"] > 0


def test_edge_rules():
    assert edge_derivative_check(3, max_n=3).passed


def test_zbar2_matrix_shape():
    M = derivative_matrix("zb2", SpaceDescriptor(2, 1, 1, 1))
    assert M.shape == (3, 4)
    assert M.column_ok()
    zero_cols = [c for c in range(4) if not any(M.entries[r][c] for r in range(3))]
    assert len(zero_cols) == 1


def test_zbar1_matrix_entries():
    M = derivative_matrix("zb1", SpaceDescriptor(2, 1, 1, 1))
    flat = {x for row in M.entries for x in row}
    assert flat <= {GaussianRational(0), MINUS}
    assert M.column_ok()


def test_matrix_into_zero_space():
    M = derivative_matrix("z1", SpaceDescriptor(2, 0, 2, 1))
    assert M.target is None and M.entries == ()


def test_matrix_bad_arguments():
    with pytest.raises(ValueError):
        derivative_matrix("z3", SpaceDescriptor(2, 1, 1, 1))
    with pytest.raises(ValueError):
        derivative_matrix("z1", SpaceDescriptor(3, 1, 1, 1))


def test_lattice_grade_one_plane():
    L = lattice_check(2, 2, 1, 1)
    assert L.passed
    assert L.interlacing == {(m,) for m in range(-1, 4)}


def test_lattice_generic_count():
    L = lattice_check(4, 1, 1, 2)
    assert L.generic and L.passed
    assert L.nonzero_components == 8


def test_lattice_boundary_grade_reports_only():
    L = lattice_check(3, 1, 1, 1)
    assert L.passed and not L.generic
    assert L.nonzero_components < L.grid_count
    assert L.to_json()["missing"] == []


def test_ck_restriction_single_and_summed():
    data = data_for(3, 1, 1, 1)
    assert ck_restriction_check(data).passed
    assert all(ck_restriction_check([d]).passed for d in data)


def test_ck_restriction_requires_common_target():
    target = SpaceDescriptor(2, 1, 1, 1)
    good = InitialDatum("A", 0, target, SpinorPolynomial.monomial(1, (1,), (1,), (1,)))
    rep = ck_restriction_check([good])
    assert rep.passed
    with pytest.raises(ValueError):
        ck_restriction_check([good, InitialDatum("A", 0, SpaceDescriptor(2, 1, 2, 1), good.payload)])


def test_scalar_multiple():
    P = closed_form_n2(1, 1, 1)
    assert scalar_multiple(P.scale(-3), P) == GaussianRational(-3)
    assert scalar_multiple(P, closed_form_n2(1, 1, 0)) is None
    assert scalar_multiple(SpinorPolynomial.zero(2), P) is None


def test_closed_form_scalars_recorded():
    rep = closed_form_agreement(1, 1)
    assert rep.passed
    assert rep.info["scalars"][1] == "-1"


def test_edge_agreement_sign():
    rep = edge_agreement(2, 2, 0, 2)
    assert rep.passed
    assert rep.info["ck_scalars"] == ["-1"]
