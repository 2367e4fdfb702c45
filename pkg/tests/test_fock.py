import pytest
from hypothesis import given, strategies as st

from hermgt.fock import (
    SpinorVector,
    all_states,
    annihilate,
    create,
    euclid_generator,
    join_last,
    split_last,
    spinor_index,
)
from hermgt.scalar import GaussianRational


def test_creation_sign():
    v = SpinorVector.state(3, (1, 3))
    assert create(2, v) == -1 * SpinorVector.state(3, (1, 2, 3))
    assert create(1, v) == SpinorVector(3)


def test_annihilate_vacuum_is_zero():
    assert not annihilate(1, SpinorVector.vacuum(2))


def test_index_errors():
    with pytest.raises(IndexError):
        create(4, SpinorVector.vacuum(3))
    with pytest.raises(IndexError):
        euclid_generator(7, 3)
    with pytest.raises(ValueError):
        spinor_index((2, 2), 3)


def test_state_count():
    assert len(all_states(3)) == 8
    assert all_states(3, 2) == [(1, 2), (1, 3), (2, 3)]


def _vectors(n):
    coeff = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3))
    return st.dictionaries(st.sampled_from(all_states(n)), coeff, max_size=6).map(lambda d: SpinorVector(n, d))


@given(st.data())
def test_anticommutation(data):
    n = data.draw(st.integers(1, 3))
    v = data.draw(_vectors(n))
    j = data.draw(st.integers(1, n))
    k = data.draw(st.integers(1, n))
    assert create(j, create(k, v)) + create(k, create(j, v)) == SpinorVector(n)
    assert annihilate(j, annihilate(k, v)) + annihilate(k, annihilate(j, v)) == SpinorVector(n)
    dual = annihilate(j, create(k, v)) + create(k, annihilate(j, v))
    assert dual == (v if j == k else SpinorVector(n))


@given(st.data())
def test_clifford_generator_relations(data):
    n = data.draw(st.integers(1, 3))
    v = data.draw(_vectors(n))
    al = data.draw(st.integers(1, 2 * n))
    be = data.draw(st.integers(1, 2 * n))
    ea, eb = euclid_generator(al, n), euclid_generator(be, n)
    lhs = ea(eb(v)) + eb(ea(v))
    assert lhs == (-2 * v if al == be else SpinorVector(n))


@given(st.data())
def test_split_join_roundtrip(data):
    n = data.draw(st.integers(1, 3))
    v = data.draw(_vectors(n))
    f0, f1 = split_last(v)
    assert f0.n == n - 1
    assert join_last(f0, f1) == v
