import pytest

from hermgt.dimensions import (
    BudgetExceeded,
    dim_A,
    dim_B,
    dim_M,
    dim_report,
    kernel_dim_oracle,
    monogenic_dim,
    monogenic_dim_oracle,
    sum_identity,
)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 3), (4, 0)])
def test_grade_one_plane(a, b):
    assert dim_M(2, a, b, 1) == a + b + 2


def test_edge_values():
    assert dim_M(3, 0, 2, 0) == 6
    assert dim_M(3, 1, 2, 0) == 0
    assert [dim_M(3, a, 0, 3) for a in range(4)] == [1, 3, 6, 10]
    assert dim_M(2, 1, 0, 2) == 2


def test_derived_three_dimensional_case():
    assert dim_M(3, 1, 1, 1) == 15
    assert dim_A(3, 1, 1, 1) == 6
    assert dim_B(3, 1, 1, 1) == 4
    assert sum_identity(3, 1, 1, 1) == (15, 15)


def test_oracle_agrees_small():
    for n, a, b, r in [(1, 2, 0, 1), (2, 1, 2, 1), (3, 1, 1, 2), (2, 0, 3, 0)]:
        assert kernel_dim_oracle(n, a, b, r) == dim_M(n, a, b, r)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        kernel_dim_oracle(3, 3, 3, 1, budget=10)


def test_initial_data_need_two_variables():
    with pytest.raises(ValueError):
        dim_A(1, 1, 1, 1)


def test_report():
    rep = dim_report(2, 1, 1, 1, with_oracle=True)
    assert rep.agrees and rep.formula_dim == rep.oracle_dim == 4


def test_monogenic_dimension():
    assert [monogenic_dim(2, k) for k in range(4)] == [4, 12, 24, 40]
    assert monogenic_dim_oracle(2, 2) == 24
