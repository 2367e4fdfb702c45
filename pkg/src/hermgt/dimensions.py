"""Closed-form dimensions of the Hermitean monogenic spaces, plus a
brute-force kernel oracle that checks them independently."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fock import all_states
from .operators import apply_dirac, apply_upz, apply_upzd
from .poly import SpaceDescriptor, SpinorPolynomial, exponent_vectors, monomial_basis, monomial_count
from .scalar import ZERO, binomial, exact_rank

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "DimReport",
    "dim_M",
    "dim_A",
    "dim_B",
    "sum_identity",
    "kernel_dim_oracle",
    "monogenic_dim",
    "monogenic_dim_oracle",
    "dim_report",
]

DEFAULT_BUDGET = 4000


class BudgetExceeded(RuntimeError):
    """Brute-force computation refused: problem larger than the budget."""


def _desc(n, a, b, r) -> SpaceDescriptor:
    return SpaceDescriptor(n, a, b, r)


def dim_M(n: int, a: int, b: int, r: int) -> int:
    """Dimension of M^{(r)}_{a,b}(C^n)."""
    _desc(n, a, b, r)
    if r == 0:
        return binomial(n + b - 1, b) if a == 0 else 0
    if r == n:
        return binomial(n + a - 1, a) if b == 0 else 0
    val = (
        Fraction(r * (a + b + n), (a + r) * (b + n - r))
        * binomial(n - 1, r)
        * binomial(a + n - 1, a)
        * binomial(b + n - 1, b)
    )
    assert val.denominator == 1, (n, a, b, r, val)
    return int(val)


def dim_A(n: int, a: int, b: int, r: int) -> int:
    """Dimension of the A-type initial data space ``{p in P^{(r)}_{a,b}(C^{n-1}) : upz p = 0}``."""
    _desc(n, a, b, r)
    if n < 2:
        raise ValueError("initial data spaces need n >= 2")
    if 0 < r < n:
        val = Fraction(r, a + r) * binomial(n - 1, r) * binomial(a + n - 1, a) * binomial(b + n - 2, b)
        assert val.denominator == 1
        return int(val)
    if r == 0:
        # kernel of upz at grade 0 = antiholomorphic polynomials
        return dim_M(n - 1, a, b, 0)
    return 0  # r = n: grade n does not exist over C^{n-1}


def dim_B(n: int, a: int, b: int, r: int) -> int:
    """Dimension of the B-type initial data space (grade r-1 data over C^{n-1})."""
    _desc(n, a, b, r)
    if n < 2:
        raise ValueError("initial data spaces need n >= 2")
    if 0 < r < n:
        val = Fraction(r, b + n - r) * binomial(n - 1, r) * binomial(a + n - 2, a) * binomial(b + n - 1, b)
        assert val.denominator == 1
        return int(val)
    if r == n:
        # kernel of upzd at grade n-1 over C^{n-1} = holomorphic polynomials
        return dim_M(n - 1, a, b, n - 1)
    return 0


def sum_identity(n: int, a: int, b: int, r: int) -> tuple[int, int]:
    """Return ``(sum_j x_{a,j,r} + sum_i y_{i,b,r}, m_{a,b}^{(r)})``."""
    lhs = sum(dim_A(n, a, j, r) for j in range(b + 1)) + sum(dim_B(n, i, b, r) for i in range(a + 1))
    return lhs, dim_M(n, a, b, r)


def kernel_dim_oracle(n: int, a: int, b: int, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the joint kernel of upz and upzd on P^{(r)}_{a,b}(C^n),
    by exact rank of the stacked operator matrix."""
    d = _desc(n, a, b, r)
    count = monomial_count(d)
    if count > budget:
        raise BudgetExceeded(f"{count} monomials exceeds budget {budget}")
    basis = monomial_basis(d)
    columns = []
    for key in basis:
        P = SpinorPolynomial(n, {key: 1}, _trusted=False)
        columns.append((apply_upz(P), apply_upzd(P)))
    return count - operator_rank(columns)


def operator_rank(images) -> int:
    """Rank of a linear map given by the images of a basis.

    ``images`` holds one entry per basis vector; each entry is a
    polynomial or a tuple of polynomials (stacked outputs).
    """
    row_index: dict = {}
    cols = []
    for img in images:
        parts = img if isinstance(img, tuple) else (img,)
        col = {}
        for slot, P in enumerate(parts):
            for key, c in P.terms.items():
                idx = row_index.setdefault((slot, key), len(row_index))
                col[idx] = c
        cols.append(col)
    if not row_index:
        return 0
    # matrix with one row per basis vector: rank is transpose-invariant
    matrix = [[col.get(i, ZERO) for i in range(len(row_index))] for col in cols]
    return exact_rank(matrix)


def monogenic_dim(n: int, k: int) -> int:
    """Dimension of the k-homogeneous S_n-valued monogenic polynomials on R^{2n}."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return 2**n * binomial(k + 2 * n - 2, 2 * n - 2)


def monogenic_dim_oracle(n: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Kernel dimension of the Dirac operator on k-homogeneous spinor-valued
    polynomials, by exact rank."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    keys = [
        (v[:n], v[n:], K)
        for v in exponent_vectors(2 * n, k)
        for K in all_states(n)
    ]
    if len(keys) > budget:
        raise BudgetExceeded(f"{len(keys)} monomials exceeds budget {budget}")
    images = [apply_dirac(SpinorPolynomial(n, {key: 1})) for key in keys]
    return len(keys) - operator_rank(images)


@dataclass(frozen=True)
class DimReport:
    descriptor: SpaceDescriptor
    formula_dim: int
    oracle_dim: int | None = None

    @property
    def agrees(self) -> bool:
        return self.oracle_dim is None or self.oracle_dim == self.formula_dim


def dim_report(n: int, a: int, b: int, r: int, with_oracle: bool = False, budget: int = DEFAULT_BUDGET) -> DimReport:
    oracle = kernel_dim_oracle(n, a, b, r, budget) if with_oracle else None
    return DimReport(_desc(n, a, b, r), dim_M(n, a, b, r), oracle)
