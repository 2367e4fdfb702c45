"""Fischer inner product, Gram matrices and orthogonality verdicts.

Monomials ``z^alpha zbar^beta K`` are mutually orthogonal with squared norm
``alpha! beta!``; Fock states are orthonormal. The product is
conjugate-linear in the first slot.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import SpinorPolynomial
from .scalar import ZERO, GaussianRational, factorial

__all__ = ["fischer", "GramMatrix", "gram", "is_orthogonal", "monomial_weight"]


def monomial_weight(key: tuple) -> int:
    z, zb, _ = key
    w = 1
    for e in z:
        w *= factorial(e)
    for e in zb:
        w *= factorial(e)
    return w


def fischer(P: SpinorPolynomial, Q: SpinorPolynomial) -> GaussianRational:
    if P.n != Q.n:
        raise ValueError(f"dimension mismatch: n={P.n} vs n={Q.n}")
    small, large = (P, Q) if len(P.terms) <= len(Q.terms) else (Q, P)
    acc = ZERO
    for key, c in small.terms.items():
        d = large.terms.get(key)
        if d is None:
            continue
        if small is P:
            acc = acc + c.conjugate() * d * monomial_weight(key)
        else:
            acc = acc + d.conjugate() * c * monomial_weight(key)
    return acc


@dataclass(frozen=True)
class GramMatrix:
    labels: tuple
    entries: tuple  # tuple of row tuples

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_diagonal(self) -> bool:
        return all(
            not self.entries[i][j] for i in range(self.size) for j in range(self.size) if i != j
        )

    def diagonal(self) -> list[GaussianRational]:
        return [self.entries[i][i] for i in range(self.size)]

    def is_hermitean(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i].conjugate()
            for i in range(self.size)
            for j in range(i, self.size)
        )

    def has_positive_diagonal(self) -> bool:
        return all(d.im == 0 and d.re > 0 for d in self.diagonal())

    def off_diagonal_nonzeros(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.size)
            for j in range(self.size)
            if i != j and self.entries[i][j]
        ]

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.entries]


def gram(family) -> GramMatrix:
    """Gram matrix of a basis family (or a plain sequence of polynomials)."""
    polys, labels = _unpack(family)
    if polys:
        n = polys[0].n
        if any(p.n != n for p in polys):
            raise ValueError("family mixes ambient dimensions")
    desc = getattr(family, "descriptor", None)
    if desc is not None and any(not p.conforms_to(desc) for p in polys):
        raise ValueError("family members do not share the family descriptor")
    size = len(polys)
    rows = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            v = fischer(polys[i], polys[j])
            rows[i][j] = v
            rows[j][i] = v.conjugate()
    return GramMatrix(tuple(labels), tuple(tuple(r) for r in rows))


def is_orthogonal(family) -> bool:
    return gram(family).is_diagonal()


def _unpack(family) -> tuple[list[SpinorPolynomial], list]:
    members = getattr(family, "members", None)
    if members is not None:
        return [p for _, p in members], [lab for lab, _ in members]
    polys: Sequence[SpinorPolynomial] = list(family)
    return list(polys), list(range(len(polys)))
