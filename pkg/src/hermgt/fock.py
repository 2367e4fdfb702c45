"""Spinor space as a fermionic Fock space.

A basis state is a sorted tuple ``K = (k1 < ... < kr)`` standing for the
wedge monomial ``f†_k1 ... f†_kr I``; the empty tuple is the vacuum ``I``.
The Witt generators act by creation (``f†_j``) and annihilation (``f_j``),
with the sign counting occupied modes below ``j``.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .scalar import ONE, ZERO, I_UNIT, as_gaussian

__all__ = [
    "SpinorIndex",
    "SpinorVector",
    "spinor_index",
    "create_state",
    "annihilate_state",
    "create",
    "annihilate",
    "euclid_generator",
    "split_last",
    "join_last",
    "all_states",
]

SpinorIndex = tuple  # sorted tuple of ints in 1..n


def spinor_index(K: Iterable[int], n: int) -> tuple:
    """Validate and canonicalize a spinor index."""
    K = tuple(K)
    if list(K) != sorted(set(K)):
        raise ValueError(f"spinor index {K} must be strictly increasing")
    if K and (K[0] < 1 or K[-1] > n):
        raise ValueError(f"spinor index {K} out of range 1..{n}")
    return K


def _below(K: tuple, j: int) -> int:
    c = 0
    for k in K:
        if k >= j:
            break
        c += 1
    return c


def create_state(j: int, K: tuple):
    """``f†_j K`` as ``(sign, K')`` or ``None`` when ``j`` is occupied."""
    if j in K:
        return None
    c = _below(K, j)
    return (-1 if c & 1 else 1), K[:c] + (j,) + K[c:]


def annihilate_state(j: int, K: tuple):
    """``f_j K`` as ``(sign, K')`` or ``None`` when ``j`` is empty."""
    if j not in K:
        return None
    c = _below(K, j)
    return (-1 if c & 1 else 1), K[:c] + K[c + 1:]


def all_states(n: int, grade: int | None = None) -> list[tuple]:
    """All basis states of S_n (optionally of one grade), in a fixed order."""
    from itertools import combinations

    grades = range(n + 1) if grade is None else [grade]
    out = []
    for r in grades:
        out.extend(combinations(range(1, n + 1), r))
    return out


class SpinorVector:
    """Finite linear combination of Fock states of S_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple, object] | None = None):
        self.n = n
        clean = {}
        for K, c in (coeffs or {}).items():
            c = as_gaussian(c)
            if c:
                clean[spinor_index(K, n)] = c
        self.coeffs = clean

    @classmethod
    def state(cls, n: int, K: Iterable[int] = ()) -> "SpinorVector":
        return cls(n, {tuple(K): ONE})

    @classmethod
    def vacuum(cls, n: int) -> "SpinorVector":
        return cls.state(n, ())

    def __eq__(self, other):
        if not isinstance(other, SpinorVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other: "SpinorVector") -> "SpinorVector":
        _check_n(self, other)
        out = dict(self.coeffs)
        for K, c in other.coeffs.items():
            out[K] = out.get(K, ZERO) + c
        return SpinorVector(self.n, out)

    def __sub__(self, other: "SpinorVector") -> "SpinorVector":
        return self + (-other)

    def __neg__(self):
        return SpinorVector(self.n, {K: -c for K, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        s = as_gaussian(scalar)
        return SpinorVector(self.n, {K: s * c for K, c in self.coeffs.items()})

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"({c})*{list(K)}" for K, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    def grades(self) -> set[int]:
        return {len(K) for K in self.coeffs}


def _check_n(u: SpinorVector, v: SpinorVector):
    if u.n != v.n:
        raise ValueError(f"spinor dimension mismatch: {u.n} vs {v.n}")


def _check_j(j: int, n: int):
    if not 1 <= j <= n:
        raise IndexError(f"Witt index {j} out of range 1..{n}")


def _apply_state_map(v: SpinorVector, fn) -> SpinorVector:
    out: dict = {}
    for K, c in v.coeffs.items():
        hit = fn(K)
        if hit is None:
            continue
        sign, K2 = hit
        out[K2] = out.get(K2, ZERO) + (c if sign > 0 else -c)
    return SpinorVector(v.n, out)


def create(j: int, v: SpinorVector) -> SpinorVector:
    """Left multiplication by ``f†_j``."""
    _check_j(j, v.n)
    return _apply_state_map(v, lambda K: create_state(j, K))


def annihilate(j: int, v: SpinorVector) -> SpinorVector:
    """Left multiplication by ``f_j``."""
    _check_j(j, v.n)
    return _apply_state_map(v, lambda K: annihilate_state(j, K))


def euclid_generator(alpha: int, n: int) -> Callable[[SpinorVector], SpinorVector]:
    """The Euclidean generator ``e_alpha`` acting on S_n.

    ``e_j = f_j - f†_j`` and ``e_{n+j} = i (f_j + f†_j)`` for ``1 <= j <= n``.
    """
    if not 1 <= alpha <= 2 * n:
        raise IndexError(f"generator index {alpha} out of range 1..{2 * n}")
    if alpha <= n:
        j = alpha

        def op(v):
            return annihilate(j, v) - create(j, v)
    else:
        j = alpha - n

        def op(v):
            return I_UNIT * (annihilate(j, v) + create(j, v))
    return op


def split_last(v: SpinorVector) -> tuple[SpinorVector, SpinorVector]:
    """Write ``v = F0 + f†_n F1`` with F0, F1 over S_{n-1}."""
    n = v.n
    if n < 1:
        raise ValueError("split_last needs n >= 1")
    f0, f1 = {}, {}
    for K, c in v.coeffs.items():
        if K and K[-1] == n:
            # f†_n passes r-1 lower creators to reach the front
            sign = -1 if (len(K) - 1) & 1 else 1
            f1[K[:-1]] = c if sign > 0 else -c
        else:
            f0[K] = c
    return SpinorVector(n - 1, f0), SpinorVector(n - 1, f1)


def join_last(f0: SpinorVector, f1: SpinorVector) -> SpinorVector:
    """Inverse of :func:`split_last`."""
    _check_n(f0, f1)
    n = f0.n + 1
    lifted0 = SpinorVector(n, f0.coeffs)
    lifted1 = SpinorVector(n, f1.coeffs)
    return lifted0 + create(n, lifted1)
