"""Exact scalars: rationals, Gaussian rationals and exact linear algebra.

Rationals are :class:`fractions.Fraction`. Gaussian rationals pair two of
them. Everything here is exact; nothing ever touches a float.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "GaussianRational",
    "as_gaussian",
    "factorial",
    "binomial",
    "exact_rank",
    "rational_to_str",
    "rational_from_str",
]

Rational = Fraction


class GaussianRational:
    """Element ``re + i*im`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_gaussian(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = as_gaussian(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_gaussian(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return as_gaussian(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """``x * conj(x)`` as a rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        try:
            other = as_gaussian(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    # -- rendering -------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({rational_to_str(self.re)!r}, {rational_to_str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return rational_to_str(self.re)
        if self.re == 0:
            return f"{rational_to_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_to_str(self.re)}{sign}{rational_to_str(abs(self.im))}i"

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @classmethod
    def from_json(cls, data: dict) -> "GaussianRational":
        return cls(rational_from_str(data["re"]), rational_from_str(data["im"]))


def as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational exactly")


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I_UNIT = GaussianRational(0, 1)


def rational_to_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(k)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; zero when ``k > n`` or ``k < 0``."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _rank_over_field(rows: list[list]) -> int:
    # rows are mutated in place
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if not f:
                continue
            f = f * inv
            row = rows[i]
            for c in range(col, ncols):
                if prow[c]:
                    row[c] = row[c] - f * prow[c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def exact_rank(matrix: Sequence[Sequence]) -> int:
    """Rank over Q(i) by fraction-exact Gaussian elimination.

    Entries may be ints, Fractions or GaussianRationals. A purely real
    matrix is eliminated over :class:`Fraction` directly, which is much
    faster and gives the same rank.
    """
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix is not rectangular")
    if all(not isinstance(x, GaussianRational) or x.im == 0 for r in rows for x in r):
        real = [[Fraction(x.re) if isinstance(x, GaussianRational) else Fraction(x) for x in r] for r in rows]
        return _rank_over_field(real)
    cplx = [[as_gaussian(x) for x in r] for r in rows]
    return _rank_over_field(cplx)


def transpose(matrix: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*matrix)]


def sum_exact(values: Iterable) -> GaussianRational:
    out = ZERO
    for v in values:
        out = out + v
    return out
