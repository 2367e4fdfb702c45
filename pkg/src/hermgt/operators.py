"""Hermitean Dirac operators, Hermitean vector variables and friends.

Two layers: fast direct functions (``apply_upz`` and co.) used by the
construction, and :class:`HermOperator`, a small symbolic tree over the
primitive operators that can be composed, summed and scaled before being
applied. Both agree by construction and the tests compare them.
"""
from __future__ import annotations

from .poly import SpinorPolynomial
from .scalar import ONE, as_gaussian

__all__ = [
    "HermOperator",
    "apply_upz",
    "apply_upzd",
    "mul_zvec",
    "mul_zdvec",
    "apply_dirac",
    "laplacian",
    "is_hermitean_monogenic",
    "is_monogenic",
    "upz_operator",
    "upzd_operator",
    "zvec_operator",
    "zdvec_operator",
    "dirac_operator",
]


def _upto(P: SpinorPolynomial, upto: int | None) -> int:
    return P.n if upto is None else upto


def apply_upz(P: SpinorPolynomial, upto: int | None = None) -> SpinorPolynomial:
    """``sum_j f†_j d/dz_j`` over ``j <= upto`` (all variables by default)."""
    out = SpinorPolynomial.zero(P.n)
    for j in range(1, _upto(P, upto) + 1):
        d = P.partial(j)
        if d:
            out = out + d.create(j)
    return out


def apply_upzd(P: SpinorPolynomial, upto: int | None = None) -> SpinorPolynomial:
    """``sum_j f_j d/dzbar_j`` over ``j <= upto``."""
    out = SpinorPolynomial.zero(P.n)
    for j in range(1, _upto(P, upto) + 1):
        d = P.partial(j, conjugated=True)
        if d:
            out = out + d.annihilate(j)
    return out


def mul_zvec(P: SpinorPolynomial, upto: int | None = None) -> SpinorPolynomial:
    """Left multiplication by ``sum_j f_j z_j``."""
    out = SpinorPolynomial.zero(P.n)
    for j in range(1, _upto(P, upto) + 1):
        t = P.annihilate(j)
        if t:
            out = out + t.mul_var(j)
    return out


def mul_zdvec(P: SpinorPolynomial, upto: int | None = None) -> SpinorPolynomial:
    """Left multiplication by ``sum_j f†_j zbar_j``."""
    out = SpinorPolynomial.zero(P.n)
    for j in range(1, _upto(P, upto) + 1):
        t = P.create(j)
        if t:
            out = out + t.mul_var(j, conjugated=True)
    return out


def apply_dirac(P: SpinorPolynomial) -> SpinorPolynomial:
    """Euclidean Dirac operator in complex form, ``2 (upzd - upz)``."""
    return (apply_upzd(P) - apply_upz(P)).scale(2)


def laplacian(P: SpinorPolynomial) -> SpinorPolynomial:
    """``4 sum_j d/dz_j d/dzbar_j``, acting on each spinor coefficient."""
    out = SpinorPolynomial.zero(P.n)
    for j in range(1, P.n + 1):
        out = out + P.partial(j).partial(j, conjugated=True)
    return out.scale(4)


def is_hermitean_monogenic(P: SpinorPolynomial) -> bool:
    return apply_upz(P).is_zero() and apply_upzd(P).is_zero()


def is_monogenic(P: SpinorPolynomial) -> bool:
    return apply_dirac(P).is_zero()


class HermOperator:
    """Linear operator on spinor polynomials, kept as an expression tree.

    Leaves are the primitives ``d(j)``, ``dbar(j)``, ``z(j)``, ``zbar(j)``,
    ``create(j)``, ``annihilate(j)`` and ``scalar(c)``. ``A @ B`` applies B
    first; ``A + B``, ``A - B`` and ``c * A`` are pointwise.
    """

    __slots__ = ("kind", "arg", "children")

    _PRIMS = {"d", "dbar", "z", "zbar", "create", "annihilate", "scalar"}

    def __init__(self, kind: str, arg=None, children: tuple = ()):
        self.kind = kind
        self.arg = arg
        self.children = children

    # primitives
    @classmethod
    def d(cls, j):
        return cls("d", j)

    @classmethod
    def dbar(cls, j):
        return cls("dbar", j)

    @classmethod
    def z(cls, j):
        return cls("z", j)

    @classmethod
    def zbar(cls, j):
        return cls("zbar", j)

    @classmethod
    def create(cls, j):
        return cls("create", j)

    @classmethod
    def annihilate(cls, j):
        return cls("annihilate", j)

    @classmethod
    def scalar(cls, c):
        return cls("scalar", as_gaussian(c))

    @classmethod
    def identity(cls):
        return cls.scalar(ONE)

    # algebra
    def __matmul__(self, other: "HermOperator") -> "HermOperator":
        return HermOperator("compose", None, (self, other))

    def __add__(self, other: "HermOperator") -> "HermOperator":
        return HermOperator("sum", None, (self, other))

    def __sub__(self, other: "HermOperator") -> "HermOperator":
        return self + HermOperator.scalar(-1) @ other

    def __rmul__(self, c) -> "HermOperator":
        return HermOperator.scalar(c) @ self

    def __pow__(self, k: int) -> "HermOperator":
        out = HermOperator.identity()
        for _ in range(k):
            out = self @ out
        return out

    def __call__(self, P: SpinorPolynomial) -> SpinorPolynomial:
        k = self.kind
        if k == "d":
            return P.partial(self.arg)
        if k == "dbar":
            return P.partial(self.arg, conjugated=True)
        if k == "z":
            return P.mul_var(self.arg)
        if k == "zbar":
            return P.mul_var(self.arg, conjugated=True)
        if k == "create":
            return P.create(self.arg)
        if k == "annihilate":
            return P.annihilate(self.arg)
        if k == "scalar":
            return P.scale(self.arg)
        if k == "compose":
            outer, inner = self.children
            return outer(inner(P))
        if k == "sum":
            left, right = self.children
            return left(P) + right(P)
        raise ValueError(f"unknown operator node {k!r}")

    def __repr__(self):
        if self.kind in self._PRIMS:
            return f"{self.kind}({self.arg})"
        sym = " @ " if self.kind == "compose" else " + "
        return "(" + sym.join(repr(c) for c in self.children) + ")"


def _sum(ops):
    ops = list(ops)
    out = ops[0]
    for op in ops[1:]:
        out = out + op
    return out


def upz_operator(n: int) -> HermOperator:
    return _sum(HermOperator.create(j) @ HermOperator.d(j) for j in range(1, n + 1))


def upzd_operator(n: int) -> HermOperator:
    return _sum(HermOperator.annihilate(j) @ HermOperator.dbar(j) for j in range(1, n + 1))


def zvec_operator(n: int) -> HermOperator:
    return _sum(HermOperator.z(j) @ HermOperator.annihilate(j) for j in range(1, n + 1))


def zdvec_operator(n: int) -> HermOperator:
    return _sum(HermOperator.zbar(j) @ HermOperator.create(j) for j in range(1, n + 1))


def dirac_operator(n: int) -> HermOperator:
    return 2 * (upzd_operator(n) - upz_operator(n))
