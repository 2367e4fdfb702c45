"""Cauchy-Kovalevskaya extension and the Fischer-decomposition embeddings.

The CK extension lifts initial data living on C^{n-1} to a Hermitean
monogenic polynomial on C^n. The embedding factors split the initial-data
spaces into shifted copies of lower-dimensional monogenic spaces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dimensions import dim_M
from .operators import apply_upz, apply_upzd, mul_zdvec, mul_zvec
from .poly import SpaceDescriptor, SpinorPolynomial
from .scalar import factorial

__all__ = [
    "InvalidDatum",
    "InitialDatum",
    "EmbeddingFactor",
    "Component",
    "ck_extend",
    "ck_series_operator",
    "initial_data_decomposition",
    "edge_components",
]


class InvalidDatum(ValueError):
    """Initial datum fails the membership test of its data space."""


@dataclass(frozen=True)
class InitialDatum:
    """One element of an initial-data space for the CK extension.

    ``kind`` is ``"A"`` (offset ``j``, payload of bidegree (a, b-j) and
    grade r) or ``"B"`` (offset ``i``, payload ``p1`` of bidegree (a-i, b)
    and grade r-1, i.e. *before* the ``f†_n`` prefix).
    """

    kind: str
    offset: int
    target: SpaceDescriptor
    payload: SpinorPolynomial

    def payload_descriptor(self) -> SpaceDescriptor:
        t = self.target
        if self.kind == "A":
            return SpaceDescriptor(t.n - 1, t.a, t.b - self.offset, t.r)
        return SpaceDescriptor(t.n - 1, t.a - self.offset, t.b, t.r - 1)

    def validate(self) -> None:
        t = self.target
        if t.n < 2:
            raise InvalidDatum("CK extension needs n >= 2")
        if self.kind not in ("A", "B"):
            raise InvalidDatum(f"unknown datum kind {self.kind!r}")
        lim = t.b if self.kind == "A" else t.a
        if not 0 <= self.offset <= lim:
            raise InvalidDatum(f"offset {self.offset} outside 0..{lim}")
        if self.kind == "B" and t.r == 0:
            raise InvalidDatum("B data need grade r >= 1")
        if self.kind == "A" and t.r == t.n:
            raise InvalidDatum("A data need grade r <= n-1")
        p = self.payload
        if p.n != t.n - 1:
            raise InvalidDatum(f"payload lives on C^{p.n}, expected C^{t.n - 1}")
        if not p.conforms_to(self.payload_descriptor()):
            raise InvalidDatum(
                f"payload bidegree/grade {p.bidegree()}/{p.grade()} does not match {self.payload_descriptor()}"
            )
        if self.kind == "A" and not apply_upz(p).is_zero():
            raise InvalidDatum("A payload is not annihilated by upz")
        if self.kind == "B" and not apply_upzd(p).is_zero():
            raise InvalidDatum("B payload is not annihilated by upzd")


def _series_step(F: SpinorPolynomial) -> SpinorPolynomial:
    """``(z_n upz~ f_n + zbar_n upzd~ f†_n) F``; the Witt operator acts first."""
    n = F.n
    m = n - 1
    out = SpinorPolynomial.zero(n)
    g = F.annihilate(n)
    if g:
        out = out + apply_upz(g, upto=m).mul_var(n)
    h = F.create(n)
    if h:
        out = out + apply_upzd(h, upto=m).mul_var(n, conjugated=True)
    return out


def ck_series_operator(F: SpinorPolynomial, offset: int, kmax: int) -> SpinorPolynomial:
    """``sum_{k=0}^{kmax} T^k[F] / (floor(k/2)! * (floor((k+1)/2) + offset)!)``."""
    n = F.n
    total = SpinorPolynomial.zero(n)
    term = F
    for k in range(kmax + 1):
        if k:
            term = _series_step(term)
        if term.is_zero():
            break
        coef = Fraction(1, factorial(k // 2) * factorial((k + 1) // 2 + offset))
        total = total + term.scale(coef)
    return total


def ck_extend(datum: InitialDatum, validate: bool = True) -> SpinorPolynomial:
    """Hermitean monogenic CK extension of a single initial datum."""
    if validate:
        datum.validate()
    t = datum.target
    n = t.n
    lifted = datum.payload.embed(n)
    if datum.kind == "A":
        j = datum.offset
        series = ck_series_operator(lifted, j, min(2 * t.a + 1, 2 * t.b - 2 * j))
        return series.mul_var(n, conjugated=True, power=j)
    i = datum.offset
    series = ck_series_operator(lifted.create(n), i, min(2 * t.a - 2 * i, 2 * t.b + 1))
    return series.mul_var(n, power=i)


# --- Fischer-decomposition embeddings --------------------------------------

@dataclass(frozen=True)
class EmbeddingFactor:
    """Symbolic embedding factor applied to a lower-dimensional basis element.

    ``shape`` is one of
      ``"identity"``;
      ``"zdvec"``  : ``|z|^{2k} zdvec``           (A-case, grade +1);
      ``"zvec"``   : ``|z|^{2k} zvec``            (B-case, grade -1);
      ``"mixA"``   : ``|z|^{2k} (zdvec zvec + c zvec zdvec)``;
      ``"mixB"``   : ``|z|^{2k} (zvec zdvec + c zdvec zvec)``.
    Products act right to left. ``k`` is the power of ``|z|^2``.
    """

    shape: str
    k: int = 0
    coeff: Fraction = Fraction(0)

    def apply(self, P: SpinorPolynomial) -> SpinorPolynomial:
        s = self.shape
        if s == "identity":
            out = P
        elif s == "zdvec":
            out = mul_zdvec(P)
        elif s == "zvec":
            out = mul_zvec(P)
        elif s == "mixA":
            out = mul_zdvec(mul_zvec(P)) + mul_zvec(mul_zdvec(P)).scale(self.coeff)
        elif s == "mixB":
            out = mul_zvec(mul_zdvec(P)) + mul_zdvec(mul_zvec(P)).scale(self.coeff)
        else:
            raise ValueError(f"unknown factor shape {s!r}")
        for _ in range(self.k):
            out = out.mul_norm2()
        return out

    def __str__(self):
        pre = f"|z|^{2 * self.k} " if self.k else ""
        body = {
            "identity": "1",
            "zdvec": "zd",
            "zvec": "z",
            "mixA": f"(zd z + {self.coeff} z zd)",
            "mixB": f"(z zd + {self.coeff} zd z)",
        }[self.shape]
        return pre + body


@dataclass(frozen=True)
class Component:
    """One summand of the decomposition of an initial-data space.

    ``kind``/``offset`` name the data space (A_{a,b-j} or B_{a-i,b});
    ``source`` is the lower-dimensional space whose basis is embedded by
    ``factor``. ``index`` is the summand index k (``None`` for identity).
    """

    kind: str
    offset: int
    factor: EmbeddingFactor
    source: SpaceDescriptor
    target: SpaceDescriptor
    empty: bool

    @property
    def path_step(self) -> tuple:
        return (self.kind, self.offset, self.factor.shape, self.factor.k)


def _comp(kind, offset, factor, source_args, target) -> Component:
    src = SpaceDescriptor(*source_args)
    return Component(kind, offset, factor, src, target, dim_M(*source_args) == 0)


def initial_data_decomposition(n: int, a: int, b: int, r: int) -> list[Component]:
    """All Fischer components of all initial-data spaces of M^{(r)}_{a,b}(C^n).

    Ordering: A-spaces by descending offset j, then B-spaces by ascending
    offset i; within a space, identity, then the single-vector summands,
    then the mixed ones, each by ascending k. Zero-dimensional components
    are kept, flagged ``empty``.
    """
    if not 0 < r < n:
        raise ValueError(f"grade r={r} must satisfy 0 < r < n={n}")
    target = SpaceDescriptor(n, a, b, r)
    m = n - 1
    out: list[Component] = []
    for j in range(b, -1, -1):
        bb = b - j
        out.append(_comp("A", j, EmbeddingFactor("identity"), (m, a, bb, r), target))
        for k in range(0, min(a, bb - 1) + 1):
            out.append(_comp("A", j, EmbeddingFactor("zdvec", k), (m, a - k, bb - k - 1, r - 1), target))
        for k in range(0, min(a - 1, bb - 1) + 1):
            c = Fraction(a - k - 1 + r, a + r)
            out.append(_comp("A", j, EmbeddingFactor("mixA", k, c), (m, a - k - 1, bb - k - 1, r), target))
    for i in range(a + 1):
        aa = a - i
        out.append(_comp("B", i, EmbeddingFactor("identity"), (m, aa, b, r - 1), target))
        for k in range(0, min(aa - 1, b) + 1):
            out.append(_comp("B", i, EmbeddingFactor("zvec", k), (m, aa - k - 1, b - k, r), target))
        for k in range(0, min(aa - 1, b - 1) + 1):
            d = Fraction(b - k - 1 + n - r, b + n - r)
            out.append(_comp("B", i, EmbeddingFactor("mixB", k, d), (m, aa - k - 1, b - k - 1, r - 1), target))
    return out


def edge_components(n: int, a: int, b: int, r: int) -> list[Component]:
    """Components at the edge grades r = 0 and r = n.

    For r = 0 the data spaces A_{0,b-j} are whole antiholomorphic spaces
    over C^{n-1}; for r = n the B_{a-i,0} are whole holomorphic spaces.
    """
    target = SpaceDescriptor(n, a, b, r)
    m = n - 1
    if r == 0:
        return [_comp("A", j, EmbeddingFactor("identity"), (m, a, b - j, 0), target) for j in range(b, -1, -1)]
    if r == n:
        return [_comp("B", i, EmbeddingFactor("identity"), (m, a - i, b, m), target) for i in range(a + 1)]
    raise ValueError("edge_components is for r in {0, n}")


def make_datum(component: Component, source_member: SpinorPolynomial) -> InitialDatum:
    """Embed a source basis element and wrap it as an initial datum."""
    payload = component.factor.apply(source_member)
    return InitialDatum(component.kind, component.offset, component.target, payload)
