"""Gel'fand-Tsetlin bases of Hermitean monogenic polynomial spaces.

The general case recurses on the dimension: each initial-data space of
M^{(r)}_{a,b}(C^n) is split into embedded copies of spaces over C^{n-1},
whose bases are lifted by the CK extension. Edge grades r = 0 and r = n
(and n = 1) use the monomial bases directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .ck import (
    Component,
    edge_components,
    ck_extend,
    initial_data_decomposition,
    make_datum,
)
from .dimensions import dim_M
from .operators import mul_zdvec, mul_zvec
from .poly import SpaceDescriptor, SpinorPolynomial, normalized_monomial
from .scalar import factorial

__all__ = [
    "weight_of",
    "interlaces",
    "interlacing_set",
    "GTLabel",
    "BasisFamily",
    "gt_basis",
    "edge_closed_form",
    "edge_via_ck",
    "closed_form_n2",
    "closed_family_n2",
    "monogenic_basis",
    "MonogenicBasis",
    "embedding_coefficients",
]


# --- weights and labels -----------------------------------------------------

def weight_of(a: int, b: int, s: int, m: int) -> tuple:
    """Highest weight of M^{(s)}_{a,b}(C^m) as a U(m) weight."""
    if not 0 <= s <= m:
        raise ValueError(f"grade {s} outside 0..{m}")
    if s == 0:
        if a != 0:
            raise ValueError(f"M^(0)_{{{a},{b}}} is the zero space")
        return (0,) * (m - 1) + (-b,)
    if s == m:
        if b != 0:
            raise ValueError(f"M^({m})_{{{a},{b}}} is the zero space")
        return (a + 1,) + (1,) * (m - 1)
    return (a + 1,) + (1,) * (s - 1) + (0,) * (m - s - 1) + (-b,)


def interlaces(lam: tuple, mu: tuple) -> bool:
    """True if ``lam_1 >= mu_1 >= lam_2 >= ... >= mu_{m-1} >= lam_m``."""
    if len(mu) != len(lam) - 1:
        return False
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(len(mu)))


def interlacing_set(lam: tuple) -> set[tuple]:
    """All U(m-1) weights interlacing the U(m) weight ``lam``."""
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    return set(product(*ranges))


@dataclass(frozen=True)
class GTLabel:
    """Chain of weights, top (U(n)) first, plus the structural path.

    Each path step is ``(kind, offset, factor shape, k)`` and records which
    initial-data space and which embedded summand produced the element at
    that level.
    """

    weights: tuple
    path: tuple = ()

    def is_interlacing(self) -> bool:
        ws = self.weights
        return all(interlaces(ws[i], ws[i + 1]) for i in range(len(ws) - 1))

    def to_json(self) -> dict:
        return {
            "weights": [list(w) for w in self.weights],
            "path": [list(step) for step in self.path],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GTLabel":
        return cls(
            tuple(tuple(w) for w in data["weights"]),
            tuple(tuple(step) for step in data["path"]),
        )

    def __str__(self):
        return "".join("(" + ",".join(str(x) for x in w) + ")" for w in self.weights)


@dataclass(frozen=True)
class BasisFamily:
    descriptor: SpaceDescriptor
    members: tuple = field(default=())

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def labels(self) -> list[GTLabel]:
        return [lab for lab, _ in self.members]

    @property
    def polynomials(self) -> list[SpinorPolynomial]:
        return [p for _, p in self.members]

    def by_label(self) -> dict:
        return {lab: p for lab, p in self.members}

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.to_json(),
            "members": [{"label": lab.to_json(), "polynomial": p.to_json()} for lab, p in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BasisFamily":
        d = data["descriptor"]
        return cls(
            SpaceDescriptor(d["n"], d["a"], d["b"], d["r"]),
            tuple(
                (GTLabel.from_json(m["label"]), SpinorPolynomial.from_json(m["polynomial"]))
                for m in data["members"]
            ),
        )


# --- edge grades ------------------------------------------------------------

def _compositions(total: int, parts: int):
    """Exponent splits ``(e_n, ..., e_2)`` with ``e_n`` descending first."""
    if parts == 0:
        yield ()
        return
    for e in range(total, -1, -1):
        for rest in _compositions(total - e, parts - 1):
            yield (e,) + rest


def edge_closed_form(n: int, a: int, b: int, r: int) -> BasisFamily:
    """Monomial GT bases for r = 0 (antiholomorphic) and r = n (holomorphic).

    r = 0: ``prod zbar_m^{j}/j! * I``; r = n: ``prod z_m^{i}/i! * f†_1...f†_n I``.
    Ordered like the recursive construction: for r = 0 the exponent of the
    last variable descends, for r = n it is the complement that descends.
    """
    d = SpaceDescriptor(n, a, b, r)
    if r not in (0, n):
        raise ValueError("edge_closed_form needs r in {0, n}")
    if dim_M(n, a, b, r) == 0:
        return BasisFamily(d, ())
    members = []
    if r == 0:
        for split in _compositions(b, n - 1):  # exponents of zbar_n, ..., zbar_2
            exps = [0] * n
            for pos, e in enumerate(split):
                exps[n - 1 - pos] = e
            exps[0] = b - sum(split)
            weights, path, rem = [], [], b
            for level in range(n, 0, -1):
                weights.append(weight_of(0, rem, 0, level))
                if level > 1:
                    j = exps[level - 1]
                    path.append(("A", j, "identity", 0))
                    rem -= j
            P = normalized_monomial(n, (0,) * n, exps, ())
            members.append((GTLabel(tuple(weights), tuple(path)), P))
    else:
        for split in _ascending_compositions(a, n - 1):
            exps = [0] * n
            for pos, e in enumerate(split):
                exps[n - 1 - pos] = e
            exps[0] = a - sum(split)
            weights, path, rem = [], [], a
            for level in range(n, 0, -1):
                weights.append(weight_of(rem, 0, level, level))
                if level > 1:
                    i = exps[level - 1]
                    path.append(("B", i, "identity", 0))
                    rem -= i
            P = normalized_monomial(n, exps, (0,) * n, tuple(range(1, n + 1)))
            members.append((GTLabel(tuple(weights), tuple(path)), P))
    return BasisFamily(d, tuple(members))


def _ascending_compositions(total: int, parts: int):
    if parts == 0:
        yield ()
        return
    for e in range(total + 1):
        for rest in _ascending_compositions(total - e, parts - 1):
            yield (e,) + rest


def _lift(components: list[Component], source_family, top: tuple, desc: SpaceDescriptor) -> BasisFamily:
    members = []
    for comp in components:
        if comp.empty:
            continue
        src = source_family(*_astuple(comp.source))
        for lab, P in src.members:
            M = ck_extend(make_datum(comp, P))
            members.append((GTLabel((top,) + lab.weights, (comp.path_step,) + lab.path), M))
    return BasisFamily(desc, tuple(members))


def _astuple(d: SpaceDescriptor) -> tuple:
    return (d.n, d.a, d.b, d.r)


@lru_cache(maxsize=None)
def edge_via_ck(n: int, a: int, b: int, r: int) -> BasisFamily:
    """Edge-grade bases rebuilt by CK extension from the n = 1 bases.

    Independent of :func:`edge_closed_form` above n = 1; used to cross-check
    the monomial displays against the recursive algorithm.
    """
    d = SpaceDescriptor(n, a, b, r)
    if dim_M(n, a, b, r) == 0:
        return BasisFamily(d, ())
    if n == 1:
        return edge_closed_form(1, a, b, r)
    return _lift(edge_components(n, a, b, r), edge_via_ck, weight_of(a, b, r, n), d)


# --- the general recursion --------------------------------------------------

@lru_cache(maxsize=None)
def gt_basis(n: int, a: int, b: int, r: int) -> BasisFamily:
    """Orthogonal GT basis of M^{(r)}_{a,b}(C^n) (empty family for zero spaces)."""
    d = SpaceDescriptor(n, a, b, r)
    if dim_M(n, a, b, r) == 0:
        return BasisFamily(d, ())
    if n == 1 or r in (0, n):
        return edge_closed_form(n, a, b, r)
    return _lift(initial_data_decomposition(n, a, b, r), gt_basis, weight_of(a, b, r, n), d)


# --- closed forms in complex dimension two ----------------------------------

def _term(coef, z1, zb1, z2, zb2, K) -> SpinorPolynomial:
    denom = factorial(z1) * factorial(zb1) * factorial(z2) * factorial(zb2)
    return SpinorPolynomial.monomial(2, (z1, z2), (zb1, zb2), K, Fraction(coef, denom))


def closed_form_n2(a: int, b: int, mu: int) -> SpinorPolynomial:
    """Explicit grade-1 basis element of M^{(1)}_{a,b}(C^2) with U(1) weight ``mu``.

    Zero unless ``a, b >= 0`` and ``-b <= mu <= a + 1``.
    """
    out = SpinorPolynomial.zero(2)
    if a < 0 or b < 0 or not -b <= mu <= a + 1:
        return out
    if mu >= a + 1 - b:
        j = mu - (a + 1 - b)
        for k in range(0, min(a, b - j) + 1):
            sign = -1 if (b - j - k) & 1 else 1
            out = out + _term(sign, a - k, b - j - k, k, k + j, (1,))
        for k in range(0, min(a, b - j - 1) + 1):
            sign = -1 if (b - j - k - 1) & 1 else 1
            out = out + _term(sign, a - k, b - j - k - 1, k, k + j + 1, (2,))
    else:
        i = a - b - mu
        for k in range(0, min(a - i, b) + 1):
            sign = -1 if (b - k) & 1 else 1
            out = out + _term(sign, a - i - k, b - k, k + i, k, (2,))
        for k in range(0, min(a - i - 1, b) + 1):
            sign = -1 if (b - k) & 1 else 1
            out = out + _term(sign, a - i - k - 1, b - k, k + i + 1, k, (1,))
    return out


def closed_family_n2(a: int, b: int, r: int) -> BasisFamily:
    """Closed-form basis of M^{(r)}_{a,b}(C^2), ordered by the U(1) weight."""
    d = SpaceDescriptor(2, a, b, r)
    if r != 1:
        fam = edge_closed_form(2, a, b, r)
        return BasisFamily(d, tuple(sorted(fam.members, key=lambda m: m[0].weights[-1])))
    top = weight_of(a, b, 1, 2)
    return BasisFamily(
        d, tuple((GTLabel((top, (mu,))), closed_form_n2(a, b, mu)) for mu in range(-b, a + 2))
    )


# --- spinor-valued monogenics ----------------------------------------------

def embedding_coefficients(n: int, k: int, a: int, r: int) -> tuple[Fraction, Fraction]:
    """Coefficients ``(alpha, beta)`` of ``alpha*zvec + beta*zdvec`` that map
    M^{(r)}_{a,k-1-a}(C^n) into the kernel of the Dirac operator."""
    q = k - 1 - a
    return Fraction(1, a + r), Fraction(1, q + n - r)


@dataclass(frozen=True)
class MonogenicBasis:
    n: int
    k: int
    members: tuple  # (label, polynomial, embedded: bool, source descriptor)

    def __len__(self):
        return len(self.members)

    @property
    def polynomials(self):
        return [m[1] for m in self.members]


def monogenic_basis(n: int, k: int) -> MonogenicBasis:
    """Basis of the k-homogeneous S_n-valued monogenic polynomials on R^{2n}.

    The Hermitean monogenic bases of all bidegrees (a, k-a) and grades,
    followed by the images of M^{(r)}_{a,k-1-a}, 0 < r < n, under
    ``alpha*zvec + beta*zdvec`` (see :func:`embedding_coefficients`).
    """
    members = []
    for a in range(k + 1):
        for r in range(n + 1):
            fam = gt_basis(n, a, k - a, r)
            for lab, P in fam.members:
                members.append((lab, P, False, fam.descriptor))
    for a in range(k):
        for r in range(1, n):
            fam = gt_basis(n, a, k - 1 - a, r)
            alpha, beta = embedding_coefficients(n, k, a, r)
            for lab, P in fam.members:
                E = mul_zvec(P).scale(alpha) + mul_zdvec(P).scale(beta)
                members.append((lab, E, True, fam.descriptor))
    return MonogenicBasis(n, k, tuple(members))
