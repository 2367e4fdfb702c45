"""Sparse spinor-valued polynomials in z_1..z_n and their conjugates.

A term is keyed by ``(zexp, zbarexp, K)``: two exponent tuples of length n
and a Fock state ``K`` (see :mod:`hermgt.fock`). Coefficients are
:class:`~hermgt.scalar.GaussianRational`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Mapping

from .fock import annihilate_state, create_state, spinor_index
from .scalar import ONE, ZERO, GaussianRational, as_gaussian, factorial

__all__ = [
    "SpaceDescriptor",
    "SpinorPolynomial",
    "ANY",
    "exponent_vectors",
    "monomial_basis",
]

ANY = "any"


@dataclass(frozen=True, order=True)
class SpaceDescriptor:
    """``(n, a, b, r)``: bidegree (a, b) polynomials on C^n with grade-r values."""

    n: int
    a: int
    b: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"bidegree must be nonnegative, got ({self.a}, {self.b})")
        if not 0 <= self.r <= self.n:
            raise ValueError(f"grade r={self.r} outside 0..{self.n}")

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b, "r": self.r}

    def __str__(self):
        return f"M^({self.r})_{{{self.a},{self.b}}}(C^{self.n})"


def exponent_vectors(n: int, degree: int) -> list[tuple]:
    """All exponent tuples of length n summing to ``degree`` (fixed order)."""
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


class SpinorPolynomial:
    """Immutable sparse polynomial with spinor values."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None, *, _trusted=False):
        self.n = n
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for key, c in (terms or {}).items():
            z, zb, K = key
            z, zb = tuple(z), tuple(zb)
            if len(z) != n or len(zb) != n or min(z + zb, default=0) < 0:
                raise ValueError(f"bad exponents {key} for n={n}")
            c = as_gaussian(c)
            if c:
                k = (z, zb, spinor_index(K, n))
                clean[k] = clean.get(k, ZERO) + c
        self.terms = {k: c for k, c in clean.items() if c}

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "SpinorPolynomial":
        return cls(n, {}, _trusted=True)

    @classmethod
    def monomial(cls, n: int, z=None, zbar=None, spinor=(), coeff=1) -> "SpinorPolynomial":
        z = tuple(z) if z is not None else (0,) * n
        zbar = tuple(zbar) if zbar is not None else (0,) * n
        return cls(n, {(z, zbar, tuple(spinor)): coeff})

    @classmethod
    def spinor(cls, n: int, K=()) -> "SpinorPolynomial":
        """The constant polynomial equal to the Fock state K."""
        return cls.monomial(n, spinor=K)

    @classmethod
    def _from_acc(cls, n: int, acc: dict) -> "SpinorPolynomial":
        return cls(n, {k: c for k, c in acc.items() if c}, _trusted=True)

    # -- basic protocol --------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, SpinorPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SpinorPolynomial(n={self.n}, {self.to_text()})"

    def items(self):
        return self.terms.items()

    # -- linear structure ------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SpinorPolynomial):
            raise TypeError("expected SpinorPolynomial")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, ZERO) + c
        return SpinorPolynomial._from_acc(self.n, acc)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, ZERO) - c
        return SpinorPolynomial._from_acc(self.n, acc)

    def __neg__(self):
        return SpinorPolynomial(self.n, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def scale(self, s) -> "SpinorPolynomial":
        s = as_gaussian(s)
        if not s:
            return SpinorPolynomial.zero(self.n)
        return SpinorPolynomial(self.n, {k: s * c for k, c in self.terms.items()}, _trusted=True)

    def __mul__(self, s):
        if isinstance(s, SpinorPolynomial):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    # -- grading ---------------------------------------------------------
    def bidegree(self):
        """Common bidegree ``(a, b)``; ``None`` if mixed, ``ANY`` for zero."""
        if not self.terms:
            return ANY
        degs = {(sum(z), sum(zb)) for z, zb, _ in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def grade(self):
        """Common spinor grade; ``None`` if mixed, ``ANY`` for zero."""
        if not self.terms:
            return ANY
        grades = {len(K) for _, _, K in self.terms}
        return grades.pop() if len(grades) == 1 else None

    def conforms_to(self, d: SpaceDescriptor) -> bool:
        """True if zero or homogeneous of the descriptor's bidegree and grade."""
        if self.n != d.n:
            return False
        if not self.terms:
            return True
        return self.bidegree() == (d.a, d.b) and self.grade() == d.r

    # -- calculus --------------------------------------------------------
    def partial(self, j: int, conjugated: bool = False) -> "SpinorPolynomial":
        """Formal derivative in ``z_j`` (or ``zbar_j`` when conjugated)."""
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range 1..{self.n}")
        idx = j - 1
        acc: dict = {}
        for (z, zb, K), c in self.terms.items():
            e = zb if conjugated else z
            p = e[idx]
            if p == 0:
                continue
            e2 = e[:idx] + (p - 1,) + e[idx + 1:]
            key = (z, e2, K) if conjugated else (e2, zb, K)
            acc[key] = acc.get(key, ZERO) + c * p
        return SpinorPolynomial._from_acc(self.n, acc)

    def mul_var(self, j: int, conjugated: bool = False, power: int = 1) -> "SpinorPolynomial":
        """Multiply by ``z_j**power`` (or ``zbar_j**power``)."""
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range 1..{self.n}")
        if power == 0:
            return self
        idx = j - 1
        out = {}
        for (z, zb, K), c in self.terms.items():
            if conjugated:
                key = (z, zb[:idx] + (zb[idx] + power,) + zb[idx + 1:], K)
            else:
                key = (z[:idx] + (z[idx] + power,) + z[idx + 1:], zb, K)
            out[key] = c
        return SpinorPolynomial(self.n, out, _trusted=True)

    def mul_norm2(self, upto: int | None = None) -> "SpinorPolynomial":
        """Multiply by ``sum_{j<=upto} z_j zbar_j`` (``upto`` defaults to n)."""
        m = self.n if upto is None else upto
        acc: dict = {}
        for j in range(m):
            for (z, zb, K), c in self.terms.items():
                key = (z[:j] + (z[j] + 1,) + z[j + 1:], zb[:j] + (zb[j] + 1,) + zb[j + 1:], K)
                acc[key] = acc.get(key, ZERO) + c
        return SpinorPolynomial._from_acc(self.n, acc)

    def map_states(self, fn: Callable[[tuple], tuple | None]) -> "SpinorPolynomial":
        """Apply a signed state map ``K -> (sign, K')`` termwise."""
        acc: dict = {}
        for (z, zb, K), c in self.terms.items():
            hit = fn(K)
            if hit is None:
                continue
            sign, K2 = hit
            key = (z, zb, K2)
            acc[key] = acc.get(key, ZERO) + (c if sign > 0 else -c)
        return SpinorPolynomial._from_acc(self.n, acc)

    def create(self, j: int) -> "SpinorPolynomial":
        if not 1 <= j <= self.n:
            raise IndexError(f"Witt index {j} out of range 1..{self.n}")
        return self.map_states(lambda K: create_state(j, K))

    def annihilate(self, j: int) -> "SpinorPolynomial":
        if not 1 <= j <= self.n:
            raise IndexError(f"Witt index {j} out of range 1..{self.n}")
        return self.map_states(lambda K: annihilate_state(j, K))

    def map_coefficients(self, fn) -> "SpinorPolynomial":
        return SpinorPolynomial._from_acc(self.n, {k: fn(k, c) for k, c in self.terms.items()})

    # -- dimension change ------------------------------------------------
    def restrict_last(self) -> tuple["SpinorPolynomial", "SpinorPolynomial"]:
        """Restrict to ``z_n = 0 = zbar_n`` and split ``P0 + f†_n P1``."""
        n = self.n
        if n < 2:
            raise ValueError("restrict_last needs n >= 2")
        p0, p1 = {}, {}
        for (z, zb, K), c in self.terms.items():
            if z[-1] or zb[-1]:
                continue
            key_z, key_zb = z[:-1], zb[:-1]
            if K and K[-1] == n:
                sign = -1 if (len(K) - 1) & 1 else 1
                p1[(key_z, key_zb, K[:-1])] = c if sign > 0 else -c
            else:
                p0[(key_z, key_zb, K)] = c
        return SpinorPolynomial(n - 1, p0, _trusted=True), SpinorPolynomial(n - 1, p1, _trusted=True)

    def embed(self, n: int) -> "SpinorPolynomial":
        """Reinterpret inside C^n, n >= self.n (new variables absent)."""
        if n < self.n:
            raise ValueError("can only embed into a larger dimension")
        pad = (0,) * (n - self.n)
        return SpinorPolynomial(
            n, {(z + pad, zb + pad, K): c for (z, zb, K), c in self.terms.items()}, _trusted=True
        )

    def substitute_phase(self, u: GaussianRational) -> "SpinorPolynomial":
        """Substitute ``z_j -> u z_j`` and ``zbar_j -> conj(u) zbar_j`` for all j."""
        u = as_gaussian(u)
        ub = u.conjugate()
        return self.map_coefficients(lambda k, c: c * u ** sum(k[0]) * ub ** sum(k[1]))

    # -- ordering / rendering -------------------------------------------
    @staticmethod
    def sort_key(key: tuple):
        z, zb, K = key
        return (sum(z) + sum(zb), tuple(-e for e in z + zb), len(K), K)

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda kv: SpinorPolynomial.sort_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"z": list(z), "zbar": list(zb), "spinor": list(K), "coeff": c.to_json()}
                for (z, zb, K), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SpinorPolynomial":
        n = data["n"]
        terms = {}
        for t in data["terms"]:
            key = (tuple(t["z"]), tuple(t["zbar"]), tuple(t["spinor"]))
            terms[key] = terms.get(key, ZERO) + GaussianRational.from_json(t["coeff"])
        return cls(n, terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (z, zb, K), c in self.sorted_terms():
            factors = []
            for j, e in enumerate(z, 1):
                if e:
                    factors.append(f"z{j}" + (f"^{e}" if e > 1 else ""))
            for j, e in enumerate(zb, 1):
                if e:
                    factors.append(f"zb{j}" + (f"^{e}" if e > 1 else ""))
            factors.extend(f"f+{k}" for k in K)
            factors.append("I")
            mono = "*".join(factors)
            if c == ONE:
                parts.append(f"+ {mono}")
            elif c == -ONE:
                parts.append(f"- {mono}")
            elif c.im == 0:
                sign = "-" if c.re < 0 else "+"
                parts.append(f"{sign} {GaussianRational(abs(c.re))}*{mono}")
            else:
                parts.append(f"+ ({c})*{mono}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (z, zb, K), c in self.sorted_terms():
            factors = []
            for j, e in enumerate(z, 1):
                if e:
                    factors.append(f"z_{{{j}}}" + (f"^{{{e}}}" if e > 1 else ""))
            for j, e in enumerate(zb, 1):
                if e:
                    factors.append(f"\\bar{{z}}_{{{j}}}" + (f"^{{{e}}}" if e > 1 else ""))
            factors.extend(f"\\mathfrak{{f}}^{{\\dagger}}_{{{k}}}" for k in K)
            factors.append("I")
            if c.im == 0:
                q = c.re
                sign = "-" if q < 0 else "+"
                q = abs(q)
                coef = "" if q == 1 else (
                    f"\\frac{{{q.numerator}}}{{{q.denominator}}}" if q.denominator != 1 else str(q.numerator)
                )
            else:
                sign, coef = "+", f"({c})"
            parts.append(f"{sign} {coef}" + " ".join(factors))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def monomial_basis(d: SpaceDescriptor) -> list[tuple]:
    """Monomial keys spanning P^{(r)}_{a,b}(C^n), in a fixed order."""
    from .fock import all_states

    return [
        (z, zb, K)
        for z in exponent_vectors(d.n, d.a)
        for zb in exponent_vectors(d.n, d.b)
        for K in all_states(d.n, d.r)
    ]


def monomial_count(d: SpaceDescriptor) -> int:
    from .scalar import binomial

    return binomial(d.n + d.a - 1, d.a) * binomial(d.n + d.b - 1, d.b) * binomial(d.n, d.r)


def normalized_monomial(n: int, z, zbar, spinor=()) -> SpinorPolynomial:
    """``z^z / z! * zbar^zbar / zbar! * K`` with factorial normalization."""
    denom = 1
    for e in tuple(z) + tuple(zbar):
        denom *= factorial(e)
    from fractions import Fraction

    return SpinorPolynomial.monomial(n, z, zbar, spinor, Fraction(1, denom))
