"""Random exact polynomials for property tests."""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from hermgt.fock import all_states
from hermgt.poly import SpinorPolynomial, exponent_vectors
from hermgt.scalar import GaussianRational


def _split(total: int, rng: random.Random) -> tuple[int, int]:
    a = rng.randint(0, total)
    return a, total - a


def random_polynomial(rng: random.Random, n: int, max_degree: int = 3, terms: int = 4) -> SpinorPolynomial:
    """Sparse polynomial with small Gaussian-rational coefficients, mixed
    bidegrees and grades."""
    acc = {}
    for _ in range(terms):
        a, b = _split(rng.randint(0, max_degree), rng)
        z = rng.choice(exponent_vectors(n, a))
        zb = rng.choice(exponent_vectors(n, b))
        K = rng.choice(all_states(n))
        c = GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        acc[(z, zb, K)] = c
    return SpinorPolynomial(n, acc)


@st.composite
def polynomials(draw, n=None, max_degree: int = 3):
    """Hypothesis strategy: a random polynomial on C^n, n <= 3."""
    n = draw(st.integers(1, 3)) if n is None else n
    seed = draw(st.integers(0, 2**32 - 1))
    terms = draw(st.integers(0, 5))
    return random_polynomial(random.Random(seed), n, max_degree, terms)


def seeded_polynomials(count: int = 100, seed: int = 20240601):
    """Deterministic list of ``count`` random polynomials with n <= 3, degree <= 3."""
    rng = random.Random(seed)
    return [random_polynomial(rng, rng.randint(1, 3), 3, rng.randint(1, 5)) for _ in range(count)]
