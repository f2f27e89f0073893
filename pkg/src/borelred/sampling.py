"""Seeded random draws of exact scalars and Borel-shaped matrices."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenerationError
from .matrix import Matrix

MAX_DRAWS = 1000


def random_rational(rng: random.Random, max_coeff: int = 20, nonzero: bool = False) -> Fraction:
    """p/q with |p| <= max_coeff and 1 <= q <= max_coeff."""
    while True:
        value = Fraction(rng.randint(-max_coeff, max_coeff), rng.randint(1, max_coeff))
        if value or not nonzero:
            return value


def random_distinct(rng: random.Random, n: int, max_coeff: int = 20) -> list[Fraction]:
    for _ in range(MAX_DRAWS):
        values = [random_rational(rng, max_coeff) for _ in range(n)]
        if len(set(values)) == n:
            return values
    raise GenerationError(f"no pairwise distinct draw of {n} values after {MAX_DRAWS} attempts")


def random_rss_upper(rng: random.Random, n: int, max_coeff: int = 20) -> Matrix:
    """Upper triangular with pairwise distinct diagonal."""
    d = random_distinct(rng, n, max_coeff)
    return Matrix.from_function(
        n, lambda a, b: d[a] if a == b else (random_rational(rng, max_coeff) if a < b else Fraction(0))
    )


def random_borel_element(rng: random.Random, n: int, max_coeff: int = 20) -> Matrix:
    """Invertible upper triangular matrix."""
    return Matrix.from_function(
        n,
        lambda a, b: random_rational(rng, max_coeff, nonzero=True)
        if a == b
        else (random_rational(rng, max_coeff) if a < b else Fraction(0)),
    )


def random_invertible_diagonal(rng: random.Random, n: int, max_coeff: int = 20) -> Matrix:
    return Matrix.diagonal([random_rational(rng, max_coeff, nonzero=True) for _ in range(n)])


def random_dual(rng: random.Random, n: int, max_coeff: int = 20) -> Matrix:
    return Matrix.from_function(
        n, lambda a, b: random_rational(rng, max_coeff) if a >= b else Fraction(0)
    )


def random_vector(rng: random.Random, n: int, max_coeff: int = 20) -> list[Fraction]:
    return [random_rational(rng, max_coeff) for _ in range(n)]
