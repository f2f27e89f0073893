"""Deterministic test instances: free quadruples and points of the
regular semisimple zero fiber."""

from __future__ import annotations

import random
from fractions import Fraction

from .borel import diagonalizing_borel
from .errors import GenerationError
from .matrix import Quadruple
from .moment import in_zero_fiber_rss, solve_subdiagonal_s
from .sampling import random_dual, random_rational, random_rss_upper, random_vector

MODES = ("fiber", "free")


def instance_rng(n: int, seed: int, salt: str = "instance") -> random.Random:
    return random.Random(f"borelred:{salt}:{n}:{seed}")


def generate_instance(
    n: int,
    seed: int,
    mode: str = "fiber",
    max_coeff: int = 20,
    idle_prob: float = 0.2,
) -> Quadruple:
    """Draw a quadruple, reproducibly in ``(n, seed)``.

    ``free``: random rss ``r``, lower ``s``, ``i`` and ``j``.

    ``fiber``: random rss ``r`` with diagonalizer ``b``.  Each index k is
    assigned to ``i`` or ``j`` (or, with probability ``idle_prob``, to
    neither) and ``i' = b i``, ``j' = j b^-1`` are drawn nonzero only on
    their assigned indices, so that every F_k = j'_k i'_k vanishes.  ``s`` then
    comes from the elimination solver with a random diagonal.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    rng = instance_rng(n, seed)
    r = random_rss_upper(rng, n, max_coeff)
    if mode == "free":
        return Quadruple(r, random_dual(rng, n, max_coeff), random_vector(rng, n, max_coeff),
                         random_vector(rng, n, max_coeff))
    b, b_inv = diagonalizing_borel(r)
    i_prime = [Fraction(0)] * n
    j_prime = [Fraction(0)] * n
    for k in range(n):
        if rng.random() < idle_prob:
            continue
        if rng.random() < 0.5:
            i_prime[k] = random_rational(rng, max_coeff, nonzero=True)
        else:
            j_prime[k] = random_rational(rng, max_coeff, nonzero=True)
    i = b_inv.apply(i_prime)
    j = b.rapply(j_prime)
    diag_s = random_vector(rng, n, max_coeff)
    s = solve_subdiagonal_s(r, i, j, diag_s)
    q = Quadruple(r, s, i, j)
    if not in_zero_fiber_rss(q):
        raise GenerationError("constructed fiber instance is not in the zero fiber")
    return q
