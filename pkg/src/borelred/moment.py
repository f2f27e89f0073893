"""The Borel moment map mu(r, s, i, j) = proj([r, s] + i j), membership in the
regular semisimple zero fiber, level-by-level elimination of the strictly
lower entries of ``s``, and explicit preimages of target points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, NotInTargetError, NotRegularSemisimpleError
from .idempotents import idempotent_family
from .matrix import (
    Matrix,
    Quadruple,
    commutator,
    is_regular_semisimple,
    outer,
    project_to_dual,
)
from .sampling import random_rational


@dataclass(frozen=True)
class TargetPoint:
    """A point (x, y) of C^2n whose x-block has pairwise distinct entries."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        object.__setattr__(self, "y", tuple(Fraction(v) for v in self.y))
        if len(self.x) != len(self.y) or not self.x:
            raise DimensionError("x and y must be non-empty and of equal length")
        if len(set(self.x)) != len(self.x):
            raise NotInTargetError(f"x entries {self.x} are not pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.x)


def moment(q: Quadruple) -> Matrix:
    return project_to_dual(commutator(q.r, q.s) + outer(q.i, q.j))


def in_zero_fiber_rss(q: Quadruple) -> bool:
    return is_regular_semisimple(q.r) and moment(q).is_zero()


def elimination_order(n: int) -> list[tuple[int, int]]:
    """Strictly lower positions (row, col) in solving order: level n-1 (the
    corner) first, then each lower level; rows increasing within a level."""
    order = []
    for level in range(n - 1, 0, -1):
        for row in range(level, n):
            order.append((row, row - level))
    return order


def solve_subdiagonal_s(r: Matrix, i: Sequence, j: Sequence, diag_s: Sequence) -> Matrix:
    """Return ``s`` with diagonal ``diag_s`` whose strictly lower entries make
    every off-diagonal entry of the moment map vanish.

    The diagonal of the moment map is left alone; it equals tr(j L i) for the
    idempotents L of ``r`` and is not forced to zero here.
    """
    n = r.n
    if len(i) != n or len(j) != n or len(diag_s) != n:
        raise DimensionError("r, i, j and diag_s must share the dimension n")
    if not r.is_upper():
        raise ValueError("r must be upper triangular")
    if not is_regular_semisimple(r):
        raise NotRegularSemisimpleError(f"diagonal {r.diag()} has repeated entries")
    s = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        s[a][a] = Fraction(diag_s[a])
    for a, g in elimination_order(n):
        acc = Fraction(i[a]) * Fraction(j[g])
        for k in range(a + 1, n):
            acc += r[a, k] * s[k][g]
        for k in range(g):
            acc -= s[a][k] * r[k, g]
        s[a][g] = acc / (r[g, g] - r[a, a])
    return Matrix(s)


def diagonal_correction(r: Matrix, s: Matrix, y: Sequence) -> Matrix:
    """Replace the diagonal of ``s`` so that tr(L^k s) = y_k for every k.

    Only the k-th diagonal entry of ``s`` enters tr(L^k s) (with weight 1),
    so s_kk = y_k - tr(L^k (s - diag s)).
    """
    off = Matrix.from_function(s.n, lambda a, b: s[a, b] if a != b else Fraction(0))
    fam = idempotent_family(r)
    new_diag = [Fraction(y[k]) - (fam[k].matrix @ off).trace() for k in range(s.n)]
    return Matrix.from_function(s.n, lambda a, b: new_diag[a] if a == b else s[a, b])


def surjectivity_witness(
    t: TargetPoint,
    generic: bool = False,
    rng: random.Random | None = None,
    max_coeff: int = 20,
) -> Quadruple:
    """A point of the rss zero fiber lying over ``t``.

    By default the closed-orbit representative (diag x, diag y, 0, 0).  With
    ``generic`` a non-diagonal witness: random strictly upper part of ``r``,
    random ``i``, ``j = 0`` (which kills every diagonal moment entry), ``s``
    from the elimination solver and then the diagonal correction.
    """
    n = t.n
    zero = [Fraction(0)] * n
    if not generic:
        return Quadruple(Matrix.diagonal(t.x), Matrix.diagonal(t.y), zero, zero)
    rng = rng or random.Random(0)
    r = Matrix.from_function(
        n, lambda a, b: t.x[a] if a == b else (random_rational(rng, max_coeff) if a < b else Fraction(0))
    )
    i = [random_rational(rng, max_coeff) for _ in range(n)]
    s = solve_subdiagonal_s(r, i, zero, zero)
    s = diagonal_correction(r, s, t.y)
    return Quadruple(r, s, i, zero)
