"""The closed-form diagonalizing Borel element, one-parameter subgroups and
limits of orbits as t -> 0.

Limits are taken symbolically: the acted quadruple is built over Laurent
polynomials in ``t`` and the limit exists exactly when no entry carries a
negative power of ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidFiberPointError,
    LimitDoesNotExistError,
    NotInFiberError,
    NotInvertibleError,
    NotRegularSemisimpleError,
)
from .idempotents import family_matrices
from .matrix import Matrix, Quadruple, act, is_regular_semisimple
from .moment import in_zero_fiber_rss
from .scalars import LaurentPoly, laurent_limit_at_zero


def diagonalizing_borel(r: Matrix, d: Matrix | None = None) -> tuple[Matrix, Matrix]:
    """Return ``(b, b_inv)`` with ``b r b_inv = diag(r)``.

    ``b = sum_k E_kk d L^k`` and ``b_inv = sum_k L^k d^-1 E_kk``, where ``d``
    is an invertible diagonal matrix playing the role of diag(b) (identity by
    default).  Row k of ``b`` is ``d_kk`` times row k of ``L^k``; column k of
    ``b_inv`` is column k of ``L^k`` divided by ``d_kk``.
    """
    n = r.n
    if not is_regular_semisimple(r):
        raise NotRegularSemisimpleError(f"diagonal {r.diag()} has repeated entries")
    if d is None:
        d = Matrix.identity(n)
    if not d.is_diagonal() or d.n != n:
        raise ValueError("d must be an n x n diagonal matrix")
    dd = d.diag()
    if any(not x for x in dd):
        raise NotInvertibleError("diag(b) has a zero entry")
    fam = family_matrices(r)
    b = Matrix([[dd[k] * fam[k][k, c] for c in range(n)] for k in range(n)])
    b_inv = Matrix([[fam[c][a, c] / dd[c] for c in range(n)] for a in range(n)])
    if b @ b_inv != Matrix.identity(n):
        raise AssertionError("diagonalizer is not inverse to its claimed inverse")
    if b @ r @ b_inv != Matrix.diagonal(r.diag()):
        raise AssertionError("diagonalizer failed to diagonalize r")
    return b, b_inv


@dataclass(frozen=True)
class OneParamSubgroup:
    """lambda(t) = diag(t^a_1, ..., t^a_n)."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def matrix(self) -> Matrix:
        return Matrix.diagonal([LaurentPoly.monomial(a) for a in self.exponents], zero=LaurentPoly())

    def inverse_matrix(self) -> Matrix:
        return Matrix.diagonal([LaurentPoly.monomial(-a) for a in self.exponents], zero=LaurentPoly())

    def act(self, q: Quadruple) -> Quadruple:
        """lambda(t).q as a quadruple with Laurent polynomial entries."""
        lifted = q.map(LaurentPoly.constant)
        return act(self.matrix(), self.inverse_matrix(), lifted)


def limit_exponents(i_prime: Sequence, j_prime: Sequence) -> OneParamSubgroup:
    """+1 where i' is nonzero, -1 where j' is nonzero, 0 elsewhere."""
    if len(i_prime) != len(j_prime):
        raise ValueError("i' and j' differ in length")
    exps = []
    for k, (x, y) in enumerate(zip(i_prime, j_prime)):
        if x and y:
            raise InvalidFiberPointError(f"i'_{k} and j'_{k} are both nonzero")
        exps.append(1 if x else (-1 if y else 0))
    return OneParamSubgroup(exps)


@dataclass(frozen=True)
class OrbitLimit:
    limit: Quadruple
    subgroup: OneParamSubgroup
    diagonalized: Quadruple
    laurent: Quadruple
    diagonalizer: Matrix


def orbit_limit(q: Quadruple, d: Matrix | None = None) -> OrbitLimit:
    """Degenerate ``q`` to the closed-orbit point (diag r, diag s', 0, 0).

    ``q`` is first diagonalized, then moved by the one-parameter subgroup
    chosen from the supports of the transformed ``i`` and ``j``; the limit
    at t = 0 is read off the Laurent entries.
    """
    if not in_zero_fiber_rss(q):
        raise NotInFiberError("orbit limits are only taken on the rss zero fiber")
    b, b_inv = diagonalizing_borel(q.r, d)
    qd = act(b, b_inv, q)
    lam = limit_exponents(qd.i, qd.j)
    lq = lam.act(qd)
    for label, entries in (
        ("r", lq.r.rows),
        ("s", lq.s.rows),
        ("i", (lq.i,)),
        ("j", (lq.j,)),
    ):
        for row in entries:
            for x in row:
                low = LaurentPoly.lift(x).min_exponent()
                if low is not None and low < 0:
                    raise LimitDoesNotExistError(f"negative t-power in {label}: {x!r}")
    # the subgroup has weight zero on diag(s)
    for k in range(q.n):
        if not LaurentPoly.lift(lq.s[k, k]).is_constant():
            raise AssertionError("one-parameter subgroup moved a diagonal entry of s")
    limit = lq.map(laurent_limit_at_zero)
    return OrbitLimit(limit, lam, qd, lq, b)
