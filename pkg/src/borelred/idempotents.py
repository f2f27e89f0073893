"""Orthogonal idempotents attached to a regular semisimple upper triangular
matrix, plus the entrywise nested-sum formulas used to cross-check them.

For ``r`` with distinct diagonal entries put ``l_k(r) = r - r_kk I``.  The
idempotent for index ``iota`` is the product of all ``l_k(r)`` with
``k != iota`` divided by its trace, which equals ``prod_{k != iota}
(r_ii - r_kk)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionError, NotRegularSemisimpleError
from .matrix import Matrix, is_regular_semisimple


@dataclass(frozen=True)
class Idempotent:
    iota: int
    matrix: Matrix
    source_r: Matrix


def shifted(r: Matrix, k: int) -> Matrix:
    """l_k(r) = r - r_kk I."""
    c = r[k, k]
    return Matrix.from_function(r.n, lambda a, b: r[a, b] - c if a == b else r[a, b])


def _check_index(r: Matrix, iota: int) -> None:
    if not 0 <= iota < r.n:
        raise DimensionError(f"index {iota} out of range for n={r.n}")


def unnormalized_product(r: Matrix, iota: int, order=None) -> Matrix:
    """prod_{k != iota} l_k(r), ascending in k unless ``order`` is given.

    The factors commute, so ``order`` only exists to let tests confirm that.
    """
    ks = [k for k in range(r.n) if k != iota] if order is None else list(order)
    prod = Matrix.identity(r.n)
    for k in ks:
        prod = prod @ shifted(r, k)
    return prod


def normalizer(r: Matrix, iota: int) -> Fraction:
    """prod_{k != iota} (r_ii - r_kk): the trace of the unnormalized product."""
    out = Fraction(1)
    d = r.diag()
    for k in range(r.n):
        if k != iota:
            out *= d[iota] - d[k]
    return out


def idempotent(r: Matrix, iota: int) -> Idempotent:
    _check_index(r, iota)
    if not is_regular_semisimple(r):
        raise NotRegularSemisimpleError(f"diagonal {r.diag()} has repeated entries")
    prod = unnormalized_product(r, iota)
    tr = prod.trace()
    # the trace identity is what makes the normalization well defined
    assert tr == normalizer(r, iota)
    inv = 1 / Fraction(tr)
    return Idempotent(iota, prod.map(lambda x: x * inv), r)


def idempotent_family(r: Matrix) -> list[Idempotent]:
    if not is_regular_semisimple(r):
        raise NotRegularSemisimpleError(f"diagonal {r.diag()} has repeated entries")
    return [idempotent(r, k) for k in range(r.n)]


def family_matrices(r: Matrix) -> list[Matrix]:
    return [L.matrix for L in idempotent_family(r)]


# -- nested-sum closed forms ------------------------------------------------


def closed_form_row_entry(r: Matrix, iota: int, gamma: int) -> Fraction:
    """Entry (iota, gamma), gamma > iota, of the idempotent for ``iota`` by the
    explicit sum over increasing chains iota < k_1 < ... < k_v < gamma.

    This equals the (iota, gamma) entry of the diagonalizing Borel element
    when its diagonal is the identity.
    """
    if gamma <= iota:
        raise ValueError("closed form covers strictly upper entries only")
    d = r.diag()
    ri = d[iota]
    total = r[iota, gamma] / Fraction(ri - d[gamma])
    for v in range(1, gamma - iota):
        for ks in combinations(range(iota + 1, gamma), v):
            term = r[iota, ks[0]] * r[ks[-1], gamma] / Fraction((ri - d[ks[0]]) * (ri - d[gamma]))
            for u in range(v - 1):
                term *= r[ks[u], ks[u + 1]] / Fraction(ri - d[ks[u + 1]])
            total += term
    return total


def closed_form_inverse_entry(r: Matrix, iota: int, gamma: int) -> Fraction:
    """Entry (iota, gamma), gamma > iota, of the inverse diagonalizer (identity
    diagonal), i.e. of the idempotent for ``gamma``, by the chain sum."""
    if gamma <= iota:
        raise ValueError("closed form covers strictly upper entries only")
    d = r.diag()
    rg = d[gamma]
    total = r[iota, gamma] / Fraction(rg - d[iota])
    for v in range(1, gamma - iota):
        for ks in combinations(range(iota + 1, gamma), v):
            term = r[iota, ks[0]] * r[ks[-1], gamma] / Fraction((rg - d[ks[-1]]) * (rg - d[iota]))
            for u in range(v - 1):
                term *= r[ks[u], ks[u + 1]] / Fraction(rg - d[ks[u]])
            total += term
    return total
