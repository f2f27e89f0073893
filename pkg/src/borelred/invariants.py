"""B-invariant functions F, G, H, K on the regular semisimple locus and the
quotient map to C^2n minus the diagonal locus.

With L^k the idempotents of r:

    F_k = tr(j L^k i)         G_k = tr(L^k s)
    H_k = tr(L^k r) = r_kk    K_gv = 1 / tr((L^v - L^g) r)   (g < v)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotInFiberError, NotRegularSemisimpleError
from .idempotents import family_matrices, idempotent, unnormalized_product
from .matrix import Matrix, Quadruple, is_regular_semisimple
from .moment import TargetPoint, in_zero_fiber_rss
from .scalars import format_rational


def _require_rss(q: Quadruple) -> None:
    if not is_regular_semisimple(q.r):
        raise NotRegularSemisimpleError(f"diagonal {q.r.diag()} has repeated entries")


def _F(L: Matrix, q: Quadruple) -> Fraction:
    return Fraction(sum(x * y for x, y in zip(q.j, L.apply(q.i))))


def invariant_F(q: Quadruple, iota: int) -> Fraction:
    _require_rss(q)
    return _F(idempotent(q.r, iota).matrix, q)


def invariant_G(q: Quadruple, iota: int) -> Fraction:
    _require_rss(q)
    return Fraction((idempotent(q.r, iota).matrix @ q.s).trace())


def invariant_H(q: Quadruple, iota: int) -> Fraction:
    _require_rss(q)
    return Fraction((idempotent(q.r, iota).matrix @ q.r).trace())


def invariant_K(q: Quadruple, gamma: int, nu: int) -> Fraction:
    """1 / tr((L^nu - L^gamma) r); antisymmetric in (gamma, nu)."""
    _require_rss(q)
    diff = idempotent(q.r, nu).matrix - idempotent(q.r, gamma).matrix
    return 1 / Fraction((diff @ q.r).trace())


# un-normalized trace forms, used to cross-check the idempotent route


def trace_form_F(q: Quadruple, iota: int) -> Fraction:
    P = unnormalized_product(q.r, iota)
    return Fraction(sum(x * y for x, y in zip(q.j, P.apply(q.i)))) / P.trace()


def trace_form_G(q: Quadruple, iota: int) -> Fraction:
    P = unnormalized_product(q.r, iota)
    return Fraction((P @ q.s).trace()) / P.trace()


@dataclass(frozen=True)
class InvariantVector:
    F: tuple
    G: tuple
    H: tuple
    K: dict = field(compare=True)

    def K_of(self, gamma: int, nu: int) -> Fraction:
        if gamma < nu:
            return self.K[(gamma, nu)]
        if gamma > nu:
            return -self.K[(nu, gamma)]
        raise KeyError("K is undefined on the diagonal")

    def to_json(self) -> dict:
        return {
            "F": [format_rational(v) for v in self.F],
            "G": [format_rational(v) for v in self.G],
            "H": [format_rational(v) for v in self.H],
            "K": {f"{g + 1},{v + 1}": format_rational(k) for (g, v), k in sorted(self.K.items())},
        }


def invariant_vector(q: Quadruple) -> InvariantVector:
    """All four families at once, sharing one idempotent family."""
    _require_rss(q)
    fam = family_matrices(q.r)
    n = q.n
    F = tuple(_F(L, q) for L in fam)
    G = tuple(Fraction((L @ q.s).trace()) for L in fam)
    Lr = [Fraction((L @ q.r).trace()) for L in fam]
    H = tuple(Lr)
    K = {(g, v): 1 / (Lr[v] - Lr[g]) for g in range(n) for v in range(g + 1, n)}
    return InvariantVector(F, G, H, K)


def quotient_map(q: Quadruple) -> TargetPoint:
    """(r_11..r_nn, G_1..G_n) for a point of the rss zero fiber."""
    if not in_zero_fiber_rss(q):
        raise NotInFiberError("the quotient map is defined on the rss zero fiber only")
    fam = family_matrices(q.r)
    x = [Fraction((L @ q.r).trace()) for L in fam]
    y = [Fraction((L @ q.s).trace()) for L in fam]
    return TargetPoint(x, y)
