"""Symbolic expansion of F_k = tr(j L^k i) over Q(r_kl), the weighted
lex / reversed-lex monomial order on the x, y variables, initial terms and the
regular-sequence certificate.

The entries of ``i`` are the variables x_1..x_n and those of ``j`` are
y_1..y_n, so F_k = sum_{g, m} y_g L^k_{gm} x_m.  Coefficients are rational
functions in the upper triangular entries r_kl and are treated as constants
by the order: they are homogeneous of degree 0 in r, matching weight 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import SymbolicSizeError
from .matrix import Matrix, Quadruple, rank
from .scalars import MultiRational, Poly

SYMBOLIC_MAX_N = 5


def r_name(k: int, l: int) -> str:
    return f"r{k + 1}{l + 1}" if max(k, l) < 9 else f"r{k + 1}_{l + 1}"


def x_name(k: int) -> str:
    return f"x{k + 1}"


def y_name(k: int) -> str:
    return f"y{k + 1}"


def r_variables(n: int) -> list[str]:
    return [r_name(k, l) for k in range(n) for l in range(k, n)]


def free_variables(n: int) -> list[str]:
    """Coordinates F depends on once ``s`` is eliminated: r, x, y."""
    return r_variables(n) + [x_name(k) for k in range(n)] + [y_name(k) for k in range(n)]


def symbolic_r(n: int) -> Matrix:
    return Matrix.from_function(n, lambda a, b: Poly.var(r_name(a, b)) if a <= b else Poly())


@total_ordering
@dataclass(frozen=True)
class XYMonomial:
    """x_1^a_1 ... x_n^a_n y_n^b_n ... y_1^b_1 (exponents stored in natural index order)."""

    x_exponents: tuple
    y_exponents: tuple

    @classmethod
    def xy(cls, n: int, mu: int, gamma: int) -> "XYMonomial":
        """The bilinear monomial x_mu y_gamma."""
        return cls(
            tuple(int(k == mu) for k in range(n)),
            tuple(int(k == gamma) for k in range(n)),
        )

    @classmethod
    def one(cls, n: int) -> "XYMonomial":
        return cls((0,) * n, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.x_exponents)

    def order_key(self) -> tuple:
        # x-block in natural order, then the y-block read from y_n down to y_1
        return tuple(self.x_exponents) + tuple(reversed(self.y_exponents))

    def __lt__(self, other: "XYMonomial") -> bool:
        return self.order_key() < other.order_key()

    def __mul__(self, other: "XYMonomial") -> "XYMonomial":
        return XYMonomial(
            tuple(a + b for a, b in zip(self.x_exponents, other.x_exponents)),
            tuple(a + b for a, b in zip(self.y_exponents, other.y_exponents)),
        )

    def degree(self) -> int:
        return sum(self.x_exponents) + sum(self.y_exponents)

    def weight(self) -> int:
        # every x and y has weight 1; r-coefficients have weight 0
        return self.degree()

    def support(self) -> frozenset:
        return frozenset(
            [("x", k) for k, e in enumerate(self.x_exponents) if e]
            + [("y", k) for k, e in enumerate(self.y_exponents) if e]
        )

    def coprime_to(self, other: "XYMonomial") -> bool:
        return not (self.support() & other.support())

    def __str__(self) -> str:
        parts = []
        for k, e in enumerate(self.x_exponents):
            if e:
                parts.append(x_name(k) if e == 1 else f"{x_name(k)}^{e}")
        for k, e in enumerate(self.y_exponents):
            if e:
                parts.append(y_name(k) if e == 1 else f"{y_name(k)}^{e}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class SymbolicBilinear:
    n: int
    iota: int
    terms: dict

    def coefficient(self, mono: XYMonomial):
        return self.terms.get(mono, MultiRational(0))

    def evaluate(self, r: Matrix, x, y) -> Fraction:
        values = _point_values(r, x, y)
        return sum((c.evaluate(values) * _mono_value(m, x, y) for m, c in self.terms.items()), Fraction(0))


def _mono_value(m: XYMonomial, x, y) -> Fraction:
    out = Fraction(1)
    for k, e in enumerate(m.x_exponents):
        if e:
            out *= Fraction(x[k]) ** e
    for k, e in enumerate(m.y_exponents):
        if e:
            out *= Fraction(y[k]) ** e
    return out


def _point_values(r: Matrix, x, y) -> dict:
    n = r.n
    values = {r_name(k, l): r[k, l] for k in range(n) for l in range(k, n)}
    values.update({x_name(k): x[k] for k in range(n)})
    values.update({y_name(k): y[k] for k in range(n)})
    return values


def _check_size(n: int, iota: int) -> None:
    if n < 1 or n > SYMBOLIC_MAX_N:
        raise SymbolicSizeError(f"symbolic expansion supports 1 <= n <= {SYMBOLIC_MAX_N}, got {n}")
    if not 0 <= iota < n:
        raise SymbolicSizeError(f"index {iota} out of range for n={n}")


@lru_cache(maxsize=None)
def _product_and_trace(n: int, iota: int) -> tuple[Matrix, Poly]:
    R = symbolic_r(n)
    P = Matrix.identity(n, one=Poly.const(1), zero=Poly())
    for k in range(n):
        if k == iota:
            continue
        rkk = R[k, k]
        P = P @ Matrix.from_function(n, lambda a, b: R[a, b] - rkk if a == b else R[a, b])
    return P, Poly._coerce(P.trace())


def expand_F(n: int, iota: int) -> SymbolicBilinear:
    """F_iota as sum over nonzero coefficients c_{gm} of c_{gm} x_m y_g."""
    _check_size(n, iota)
    P, T = _product_and_trace(n, iota)
    terms = {}
    for g in range(n):
        for m in range(n):
            entry = Poly._coerce(P[g, m])
            if not entry.is_zero():
                terms[XYMonomial.xy(n, m, g)] = MultiRational(entry, T)
    return SymbolicBilinear(n, iota, terms)


def F_rational_function(n: int, iota: int) -> MultiRational:
    """F_iota as one quotient (sum_{g,m} P_gm x_m y_g) / tr(P)."""
    _check_size(n, iota)
    P, T = _product_and_trace(n, iota)
    num = Poly()
    for g in range(n):
        for m in range(n):
            entry = Poly._coerce(P[g, m])
            if not entry.is_zero():
                num = num + entry * Poly.var(x_name(m)) * Poly.var(y_name(g))
    return MultiRational(num, T)


def initial_term(f: SymbolicBilinear) -> XYMonomial:
    if not f.terms:
        raise ValueError("the zero polynomial has no initial term")
    return max(f.terms)


def regular_sequence_certificate(n: int) -> dict:
    """Check that In(F_k) = x_k y_k with coefficient 1 for every k and that
    these initial monomials are pairwise coprime (a monomial regular
    sequence).  Failures are reported, not raised."""
    _check_size(n, 0)
    rvars = r_variables(n)
    entries = []
    initials = []
    for iota in range(n):
        f = expand_F(n, iota)
        lead = initial_term(f)
        expected = XYMonomial.xy(n, iota, iota)
        coeff = f.coefficient(lead)
        support_ok = all(
            m.x_exponents.index(1) >= iota and m.y_exponents.index(1) <= iota for m in f.terms
        )
        entries.append(
            {
                "iota": iota + 1,
                "initial_monomial": str(lead),
                "is_x_iota_y_iota": lead == expected,
                "coefficient_is_one": coeff == 1,
                "support_pattern": support_ok,
                "weight_zero_coefficients": all(
                    c.is_homogeneous_degree_zero(rvars) for c in f.terms.values()
                ),
                "support_size": len(f.terms),
            }
        )
        initials.append(lead)
    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            pairs.append(
                {"pair": [a + 1, b + 1], "coprime": initials[a].coprime_to(initials[b])}
            )
    passed = all(
        e["is_x_iota_y_iota"] and e["coefficient_is_one"] and e["support_pattern"]
        and e["weight_zero_coefficients"]
        for e in entries
    ) and all(p["coprime"] for p in pairs)
    return {"n": n, "passed": passed, "initial_terms": entries, "coprime_pairs": pairs}


def F_jacobian(q: Quadruple) -> list[list[Fraction]]:
    """Exact Jacobian of (F_1..F_n) in the free coordinates (r_kl, x, y) at q."""
    n = q.n
    values = _point_values(q.r, q.i, q.j)
    names = free_variables(n)
    rows = []
    for iota in range(n):
        F = F_rational_function(n, iota)
        N = F.num.evaluate(values)
        T = F.den.evaluate(values)
        row = []
        for v in names:
            Nv = F.num.diff(v).evaluate(values)
            Tv = F.den.diff(v).evaluate(values)
            row.append((Nv * T - N * Tv) / (T * T))
        rows.append(row)
    return rows


def jacobian_rank(q: Quadruple) -> int:
    return rank(F_jacobian(q))
