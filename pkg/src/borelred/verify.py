"""Seeded verification suites.  Each suite maps one generated instance to a
dict of ``law -> bool`` (``None`` when a law does not apply at that size);
:func:`run_suite` aggregates these into a :class:`VerificationReport`."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .borel import diagonalizing_borel, orbit_limit
from .idempotents import (
    closed_form_inverse_entry,
    closed_form_row_entry,
    family_matrices,
    idempotent,
    unnormalized_product,
)
from .instances import generate_instance, instance_rng
from .invariants import (
    invariant_vector,
    quotient_map,
    trace_form_F,
    trace_form_G,
)
from .matrix import (
    Matrix,
    Quadruple,
    borel_act,
    commutator,
    project_to_dual,
    upper_triangular_inverse,
)
from .moment import (
    TargetPoint,
    in_zero_fiber_rss,
    moment,
    solve_subdiagonal_s,
    surjectivity_witness,
)
from .sampling import (
    random_borel_element,
    random_distinct,
    random_dual,
    random_invertible_diagonal,
    random_rational,
    random_rss_upper,
    random_vector,
)
from .scalars import LaurentPoly
from .symbolic import (
    SYMBOLIC_MAX_N,
    XYMonomial,
    expand_F,
    jacobian_rank,
    regular_sequence_certificate,
)

SUITES = ("idempotents", "diagonalize", "invariance", "limits", "solver", "symbolic")
JACOBIAN_MAX_N = 4
AGREEMENT_MAX_N = 4
GROUP_SAMPLES = 10


# -- idempotents -------------------------------------------------------------


def check_idempotents(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "idempotents")
    r = random_rss_upper(rng, n, max_coeff)
    s = random_dual(rng, n, max_coeff)
    g = random_borel_element(rng, n, max_coeff)
    c = random_rational(rng, max_coeff, nonzero=True)
    fam = family_matrices(r)
    eye = Matrix.identity(n)
    total = Matrix.zeros(n)
    for L in fam:
        total = total + L
    g_inv = upper_triangular_inverse(g)
    conj = g @ r @ g_inv
    scaled = r.map(lambda x: c * x)
    reversed_order = unnormalized_product(r, 0, order=reversed([k for k in range(n) if k != 0]))
    return {
        "trace_one": all(L.trace() == 1 for L in fam),
        "idempotent": all(L @ L == L for L in fam),
        "orthogonal": all(
            (fam[a] @ fam[b]).is_zero() for a in range(n) for b in range(n) if a != b
        ),
        "sum_identity": total == eye,
        "commutes_with_r": all(L @ r == r @ L for L in fam),
        "vanishing_pattern": all(
            not L[a, b] for k, L in enumerate(fam) for a in range(n) for b in range(n) if a > k or b < k
        ),
        "diagonal_scaling": all(
            (L @ r)[a, a] == r[k, k] * L[a, a] == (r @ L)[a, a]
            for k, L in enumerate(fam)
            for a in range(n)
        ),
        "dual_rows_vanish": all(
            not (L @ s)[a, b] for k, L in enumerate(fam) for a in range(k + 1, n) for b in range(n)
        ),
        "equivariance": all(
            idempotent(conj, k).matrix == g @ fam[k] @ g_inv for k in range(n)
        ),
        "scale_invariance": all(idempotent(scaled, k).matrix == fam[k] for k in range(n)),
        "closed_form_entries": all(
            fam[k][k, b] == closed_form_row_entry(r, k, b) for k in range(n) for b in range(k + 1, n)
        ),
        "product_order_irrelevant": reversed_order == unnormalized_product(r, 0),
    }


# -- diagonalizer --------------------------------------------------------------


def check_diagonalize(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "diagonalize")
    r = random_rss_upper(rng, n, max_coeff)
    s = random_dual(rng, n, max_coeff)
    d = random_invertible_diagonal(rng, n, max_coeff)
    g = random_borel_element(rng, n, max_coeff)
    eye = Matrix.identity(n)
    dr = Matrix.diagonal(r.diag())
    b, b_inv = diagonalizing_borel(r)
    bd, bd_inv = diagonalizing_borel(r, d)
    fam = family_matrices(r)
    g_inv = upper_triangular_inverse(g)
    ds = Matrix.diagonal(s.diag())
    coadj = project_to_dual(bd @ s @ bd_inv)
    return {
        "inverse": b @ b_inv == eye and bd @ bd_inv == eye,
        "diagonalizes": b @ r @ b_inv == dr,
        "random_diag_b": bd @ r @ bd_inv == dr and bd.diag() == d.diag(),
        "closed_form_b": all(
            b[a, c] == closed_form_row_entry(r, a, c) for a in range(n) for c in range(a + 1, n)
        ),
        "closed_form_b_inv": all(
            b_inv[a, c] == closed_form_inverse_entry(r, a, c) for a in range(n) for c in range(a + 1, n)
        ),
        "dual_diagonal_formula": all(coadj[k, k] == (fam[k] @ s).trace() for k in range(n)),
        "conjugation_keeps_diag_r": (g @ r @ g_inv).diag() == r.diag(),
        "diagonal_s_fixed": project_to_dual(g @ ds @ g_inv) == ds,
    }


# -- invariance and the quotient map -----------------------------------------


def check_invariance(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "invariance")
    free = generate_instance(n, seed, "free", max_coeff)
    fiber = generate_instance(n, seed, "fiber", max_coeff)
    base = invariant_vector(free)
    target = quotient_map(fiber)
    F_ok = G_ok = H_ok = K_ok = equiv_ok = stable_ok = orbit_ok = True
    for _ in range(GROUP_SAMPLES):
        g = random_borel_element(rng, n, max_coeff)
        moved = invariant_vector(borel_act(g, free))
        F_ok &= moved.F == base.F
        G_ok &= moved.G == base.G
        H_ok &= moved.H == base.H
        K_ok &= moved.K == base.K
        g_inv = upper_triangular_inverse(g)
        equiv_ok &= moment(borel_act(g, free)) == project_to_dual(g @ moment(free) @ g_inv)
        moved_fiber = borel_act(g, fiber)
        stable_ok &= in_zero_fiber_rss(moved_fiber)
        orbit_ok &= quotient_map(moved_fiber) == target
    x = random_distinct(rng, n, max_coeff)
    y = random_vector(rng, n, max_coeff)
    t = TargetPoint(x, y)
    # a second, distinct closed-orbit representative
    y2 = list(y)
    y2[rng.randrange(n)] += 1
    rep1 = surjectivity_witness(t)
    rep2 = surjectivity_witness(TargetPoint(x, y2))
    return {
        "F_invariant": F_ok,
        "G_invariant": G_ok,
        "H_invariant": H_ok,
        "K_invariant": K_ok,
        "H_is_diagonal_of_r": base.H == free.r.diag(),
        "K_formula": all(
            base.K[(a, c)] == 1 / (free.r[c, c] - free.r[a, a]) for a in range(n) for c in range(a + 1, n)
        ),
        "trace_forms_agree": all(
            trace_form_F(free, k) == base.F[k] and trace_form_G(free, k) == base.G[k] for k in range(n)
        ),
        "moment_equivariant": equiv_ok,
        "fiber_stable": stable_ok,
        "quotient_constant_on_orbit": orbit_ok,
        "witness_roundtrip": quotient_map(rep1) == t
        and quotient_map(surjectivity_witness(t, generic=True, rng=rng, max_coeff=max_coeff)) == t,
        "separation": quotient_map(rep1) != quotient_map(rep2),
    }


# -- orbit limits --------------------------------------------------------------


def check_limits(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "limits")
    q = generate_instance(n, seed, "fiber", max_coeff)
    res = orbit_limit(q)
    lim = res.limit
    inv = invariant_vector(q)
    expected = Quadruple(
        Matrix.diagonal(q.r.diag()), Matrix.diagonal(inv.G), [Fraction(0)] * n, [Fraction(0)] * n
    )
    g = random_borel_element(rng, n, max_coeff)
    laurent_entries = list(res.laurent.r.rows) + list(res.laurent.s.rows) + [res.laurent.i, res.laurent.j]
    return {
        "nonnegative_exponents": all(
            LaurentPoly.lift(x).is_zero() or LaurentPoly.lift(x).min_exponent() >= 0
            for row in laurent_entries
            for x in row
        ),
        "limit_form": lim == expected,
        "limit_commutes": project_to_dual(commutator(lim.r, lim.s)).is_zero(),
        "limit_fixed_by_subgroup": res.subgroup.act(lim) == lim.map(LaurentPoly.constant),
        "limit_invariant_under_b": orbit_limit(borel_act(g, q)).limit == lim,
        "quotient_under_limit": quotient_map(lim) == quotient_map(q),
    }


# -- elimination solver --------------------------------------------------------


def check_solver(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "solver")
    r = random_rss_upper(rng, n, max_coeff)
    i = random_vector(rng, n, max_coeff)
    j = random_vector(rng, n, max_coeff)
    diag_s = random_vector(rng, n, max_coeff)
    s = solve_subdiagonal_s(r, i, j, diag_s)
    q = Quadruple(r, s, i, j)
    mu = moment(q)
    fam = family_matrices(r)
    zero = [Fraction(0)] * n
    s_i0 = solve_subdiagonal_s(r, zero, j, diag_s)
    s_j0 = solve_subdiagonal_s(r, i, zero, diag_s)
    out = {
        "off_diagonal_zero": all(not mu[a, b] for a in range(n) for b in range(n) if a != b),
        "diagonal_is_F": all(
            mu[k, k] == sum(y * v for y, v in zip(j, fam[k].apply(i))) for k in range(n)
        ),
        "keeps_given_diagonal": s.diag() == tuple(diag_s),
        "i_or_j_zero_gives_diagonal_s": s_i0.is_diagonal() and s_j0.is_diagonal(),
        "jacobian_rank_n": None,
    }
    if n <= JACOBIAN_MAX_N:
        p = generate_instance(n, seed, "fiber", max_coeff, idle_prob=0.0)
        out["jacobian_rank_n"] = jacobian_rank(p) == n
    return out


# -- symbolic expansion and term order --------------------------------------


def _random_monomial(rng: random.Random, n: int) -> XYMonomial:
    return XYMonomial(
        tuple(rng.randint(0, 2) for _ in range(n)), tuple(rng.randint(0, 2) for _ in range(n))
    )


def check_symbolic(n: int, seed: int, max_coeff: int = 20) -> dict:
    rng = instance_rng(n, seed, "symbolic")
    out = {"certificate": None, "numeric_agreement": None}
    if n <= SYMBOLIC_MAX_N:
        out["certificate"] = regular_sequence_certificate(n)["passed"]
    if n <= AGREEMENT_MAX_N:
        q = generate_instance(n, seed, "free", max_coeff)
        inv = invariant_vector(q)
        out["numeric_agreement"] = all(
            expand_F(n, k).evaluate(q.r, q.i, q.j) == inv.F[k] for k in range(n)
        )
    a, b, c = (_random_monomial(rng, n) for _ in range(3))
    one = XYMonomial.one(n)
    out["order_total"] = (a < b) + (b < a) + (a == b) == 1
    out["order_transitive"] = not (a < b and b < c) or a < c
    out["order_multiplicative"] = not (a > b) or a * c > b * c
    out["order_artinian"] = a == one or a > one
    return out


CHECKS: dict[str, Callable[[int, int, int], dict]] = {
    "idempotents": check_idempotents,
    "diagonalize": check_diagonalize,
    "invariance": check_invariance,
    "limits": check_limits,
    "solver": check_solver,
    "symbolic": check_symbolic,
}


@dataclass
class LawTally:
    passed: int = 0
    failed: int = 0

    @property
    def trials(self) -> int:
        return self.passed + self.failed


@dataclass
class VerificationReport:
    suite: str
    n_min: int
    n_max: int
    seed: int
    trials: int
    laws: dict = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.laws.values())

    def record(self, law: str, value: bool) -> None:
        tally = self.laws.setdefault(law, LawTally())
        if value:
            tally.passed += 1
        else:
            tally.failed += 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.ok,
            "laws": {
                name: {"pass": t.passed, "fail": t.failed, "trials": t.trials}
                for name, t in sorted(self.laws.items())
            },
            "counterexample": self.counterexample,
        }

    def to_text(self) -> str:
        lines = [
            f"suite {self.suite}: n={self.n_min}..{self.n_max} seed={self.seed} trials={self.trials}"
        ]
        for name, t in sorted(self.laws.items()):
            status = "PASS" if t.failed == 0 else "FAIL"
            lines.append(f"  [{status}] {name}: {t.passed}/{t.trials}")
        if self.counterexample:
            ce = self.counterexample
            lines.append(f"  first counterexample: law={ce['law']} n={ce['n']} seed={ce['seed']}")
        lines.append("ALL PASS" if self.ok else "COUNTEREXAMPLE FOUND")
        return "\n".join(lines)


def _counterexample(suite: str, law: str, n: int, seed: int, max_coeff: int, error: str | None = None) -> dict:
    payload = {"suite": suite, "law": law, "n": n, "seed": seed}
    if error:
        payload["error"] = error
    mode = "fiber" if suite in ("limits",) else "free"
    try:
        payload["instance"] = generate_instance(n, seed, mode, max_coeff).to_json()
    except Exception:  # the instance itself may be what failed
        payload["instance"] = None
    return payload


def run_suite(
    name: str,
    n_max: int,
    trials: int,
    seed: int = 0,
    n_min: int | None = None,
    max_coeff: int = 20,
) -> VerificationReport:
    """Run ``trials`` seeds (``seed, seed+1, ...``) for every n in
    ``n_min..n_max``.  Counterexamples are ordered by (seed, n)."""
    if name != "all" and name not in CHECKS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    names = SUITES if name == "all" else (name,)
    if n_min is None:
        n_min = 1 if name == "symbolic" else 2
    if n_min < 1 or n_max < n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    report = VerificationReport(name, n_min, n_max, seed, 0)
    for trial_seed in range(seed, seed + trials):
        for n in range(n_min, n_max + 1):
            report.trials += 1
            for suite in names:
                prefix = f"{suite}." if name == "all" else ""
                try:
                    results = CHECKS[suite](n, trial_seed, max_coeff)
                except Exception as exc:
                    report.record(f"{prefix}no_exception", False)
                    if report.counterexample is None:
                        report.counterexample = _counterexample(
                            suite, "no_exception", n, trial_seed, max_coeff, repr(exc)
                        )
                    continue
                for law, value in results.items():
                    if value is None:
                        continue
                    report.record(prefix + law, bool(value))
                    if not value and report.counterexample is None:
                        report.counterexample = _counterexample(suite, law, n, trial_seed, max_coeff)
    return report
