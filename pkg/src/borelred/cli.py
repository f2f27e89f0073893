"""Command line interface.

Exit status: 0 on success / all laws passing, 1 when a counterexample or a
failed certificate is found, 2 on usage, input or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .borel import diagonalizing_borel, orbit_limit
from .errors import BorelError
from .instances import generate_instance, instance_rng
from .invariants import invariant_vector, quotient_map
from .matrix import Matrix, Quadruple
from .moment import TargetPoint, moment, solve_subdiagonal_s, surjectivity_witness
from .scalars import as_rational, format_rational
from .symbolic import expand_F, initial_term, regular_sequence_certificate
from .verify import SUITES, run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_quadruple(path: str) -> Quadruple:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise UsageError("a quadruple file must hold a JSON object")
    return Quadruple.from_json(data)


def _load_matrix(path: str) -> Matrix:
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("r")
    if not isinstance(data, list):
        raise UsageError("expected a JSON matrix (list of rows) or an object with an 'r' field")
    return Matrix([[as_rational(x) for x in row] for row in data])


def _vector(text: str) -> list[Fraction]:
    return [as_rational(part) for part in text.split(",")]


def _rationals(values) -> list[str]:
    return [format_rational(v) for v in values]


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    q = generate_instance(args.n, args.seed, args.mode, args.max_coeff)
    _dump(q.to_json())
    return EXIT_OK


def cmd_moment(args) -> int:
    q = _load_quadruple(args.quadruple)
    mu = moment(q)
    _dump({"moment": mu.to_json(), "is_zero": mu.is_zero()})
    return EXIT_OK


def cmd_solve(args) -> int:
    r = _load_matrix(args.r)
    n = r.n
    i = _vector(args.i) if args.i else [Fraction(0)] * n
    j = _vector(args.j) if args.j else [Fraction(0)] * n
    diag_s = _vector(args.diag_s) if args.diag_s else [Fraction(0)] * n
    s = solve_subdiagonal_s(r, i, j, diag_s)
    q = Quadruple(r, s, i, j)
    mu = moment(q)
    _dump({"quadruple": q.to_json(), "F": _rationals(mu.diag())})
    return EXIT_OK


def cmd_witness(args) -> int:
    t = TargetPoint(_vector(args.x), _vector(args.y))
    rng = instance_rng(t.n, args.seed, "witness")
    q = surjectivity_witness(t, generic=args.generic, rng=rng, max_coeff=args.max_coeff)
    _dump(q.to_json())
    return EXIT_OK


def cmd_quotient(args) -> int:
    t = quotient_map(_load_quadruple(args.quadruple))
    _dump({"x": _rationals(t.x), "y": _rationals(t.y)})
    return EXIT_OK


def cmd_invariants(args) -> int:
    _dump(invariant_vector(_load_quadruple(args.quadruple)).to_json())
    return EXIT_OK


def cmd_limit(args) -> int:
    res = orbit_limit(_load_quadruple(args.quadruple))
    _dump({"limit": res.limit.to_json(), "exponents": list(res.subgroup.exponents)})
    return EXIT_OK


def cmd_diag(args) -> int:
    r = _load_matrix(args.r)
    d = Matrix.diagonal(_vector(args.d)) if args.d else None
    b, b_inv = diagonalizing_borel(r, d)
    _dump({"b": b.to_json(), "b_inv": b_inv.to_json(), "diagonalized": (b @ r @ b_inv).to_json()})
    return EXIT_OK


def cmd_initial_terms(args) -> int:
    out = []
    for iota in range(args.n):
        f = expand_F(args.n, iota)
        lead = initial_term(f)
        out.append(
            {
                "iota": iota + 1,
                "initial_monomial": str(lead),
                "coefficient_is_one": f.coefficient(lead) == 1,
                "support_size": len(f.terms),
            }
        )
    _dump(out)
    return EXIT_OK


def cmd_regseq(args) -> int:
    report = regular_sequence_certificate(args.n)
    _dump(report)
    return EXIT_OK if report["passed"] else EXIT_COUNTEREXAMPLE


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.n, args.trials, args.seed, args.n_min, args.max_coeff)
    if args.json:
        _dump(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=4, help="dimension (upper bound for verify)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=20, help="seeds per dimension for verify")
    common.add_argument("--json", action="store_true", help="JSON output for verify reports")
    common.add_argument("--max-coeff", type=int, default=20, help="bound on random numerators/denominators")

    parser = argparse.ArgumentParser(
        prog="borelred",
        description="Exact checks for the Borel moment map on T*(b x C^n) and its quotient.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    p.add_argument("--mode", choices=("fiber", "free"), default="fiber")
    p.set_defaults(func=cmd_gen)

    for name, func, help_text in (
        ("moment", cmd_moment, "moment map of a quadruple"),
        ("quotient", cmd_quotient, "quotient map of a zero-fiber point"),
        ("invariants", cmd_invariants, "F, G, H, K of a quadruple"),
        ("limit", cmd_limit, "closed-orbit limit of a zero-fiber point"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("quadruple", help="quadruple JSON file ('-' for stdin)")
        p.set_defaults(func=func)

    p = sub.add_parser("solve", parents=[common], help="eliminate the strictly lower part of s")
    p.add_argument("--r", required=True, help="JSON file with an upper triangular matrix")
    p.add_argument("--i", help="comma separated vector, e.g. 1,1")
    p.add_argument("--j", help="comma separated covector")
    p.add_argument("--diag-s", help="comma separated diagonal of s")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("witness", parents=[common], help="zero-fiber point over a target (x, y)")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--generic", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("diag", parents=[common], help="closed-form diagonalizing Borel element")
    p.add_argument("r", help="JSON matrix or quadruple file ('-' for stdin)")
    p.add_argument("--d", help="comma separated diagonal of b (default all ones)")
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("initial-terms", parents=[common], help="initial terms of the F_k")
    p.set_defaults(func=cmd_initial_terms)

    p = sub.add_parser("regseq", parents=[common], help="regular-sequence certificate")
    p.set_defaults(func=cmd_regseq)

    p = sub.add_parser("verify", parents=[common], help="run a seeded verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--n-min", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BorelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
