"""Exact computations for the Borel moment map on T*(b x C^n): orthogonal
idempotents of a regular semisimple upper triangular matrix, the closed-form
diagonalizer, the moment map and its zero fiber, B-invariant functions, the
quotient map to C^2n, orbit-closure limits, and initial terms of the F_k."""

__version__ = "0.1.0"

from .borel import OneParamSubgroup, diagonalizing_borel, limit_exponents, orbit_limit
from .idempotents import Idempotent, idempotent, idempotent_family
from .instances import generate_instance
from .invariants import (
    InvariantVector,
    invariant_F,
    invariant_G,
    invariant_H,
    invariant_K,
    invariant_vector,
    quotient_map,
)
from .matrix import Matrix, Quadruple, borel_act, is_regular_semisimple, project_to_dual
from .moment import TargetPoint, in_zero_fiber_rss, moment, solve_subdiagonal_s, surjectivity_witness
from .scalars import LaurentPoly, MultiRational, Poly, laurent_limit_at_zero, parse_rational
from .symbolic import XYMonomial, expand_F, initial_term, regular_sequence_certificate
from .verify import run_suite
