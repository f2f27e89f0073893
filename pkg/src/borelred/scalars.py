"""Exact scalars: rationals, Laurent polynomials in ``t`` and sparse
multivariate rational functions over the rationals.

Everything here is immutable.  The ground field is Q; every identity the
library checks is polynomial in the matrix entries, so checking it on Q-points
is the same as checking it on a Zariski-dense set of complex points.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import LimitDoesNotExistError, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a canonical :class:`Fraction`.

    >>> parse_rational("3/6")
    Fraction(1, 2)
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce JSON-ish input (str, int, Fraction) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"cannot read {value!r} as an exact rational")


# ---------------------------------------------------------------------------
# Laurent polynomials in one formal variable t


class LaurentPoly:
    """Finite sum of ``c * t**e`` with integer ``e`` (possibly negative)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        cleaned = {}
        for exp, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                cleaned[int(exp)] = c
        self._coeffs = cleaned

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c=1) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def _coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls({0: other})
        return NotImplemented

    @classmethod
    def lift(cls, value) -> "LaurentPoly":
        """Promote a rational (or pass through a LaurentPoly)."""
        out = cls._coerce(value)
        if out is NotImplemented:
            raise TypeError(f"cannot view {value!r} as a Laurent polynomial")
        return out

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def min_exponent(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a single term is exact in this ring
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._coeffs) != 1:
            raise ZeroDivisionError("can only divide a Laurent polynomial by a nonzero monomial")
        (e, c), = other._coeffs.items()
        return LaurentPoly({k - e: v / c for k, v in self._coeffs.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"{format_rational(c)}*t^{e}" for e, c in sorted(self._coeffs.items()))
        return f"LaurentPoly({terms})"

    def to_json(self) -> dict[str, str]:
        return {str(e): format_rational(c) for e, c in sorted(self._coeffs.items())}


def laurent_limit_at_zero(f) -> Fraction:
    """Limit of ``f(t)`` as ``t -> 0``; raises if ``f`` has a pole there."""
    f = LaurentPoly._coerce(f)
    if f is NotImplemented:
        raise TypeError("expected a LaurentPoly or rational")
    low = f.min_exponent()
    if low is None or low > 0:
        return Fraction(0)
    if low < 0:
        raise LimitDoesNotExistError(f"pole of order {-low} at t=0 in {f!r}")
    return f.coefficient(0)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials and unreduced rational functions

# A monomial is a sorted tuple of (variable name, positive exponent) pairs.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    db = dict(b)
    return tuple((v, min(e, db[v])) for v, e in a if v in db)


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] -= e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


class Poly:
    """Sparse polynomial with Fraction coefficients in named variables.

    Terms are kept in a dict ``{monomial: coefficient}`` with no zero
    coefficients, so structural equality is polynomial equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        cleaned = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                cleaned[tuple(mono)] = c
        self.terms = cleaned

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls({(): other})
        return NotImplemented

    def variables(self) -> set[str]:
        return {v for mono in self.terms for v, _ in mono}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self, variables: Iterable[str] | None = None) -> int:
        """Total degree, optionally counting only ``variables``."""
        keep = None if variables is None else set(variables)
        best = -1
        for mono in self.terms:
            d = sum(e for v, e in mono if keep is None or v in keep)
            best = max(best, d)
        return best

    def is_homogeneous(self, variables: Iterable[str] | None = None) -> bool:
        keep = None if variables is None else set(variables)
        degs = {sum(e for v, e in mono if keep is None or v in keep) for mono in self.terms}
        return len(degs) <= 1

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Largest monomial under plain lex on the sorted (name, exp) tuples.

        Only used to fix a canonical sign; carries no mathematical meaning.
        """
        mono = max(self.terms)
        return mono, self.terms[mono]

    def content_monomial(self) -> Monomial:
        monos = iter(self.terms)
        g = next(monos, ())
        for m in monos:
            if not g:
                break
            g = _mono_gcd(g, m)
        return g

    def divide_monomial(self, mono: Monomial) -> "Poly":
        return Poly({_mono_div(m, mono): c for m, c in self.terms.items()})

    def diff(self, name: str) -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            exps = dict(mono)
            e = exps.get(name, 0)
            if not e:
                continue
            if e == 1:
                del exps[name]
            else:
                exps[name] = e - 1
            m = tuple(sorted(exps.items()))
            out[m] = out.get(m, 0) + c * e
        return Poly(out)

    def evaluate(self, values: Mapping[str, object]):
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                term = term * Fraction(values[v]) ** e
            total += term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{format_rational(c)}*{body}")
        return " + ".join(parts)


class MultiRational:
    """Quotient of two :class:`Poly` values, kept unreduced.

    Only the common monomial content is cancelled and the denominator's
    leading coefficient made positive; equality is decided by
    cross-multiplication, so no multivariate gcd is needed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly._coerce(num)
        den = Poly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("MultiRational needs polynomial numerator and denominator")
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            g = _mono_gcd(num.content_monomial(), den.content_monomial())
            if g:
                num, den = num.divide_monomial(g), den.divide_monomial(g)
            if den.leading_term()[1] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, MultiRational):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return cls(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return MultiRational(self.num + other.num, self.den)
        return MultiRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return MultiRational(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return MultiRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self.num * other.den - other.num * self.den).is_zero()

    # cross-multiplication equality cannot be made consistent with a hash
    __hash__ = None

    def diff(self, name: str) -> "MultiRational":
        return MultiRational(
            self.num.diff(name) * self.den - self.num * self.den.diff(name),
            self.den * self.den,
        )

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(values) / d

    def is_homogeneous_degree_zero(self, variables: Iterable[str]) -> bool:
        """True when numerator and denominator are homogeneous of equal degree
        in ``variables`` (so the value is unchanged by scaling them)."""
        variables = list(variables)
        if self.is_zero():
            return True
        return (
            self.num.is_homogeneous(variables)
            and self.den.is_homogeneous(variables)
            and self.num.degree(variables) == self.den.degree(variables)
        )

    def __repr__(self):
        if self.den == Poly.const(1):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


Scalar = Union[Fraction, LaurentPoly, Poly, MultiRational]
