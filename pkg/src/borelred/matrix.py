"""Dense square matrices over an exact scalar ring, the Borel/dual-Borel
shape predicates, and the action of the Borel group on quadruples.

The dual Borel is modelled as lower triangular matrices (diagonal included),
i.e. a section of gl_n / u.  The coadjoint action is therefore "conjugate,
then zero the strictly upper part".

Indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionError, NotInvertibleError, ShapeError
from .scalars import as_rational, format_rational

MAX_N = 8


class Matrix:
    """Immutable n x n matrix.  Entries may be any exact scalar supporting
    ``+``, ``-``, ``*`` and comparison with ``0``."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("matrix must be square and non-empty")
        self.rows = rows
        self.n = n

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], object]) -> "Matrix":
        return cls([[f(a, b) for b in range(n)] for a in range(n)])

    @classmethod
    def zeros(cls, n: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return cls.from_function(n, lambda a, b: one if a == b else zero)

    @classmethod
    def diagonal(cls, values: Sequence, zero=Fraction(0)) -> "Matrix":
        values = list(values)
        return cls.from_function(len(values), lambda a, b: values[a] if a == b else zero)

    @classmethod
    def unit(cls, n: int, a: int, b: int) -> "Matrix":
        """Elementary matrix E_ab."""
        return cls.from_function(n, lambda x, y: Fraction(int(x == a and y == b)))

    # -- access -----------------------------------------------------------

    def __getitem__(self, idx):
        a, b = idx
        return self.rows[a][b]

    def diag(self) -> tuple:
        return tuple(self.rows[a][a] for a in range(self.n))

    def trace(self):
        total = 0
        for a in range(self.n):
            total = self.rows[a][a] + total
        return total

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in row] for row in self.rows])

    def entries(self):
        for a in range(self.n):
            for b in range(self.n):
                yield a, b, self.rows[a][b]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def matmul(self, other: "Matrix") -> "Matrix":
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = x * y + acc
                new_row.append(acc)
            out.append(new_row)
        return Matrix(out)

    __matmul__ = matmul

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.n:
            raise DimensionError("vector length does not match matrix")
        return tuple(_dot(row, vec) for row in self.rows)

    def rapply(self, covec: Sequence) -> tuple:
        """Row covector times matrix."""
        if len(covec) != self.n:
            raise DimensionError("covector length does not match matrix")
        return tuple(_dot(covec, col) for col in zip(*self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.n != other.n:
            return False
        return all(x == y for r1, r2 in zip(self.rows, other.rows) for x, y in zip(r1, r2))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(_show(x) for x in row) + "]" for row in self.rows)
        return f"Matrix([{body}])"

    # -- shape predicates -------------------------------------------------

    def is_upper(self) -> bool:
        return all(not x for a, b, x in self.entries() if a > b)

    def is_lower(self) -> bool:
        return all(not x for a, b, x in self.entries() if a < b)

    def is_diagonal(self) -> bool:
        return all(not x for a, b, x in self.entries() if a != b)

    def is_zero(self) -> bool:
        return all(not x for _, _, x in self.entries())

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.rows]


def _dot(u: Sequence, v: Sequence):
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = x * y + acc
    return acc


def _show(x) -> str:
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return repr(x)


def outer(col: Sequence, row: Sequence) -> Matrix:
    """Column vector times row covector: the rank-one matrix ``i j``."""
    if len(col) != len(row):
        raise DimensionError("outer product of vectors of different lengths")
    return Matrix([[x * y for y in row] for x in col])


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def is_regular_semisimple(r: Matrix) -> bool:
    """Upper triangular ``r`` is regular semisimple iff its diagonal entries
    (its eigenvalues) are pairwise distinct."""
    d = r.diag()
    return len(set(d)) == len(d)


def project_to_dual(m: Matrix) -> Matrix:
    """Zero the strictly upper part: g* -> b* in the lower-triangular model."""
    return Matrix.from_function(m.n, lambda a, b: m[a, b] if a >= b else m[a, b] * 0)


def lift_from_dual(s: Matrix) -> Matrix:
    """Embed a dual-Borel element back into gl_n (zero strictly upper part)."""
    if not s.is_lower():
        raise ShapeError("not a dual-Borel (lower triangular) matrix")
    return s


def upper_triangular_inverse(b: Matrix) -> Matrix:
    """Exact inverse of an invertible upper triangular matrix by back substitution."""
    if not b.is_upper():
        raise ShapeError("back substitution needs an upper triangular matrix")
    n = b.n
    d = b.diag()
    if any(not x for x in d):
        raise NotInvertibleError("upper triangular matrix with a zero on the diagonal")
    inv = [[Fraction(0)] * n for _ in range(n)]
    # solve b x = e_col for each column, bottom row first
    for col in range(n):
        for a in range(n - 1, -1, -1):
            acc = Fraction(int(a == col))
            for k in range(a + 1, n):
                if b[a, k]:
                    acc -= b[a, k] * inv[k][col]
            inv[a][col] = acc / d[a]
    return Matrix(inv)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rectangular rational matrix by fraction-exact elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    r = 0
    for c in range(n_cols):
        pivot = next((k for k in range(r, len(work)) if work[k][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][c]
        for k in range(r + 1, len(work)):
            f = work[k][c]
            if f:
                f = f / p
                work[k] = [x - f * y for x, y in zip(work[k], work[r])]
        r += 1
        if r == len(work):
            break
    return r


@dataclass(frozen=True)
class Quadruple:
    """A point (r, s, i, j) of T*(b x C^n).

    ``r`` upper triangular, ``s`` lower triangular (the dual-Borel model),
    ``i`` a column vector and ``j`` a row covector.
    """

    r: Matrix
    s: Matrix
    i: tuple
    j: tuple

    def __post_init__(self):
        object.__setattr__(self, "i", tuple(self.i))
        object.__setattr__(self, "j", tuple(self.j))
        n = self.r.n
        if self.s.n != n or len(self.i) != n or len(self.j) != n:
            raise DimensionError("r, s, i and j must share the dimension n")
        if n > MAX_N:
            raise DimensionError(f"n={n} exceeds the configured maximum {MAX_N}")
        if not self.r.is_upper():
            raise ShapeError("r must be upper triangular")
        if not self.s.is_lower():
            raise ShapeError("s must be lower triangular (dual-Borel model)")

    @property
    def n(self) -> int:
        return self.r.n

    def map(self, f: Callable) -> "Quadruple":
        return Quadruple(self.r.map(f), self.s.map(f), tuple(map(f, self.i)), tuple(map(f, self.j)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r.to_json(),
            "s": self.s.to_json(),
            "i": [format_rational(x) for x in self.i],
            "j": [format_rational(x) for x in self.j],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Quadruple":
        try:
            n = int(data["n"])
            r = Matrix([[as_rational(x) for x in row] for row in data["r"]])
            s = Matrix([[as_rational(x) for x in row] for row in data["s"]])
            i = [as_rational(x) for x in data["i"]]
            j = [as_rational(x) for x in data["j"]]
        except KeyError as exc:
            raise DimensionError(f"quadruple JSON is missing field {exc}") from None
        if r.n != n:
            raise DimensionError(f"declared n={n} but r is {r.n}x{r.n}")
        return cls(r, s, i, j)


def act(b: Matrix, b_inv: Matrix, q: Quadruple) -> Quadruple:
    """b.(r, s, i, j) with a caller-supplied inverse (works over any ring)."""
    return Quadruple(
        b @ q.r @ b_inv,
        project_to_dual(b @ q.s @ b_inv),
        b.apply(q.i),
        b_inv.rapply(q.j),
    )


def borel_act(b: Matrix, q: Quadruple) -> Quadruple:
    """(b r b^-1, proj(b s b^-1), b i, j b^-1) for invertible upper triangular b."""
    if b.n != q.n:
        raise DimensionError("group element and quadruple differ in dimension")
    return act(b, upper_triangular_inverse(b), q)
