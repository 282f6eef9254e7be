"""Dense exact linear algebra over the rationals.

Everything here is deterministic: elimination always picks the first
nonzero pivot in column order, so kernels, determinants and echelon
forms are byte-for-byte reproducible for a given input.  Scalars are
``fractions.Fraction`` throughout (auto-reduced, positive denominator).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like ``"p/q"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, str or Fraction")
    return Fraction(x)


class Matrix:
    """Immutable dense matrix with Fraction entries, row-major."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Iterable]) -> None:
        data = tuple(tuple(rat(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ValueError("rows must be nonempty and of equal length")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(x for row in self._rows for x in row)

    def at(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose()._rows
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        v = [rat(x) for x in vec]
        if len(v) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._rows)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * x for x in row] for row in self._rows])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # first nonzero in column order, scanning rows top down
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.rows]
    return len(_rref(rows)[1])


def kernel_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {v : m v = 0}.

    Derived from the reduced echelon form: one vector per free column,
    with a 1 in the free slot.  Deterministic for a given input; an
    empty list means the kernel is trivial.
    """
    rows = [list(r) for r in m.rows]
    red, pivots = _rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def _bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant via integer Bareiss after clearing denominators."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for row in m.rows:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scale *= d
        int_rows.append([int(x * d) for x in row])
    return Fraction(_bareiss_int(int_rows), 1) / scale


def solve(m: Matrix, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of m x = rhs, or None if inconsistent.

    When the system is underdetermined the free variables are set to 0,
    so the answer is deterministic.
    """
    b = [rat(x) for x in rhs]
    if len(b) != m.nrows:
        raise ValueError("shape mismatch")
    rows = [list(r) + [bv] for r, bv in zip(m.rows, b)]
    red, pivots = _rref(rows)
    for r in range(len(pivots), m.nrows):
        if red[r][m.ncols] != 0:
            return None
    x = [Fraction(0)] * m.ncols
    for r, c in enumerate(pivots):
        if c == m.ncols:
            return None
        x[c] = red[r][m.ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    rows = [list(r) + list(Matrix.identity(n).rows[i]) for i, r in enumerate(m.rows)]
    red, pivots = _rref(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in red])
