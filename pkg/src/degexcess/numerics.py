"""Exact integer/rational linear algebra.

Rationals are :class:`fractions.Fraction`, which is kept in lowest terms with a
positive denominator after every operation.  Integers are Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, SingularMatrixError

BigRational = Fraction


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntegerMatrix":
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, ())

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def with_column(self, j: int, column: Sequence[int]) -> "IntegerMatrix":
        """Copy of the matrix with column ``j`` replaced."""
        if len(column) != self.rows:
            raise DimensionError("replacement column has wrong length")
        rows = self.to_rows()
        for i, x in enumerate(column):
            rows[i][j] = int(x)
        return IntegerMatrix.from_rows(rows)

    def apply(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows)]


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_cramer(a: IntegerMatrix, b: Sequence[int]) -> tuple[tuple[Fraction, ...], int]:
    """Unique solution of ``a x = b`` by Cramer's rule, plus ``det(a)``."""
    if a.rows != a.cols:
        raise DimensionError("Cramer's rule needs a square matrix")
    if len(b) != a.rows:
        raise DimensionError("right-hand side has wrong length")
    det = determinant(a)
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    sol = tuple(Fraction(determinant(a.with_column(j, b)), det) for j in range(a.cols))
    return sol, det


def lcm_denominators(v: Iterable[Fraction]) -> int:
    out = 1
    for x in v:
        out = math.lcm(out, Fraction(x).denominator)
    return out


def ceil_sqrt(n: int) -> int:
    """Smallest integer ``k`` with ``k*k >= n``."""
    if n < 0:
        raise ValueError("negative argument")
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def hadamard_bound(s: int, delta: int) -> int:
    """Integer over-approximation ``ceil(sqrt(s^s)) * delta^s``."""
    return ceil_sqrt(s ** s) * delta ** s


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def kernel_vector(rows: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """A non-zero rational vector in the null space of ``rows``, or None."""
    if not rows:
        raise DimensionError("empty matrix")
    ncols = len(rows[0])
    a, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = [Fraction(0)] * ncols
    x[f] = Fraction(1)
    for i, c in enumerate(pivots):
        x[c] = -a[i][f]
    return tuple(x)


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen: list[int] = []
    basis: list[Sequence] = []
    for i, r in enumerate(rows):
        trial = basis + [r]
        if len(_rref(trial)[1]) == len(trial):
            basis.append(r)
            chosen.append(i)
    return chosen
