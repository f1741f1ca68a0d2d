"""Exact integer/rational linear algebra.

Rationals are :class:`fractions.Fraction`; vectors are plain tuples of
Fractions. Matrices are small (a few dozen rows), so everything is dense
Gaussian elimination over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSymmetric, SingularMatrix

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction. Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'a/b'")
    return Fraction(x)


def ratvec(xs: Iterable) -> tuple:
    return tuple(rat(x) for x in xs)


def format_rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IntMat:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        if not all(isinstance(e, int) for e in self.entries):
            raise TypeError("IntMat entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMat:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(int(e) for r in rows for e in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def matvec(self, x: Sequence) -> tuple:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.cols} columns")
        return tuple(
            sum((self[i, j] * x[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows))


def solve_exact(M: IntMat, b: Sequence) -> tuple:
    """Solve ``M x = b`` over Q by Gaussian elimination with largest-magnitude pivoting."""
    if not M.is_square:
        raise DimensionMismatch(f"matrix is {M.rows}x{M.cols}, not square")
    n = M.rows
    if len(b) != n:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {n}")
    a = [[Fraction(M[i, j]) for j in range(n)] + [rat(b[i])] for i in range(n)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            raise SingularMatrix("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pivot_row = a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / pivot_row[col]
                row = a[r]
                for c in range(col, n + 1):
                    row[c] -= f * pivot_row[c]
    return tuple(a[i][n] / a[i][i] for i in range(n))


def leading_pivots(M: IntMat) -> list:
    """Pivots of elimination without row exchanges.

    The k-th pivot equals D_k / D_{k-1} where D_k is the k-th leading
    principal minor; a zero minor stops the elimination.
    """
    n = M.rows
    a = [[Fraction(M[i, j]) for j in range(n)] for i in range(n)]
    pivots = []
    for k in range(n):
        p = a[k][k]
        pivots.append(p)
        if p == 0:
            break
        for r in range(k + 1, n):
            if a[r][k] != 0:
                f = a[r][k] / p
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
    return pivots


def determinant(M: IntMat) -> int:
    if not M.is_square:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = M.rows
    a = [[Fraction(M[i, j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def is_negative_definite(M: IntMat) -> bool:
    """Sylvester's criterion: leading principal minors alternate in sign, starting negative."""
    if not M.is_symmetric():
        raise NotSymmetric("negative definiteness is only defined here for symmetric matrices")
    if M.rows == 0:
        return True
    pivots = leading_pivots(M)
    return len(pivots) == M.rows and all(p < 0 for p in pivots)
