"""Exact rational scalars and small dense matrices.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator. :class:`RationalMatrix` is an immutable row-major
container with the handful of operations the rest of the package needs.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionError, SingularError

BigRational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions, floats (exactly) and ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        # binary floats are dyadic rationals; Fraction(float) is exact
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class RationalMatrix:
    """Dense matrix of exact rationals.

    >>> RationalMatrix([[1, 2], [3, 4]]).determinant()
    Fraction(-2, 1)
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = [tuple(to_rational(x) for x in row) for row in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.entries: tuple[Fraction, ...] = tuple(x for row in rows for x in row)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> RationalMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], cols=self.rows
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))
        return f"RationalMatrix([{body}])"

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return mat_mul(self, other)

    def determinant(self) -> Fraction:
        return determinant(self)

    def trace(self) -> Fraction:
        return trace(self)

    def inverse(self) -> RationalMatrix:
        return inverse(self)


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Entries are first scaled to integers by the lcm of their denominators so
    that every Bareiss division is exact in the integers.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    for x in m.entries:
        scale = math.lcm(scale, x.denominator)
    a = [[int(x * scale) for x in m.row(i)] for i in range(n)]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale ** n)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = [b.entries[j::b.cols] for j in range(b.cols)]
    out = [[sum((x * y for x, y in zip(a.row(i), col)), Fraction(0)) for col in bt] for i in range(a.rows)]
    return RationalMatrix(out, cols=b.cols)


def trace(m: RationalMatrix) -> Fraction:
    if not m.is_square:
        raise DimensionError("trace of a non-square matrix")
    return sum((m[i, i] for i in range(m.rows)), Fraction(0))


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Gauss-Jordan inverse over the rationals."""
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularError("matrix is not invertible")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return RationalMatrix([row[n:] for row in aug], cols=n)


def solve(m: RationalMatrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``m @ x = rhs`` exactly for square nonsingular ``m``."""
    if not m.is_square or m.rows != len(rhs):
        raise DimensionError("solve needs a square system matching the right-hand side")
    inv = inverse(m)
    b = [to_rational(x) for x in rhs]
    return [sum((x * y for x, y in zip(inv.row(i), b)), Fraction(0)) for i in range(m.rows)]
