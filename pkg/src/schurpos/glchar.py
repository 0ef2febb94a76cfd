"""Characters of polynomial GL representations at verification scale.

Only the symmetric square of GL_2 is built as an explicit matrix, in the
ordered basis (x^2, xy, y^2). General characters are evaluated from a given
spectrum through the Schur polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainError
from .exactmath import RationalMatrix, to_rational, trace
from .partitions import Partition
from .symfunc import evaluate, schur_to_monomial


@dataclass(frozen=True)
class RepMatrix:
    matrix: RationalMatrix
    source_dim: int
    target_dim: int


def sym_square_matrix(a: RationalMatrix) -> RepMatrix:
    if a.rows != 2 or a.cols != 2:
        raise DimensionError(f"symmetric square needs a 2x2 matrix, got {a.rows}x{a.cols}")
    p, q = a[0, 0], a[0, 1]
    r, s = a[1, 0], a[1, 1]
    m = RationalMatrix(
        [
            [p * p, 2 * p * q, q * q],
            [p * r, p * s + q * r, q * s],
            [r * r, 2 * r * s, s * s],
        ],
        cols=3,
    )
    return RepMatrix(m, 2, 3)


def char_sym_square(a: RationalMatrix) -> Fraction:
    return trace(sym_square_matrix(a).matrix)


def direct_sum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if not (a.is_square and b.is_square):
        raise DimensionError("direct sum needs square blocks")
    n = a.rows + b.rows
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(a.rows):
        for j in range(a.cols):
            rows[i][j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            rows[a.rows + i][a.rows + j] = b[i, j]
    return RationalMatrix(rows, cols=n)


def char_schur_eval(lam, eigenvalues: Sequence) -> Fraction:
    """Character of the irreducible indexed by ``lam`` at a matrix with this spectrum."""
    lam = Partition(lam)
    xs = [to_rational(v) for v in eigenvalues]
    if len(lam) > len(xs):
        raise DomainError(f"{lam} has more parts than the {len(xs)} eigenvalues")
    return evaluate(schur_to_monomial(lam), xs)
