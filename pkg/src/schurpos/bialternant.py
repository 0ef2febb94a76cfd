"""Schur polynomials as a quotient of alternants, evaluated at exact rational points."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError, SingularError
from .exactmath import RationalMatrix, determinant, to_rational
from .partitions import Partition


def vandermonde(x: Sequence) -> Fraction:
    """det(x_i^(n-j)), which equals the product of (x_i - x_j) over i < j."""
    xs = [to_rational(v) for v in x]
    n = len(xs)
    return determinant(RationalMatrix([[v ** (n - 1 - j) for j in range(n)] for v in xs], cols=n))


def alternant(exponents: Sequence[int], x: Sequence) -> Fraction:
    """det(x_i^(exponents[j]))."""
    xs = [to_rational(v) for v in x]
    if len(exponents) != len(xs):
        raise DomainError("need one exponent per variable")
    return determinant(RationalMatrix([[v ** e for e in exponents] for v in xs], cols=len(xs)))


def bialternant_eval(mu, x: Sequence) -> Fraction:
    """s_mu(x) as det(x_i^(mu_j + n - j)) / det(x_i^(n - j)).

    ``mu`` is padded with zeros to ``n = len(x)``. The points must be pairwise
    distinct, otherwise the Vandermonde denominator vanishes.
    """
    mu = Partition(mu)
    xs = [to_rational(v) for v in x]
    n = len(xs)
    if len(mu) > n:
        raise DomainError(f"{mu} has more than {n} parts")
    if len(set(xs)) != n:
        raise SingularError("evaluation points must be pairwise distinct")
    padded = mu.padded(n)
    num = alternant([padded[j] + n - 1 - j for j in range(n)], xs)
    den = vandermonde(xs)
    return num / den
