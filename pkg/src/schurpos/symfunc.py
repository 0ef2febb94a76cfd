"""Homogeneous symmetric polynomials as exact coefficient vectors over partitions.

A :class:`SymPoly` does not carry a variable count. The number of variables
only enters through :func:`expand_in_variables` and :func:`evaluate`, where
monomials m_lam with more parts than variables vanish.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import DomainError
from .exactmath import to_rational
from .kostka import inverse_kostka_matrix, kostka_matrix
from .partitions import Composition, Partition, compositions_sorting_to, partitions_of

MONOMIAL = "monomial"
SCHUR = "schur"
_BASES = (MONOMIAL, SCHUR)


@dataclass(frozen=True)
class SymPoly:
    degree: int
    basis: str
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in _BASES:
            raise DomainError(f"unknown basis {self.basis!r}")
        if self.degree < 0:
            raise DomainError("degree must be non-negative")
        clean: dict[Partition, Fraction] = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.size() != self.degree:
                raise DomainError(f"{lam} is not a partition of {self.degree}")
            c = to_rational(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        order = partitions_of(self.degree)
        canonical = {lam: clean[lam] for lam in order if clean.get(lam)}
        object.__setattr__(self, "coeffs", MappingProxyType(canonical))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.degree, self.basis, dict(self.coeffs)) == (other.degree, other.basis, dict(other.coeffs))

    def __hash__(self) -> int:
        return hash((self.degree, self.basis, tuple(self.coeffs.items())))

    def coefficient(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> list[Fraction]:
        """Coefficients over ``partitions_of(degree)`` in canonical order."""
        return [self.coefficient(lam) for lam in partitions_of(self.degree)]

    def __add__(self, other: SymPoly) -> SymPoly:
        return add(self, other)

    def __neg__(self) -> SymPoly:
        return scale(self, -1)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return add(self, scale(other, -1))

    def __rmul__(self, c) -> SymPoly:
        return scale(self, c)


@dataclass(frozen=True)
class MonomialExpansion:
    """Explicit polynomial in ``n`` variables: exponent vector -> coefficient."""

    n: int
    terms: Mapping[Composition, Fraction]

    def is_symmetric(self) -> bool:
        for alpha, c in self.terms.items():
            for perm in set(itertools.permutations(alpha)):
                if self.terms.get(perm) != c:
                    return False
        return True

    def permuted(self, sigma: Sequence[int]) -> MonomialExpansion:
        """Apply x_i -> x_sigma(i) (0-based ``sigma``)."""
        out = {}
        for alpha, c in self.terms.items():
            beta = [0] * self.n
            for i, e in enumerate(alpha):
                beta[sigma[i]] = e
            out[tuple(beta)] = c
        return MonomialExpansion(self.n, out)


def monomial_sym(lam) -> SymPoly:
    lam = Partition(lam)
    return SymPoly(lam.size(), MONOMIAL, {lam: 1})


def schur_sym(lam) -> SymPoly:
    """The basis element s_lam written in the Schur basis."""
    lam = Partition(lam)
    return SymPoly(lam.size(), SCHUR, {lam: 1})


def schur_to_monomial(lam) -> SymPoly:
    """s_lam = sum over mu of K_{lam,mu} m_mu."""
    lam = Partition(lam)
    km = kostka_matrix(lam.size())
    i = km.index(lam)
    return SymPoly(lam.size(), MONOMIAL, dict(zip(km.order, km.entries.row(i))))


def to_monomial_basis(f: SymPoly) -> SymPoly:
    if f.basis == MONOMIAL:
        return f
    out = SymPoly(f.degree, MONOMIAL, {})
    for lam, c in f.coeffs.items():
        out = add(out, scale(schur_to_monomial(lam), c))
    return out


def to_schur_basis(f: SymPoly) -> SymPoly:
    """Rewrite a monomial-basis polynomial in the Schur basis (exact)."""
    if f.basis == SCHUR:
        return f
    order = partitions_of(f.degree)
    inv = inverse_kostka_matrix(f.degree)
    a = f.vector()
    p = len(order)
    g = {}
    for j in range(p):
        c = sum((a[i] * inv[i, j] for i in range(j + 1) if a[i]), Fraction(0))
        if c:
            g[order[j]] = c
    return SymPoly(f.degree, SCHUR, g)


def is_schur_positive(f: SymPoly) -> bool:
    """True iff every Schur coefficient is >= 0 (closed cone; zero counts)."""
    return all(c >= 0 for c in to_schur_basis(f).coeffs.values())


def add(f: SymPoly, g: SymPoly) -> SymPoly:
    if f.degree != g.degree:
        raise DomainError(f"cannot add degree {f.degree} and degree {g.degree}")
    if f.basis != g.basis:
        raise DomainError(f"cannot add {f.basis}-basis and {g.basis}-basis polynomials")
    out = dict(f.coeffs)
    for lam, c in g.coeffs.items():
        out[lam] = out.get(lam, Fraction(0)) + c
    return SymPoly(f.degree, f.basis, out)


def scale(f: SymPoly, c) -> SymPoly:
    c = to_rational(c)
    return SymPoly(f.degree, f.basis, {lam: c * a for lam, a in f.coeffs.items()})


def expand_in_variables(f: SymPoly, n: int) -> MonomialExpansion:
    if n < 0:
        raise DomainError("variable count must be non-negative")
    f = to_monomial_basis(f)
    terms: dict[Composition, Fraction] = {}
    for lam, c in f.coeffs.items():
        for alpha in compositions_sorting_to(lam, n):
            terms[alpha] = c
    return MonomialExpansion(n, terms)


def evaluate(f: SymPoly, x: Sequence) -> Fraction:
    """Exact value of ``f`` at the point ``x`` (one coordinate per variable)."""
    xs = [to_rational(v) for v in x]
    expansion = expand_in_variables(f, len(xs))
    total = Fraction(0)
    for alpha, c in expansion.terms.items():
        term = c
        for v, e in zip(xs, alpha):
            if e:
                term *= v ** e
        total += term
    return total


def format_sympoly(f: SymPoly) -> str:
    """Render as ``c*s[2,1] - m[1,1,1]``; the zero polynomial renders as ``0``."""
    letter = "m" if f.basis == MONOMIAL else "s"
    pieces: list[str] = []
    for lam, c in f.coeffs.items():
        mag = abs(c)
        body = f"{letter}{lam}" if mag == 1 else f"{mag}*{letter}{lam}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) if pieces else "0"
