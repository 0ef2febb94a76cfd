"""Kostka numbers, the Kostka matrix, its row sums and its integer inverse."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DomainError
from .exactmath import RationalMatrix
from .partitions import Partition, partitions_of


@dataclass(frozen=True)
class KostkaMatrix:
    """Entry ``(i, j)`` is K_{order[i], order[j]}; ``order`` is ``partitions_of(degree)``."""

    degree: int
    order: tuple[Partition, ...]
    entries: RationalMatrix

    def index(self, lam: Partition) -> int:
        return self.order.index(Partition(lam))

    def as_int_rows(self) -> list[list[int]]:
        return [[int(x) for x in self.entries.row(i)] for i in range(self.entries.rows)]


def kostka_number(lam: Partition, mu) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu``; 0 when the sizes differ.

    ``mu`` may be any composition, not only a partition.
    """
    lam = Partition(lam)
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise DomainError(f"content entries must be non-negative: {mu}")
    if sum(lam) != sum(mu):
        return 0
    return int(kernels.count_ssyt_content(tuple(lam), mu))


_cache_lock = threading.Lock()
_matrix_cache: dict[int, KostkaMatrix] = {}
_inverse_cache: dict[int, RationalMatrix] = {}


def kostka_matrix(k: int) -> KostkaMatrix:
    if k < 0:
        raise DomainError(f"degree must be non-negative: {k}")
    cached = _matrix_cache.get(k)
    if cached is not None:
        return cached
    order = tuple(partitions_of(k))
    rows = [[kostka_number(lam, mu) for mu in order] for lam in order]
    km = KostkaMatrix(k, order, RationalMatrix(rows, cols=len(order)))
    with _cache_lock:
        return _matrix_cache.setdefault(k, km)


def k_lambda(lam: Partition) -> int:
    """Row sum of the Kostka matrix at ``lam``."""
    lam = Partition(lam)
    return sum(kostka_number(lam, mu) for mu in partitions_of(lam.size()))


def inverse_kostka_matrix(k: int) -> RationalMatrix:
    """Exact inverse of ``kostka_matrix(k).entries`` by back-substitution.

    The Kostka matrix is upper unitriangular in the canonical order, so the
    inverse is upper unitriangular with integer entries.
    """
    cached = _inverse_cache.get(k)
    if cached is not None:
        return cached
    km = kostka_matrix(k)
    a = km.as_int_rows()
    p = len(a)
    inv = [[0] * p for _ in range(p)]
    for j in range(p):
        inv[j][j] = 1
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(a[i][t] * inv[t][j] for t in range(i + 1, j + 1))
    result = RationalMatrix(inv, cols=p)
    with _cache_lock:
        return _inverse_cache.setdefault(k, result)


def inverse_kostka_int_rows(k: int) -> list[list[int]]:
    inv = inverse_kostka_matrix(k)
    return [[int(Fraction(x)) for x in inv.row(i)] for i in range(inv.rows)]
