"""Integer partitions, their canonical order, and rearrangements into compositions."""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable

from .errors import DomainError

Composition = tuple[int, ...]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. Ordering is plain tuple ordering; the
    canonical listing used everywhere else is *descending* lexicographic.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise DomainError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise DomainError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


def partition_from_composition(c: Iterable[int]) -> Partition:
    return Partition(sorted((p for p in c if p), reverse=True))


@lru_cache(maxsize=None)
def _partitions_cached(k: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    return tuple(out)


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in descending lexicographic order.

    ``partitions_of(0)`` is ``[Partition(())]``; negative ``k`` is rejected.
    """
    if k < 0:
        raise DomainError(f"cannot partition a negative integer: {k}")
    return list(_partitions_cached(k))


def compositions_sorting_to(lam: Partition, n: int) -> list[Composition]:
    """Distinct length-``n`` sequences whose nonzero entries sort to ``lam``.

    Generated as multiset permutations in lexicographically decreasing order.
    Returns ``[]`` when ``lam`` has more than ``n`` parts.
    """
    if len(lam) > n:
        return []
    values = sorted(set(lam) | ({0} if len(lam) < n else set()), reverse=True)
    counts = {v: 0 for v in values}
    for p in lam:
        counts[p] += 1
    counts[0] = counts.get(0, 0) + n - len(lam)

    out: list[Composition] = []
    current: list[int] = []

    def rec() -> None:
        if len(current) == n:
            out.append(tuple(current))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                current.append(v)
                rec()
                current.pop()
                counts[v] += 1

    rec()
    return out


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (every prefix sum of ``lam`` is at least ``mu``'s)."""
    if sum(mu) != sum(lam):
        raise DomainError(f"dominance compares partitions of one size, got {mu} and {lam}")
    n = max(len(mu), len(lam))
    pm = accumulate(tuple(mu) + (0,) * (n - len(mu)))
    pl = accumulate(tuple(lam) + (0,) * (n - len(lam)))
    return all(a <= b for a, b in zip(pm, pl))


def parse_partition(text: str) -> Partition:
    """Parse ``[3,2,1]`` or bare ``3,2,1``; ``[]`` is the empty partition."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    elif "[" in s or "]" in s:
        raise DomainError(f"unbalanced brackets in partition {text!r}")
    s = s.strip()
    if not s:
        return Partition(())
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise DomainError(f"partition parts must be integers: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise DomainError(f"partition parts must be positive integers: {text!r}")
    return Partition(parts)
