"""Semistandard Young tableaux: enumeration, weights, and the Bender-Knuth involution."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .partitions import Composition, Partition


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row (top row first)."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in rows if len(r)))
        # raises if the row lengths are not a partition
        Partition(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entry(self, r: int, c: int) -> int | None:
        if 0 <= r < len(self.rows) and 0 <= c < len(self.rows[r]):
            return self.rows[r][c]
        return None

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def render(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def __str__(self) -> str:
        return "/".join("{" + ",".join(str(x) for x in r) + "}" for r in self.rows)


def is_semistandard(t: Tableau) -> bool:
    for r, row in enumerate(t.rows):
        if any(x < 1 for x in row):
            return False
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r:
            above = t.rows[r - 1]
            if any(above[c] >= row[c] for c in range(len(row))):
                return False
    return True


def _column_lengths(shape: Sequence[int]) -> list[int]:
    return [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []


def enumerate_ssyt(shape: Partition, max_entry: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries in ``1..max_entry``.

    Cells are filled in row-major order with candidate values ascending, so
    the output is sorted lexicographically by reading word.
    """
    if max_entry < 1:
        raise DomainError("max_entry must be at least 1")
    shape = Partition(shape)
    if len(shape) > max_entry:
        return []
    cols = _column_lengths(shape)
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    grid = [[0] * p for p in shape]
    out: list[Tableau] = []

    def rec(idx: int) -> None:
        if idx == len(cells):
            out.append(Tableau(grid))
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = grid[r][c - 1]
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the strictly increasing cells further down this column
        hi = max_entry - (cols[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            rec(idx + 1)

    rec(0)
    return out


def enumerate_ssyt_content(shape: Partition, content: Composition) -> list[Tableau]:
    """All SSYT of ``shape`` in which entry ``i`` occurs exactly ``content[i-1]`` times."""
    shape = Partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise DomainError(f"content entries must be non-negative: {content}")
    if sum(content) != sum(shape):
        return []
    n = len(content)
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    grid = [[0] * p for p in shape]
    remaining = list(content)
    out: list[Tableau] = []

    def rec(idx: int) -> None:
        if idx == len(cells):
            out.append(Tableau(grid))
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = grid[r][c - 1]
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                rec(idx + 1)
                remaining[v - 1] += 1

    rec(0)
    return out


def weight(t: Tableau) -> Composition:
    """Multiplicity of each entry ``1..max`` in ``t``, i.e. the exponent vector of x^T."""
    word = t.reading_word()
    if not word:
        return ()
    counts = [0] * max(word)
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def bender_knuth(t: Tableau, i: int) -> Tableau:
    """Bender-Knuth involution exchanging the roles of ``i`` and ``i+1``.

    An ``i`` with ``i+1`` directly below it, and an ``i+1`` with ``i`` directly
    above it, are fixed. In each row the remaining free entries form a
    contiguous run of ``a`` copies of ``i`` then ``b`` copies of ``i+1``; that
    run is rewritten as ``b`` copies of ``i`` then ``a`` copies of ``i+1``.
    """
    if i < 1:
        raise DomainError("Bender-Knuth index must be a positive integer")
    rows = [list(r) for r in t.rows]
    for r, row in enumerate(t.rows):
        free: list[int] = []
        n_i = 0
        for c, x in enumerate(row):
            if x == i and t.entry(r + 1, c) != i + 1:
                free.append(c)
                n_i += 1
            elif x == i + 1 and t.entry(r - 1, c) != i:
                free.append(c)
        n_next = len(free) - n_i
        for k, c in enumerate(free):
            rows[r][c] = i if k < n_next else i + 1
    return Tableau(rows)
