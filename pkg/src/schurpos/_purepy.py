"""Pure-Python implementations of the hot kernels.

Used when the compiled ``_speedups`` extension is unavailable, or when
``SCHURPOS_PURE_PYTHON=1`` is set. Results are identical to the compiled
versions; both are exact.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def count_ssyt_content(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of SSYT of ``shape`` with the given content.

    Counts chains of partitions where step ``i`` adds a horizontal strip of
    ``content[i]`` boxes, staying inside ``shape``.
    """
    shape = tuple(shape)
    content = tuple(c for c in content)
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    nrows = len(shape)

    @lru_cache(maxsize=None)
    def rec(step: int, inner: tuple[int, ...]) -> int:
        if step == len(content):
            return 1 if inner == shape else 0
        total = 0
        need = content[step]
        # distribute `need` new boxes over rows; row r may grow up to
        # min(shape[r], inner[r-1]) to keep the strip horizontal
        def place(r: int, left: int, acc: list[int]) -> None:
            nonlocal total
            if r == nrows:
                if left == 0:
                    total += rec(step + 1, tuple(acc))
                return
            cap = shape[r] if r == 0 else min(shape[r], inner[r - 1])
            for add in range(min(left, cap - inner[r]), -1, -1):
                acc.append(inner[r] + add)
                place(r + 1, left - add, acc)
                acc.pop()

        place(0, need, [])
        return total

    return rec(0, (0,) * nrows)


def classify_samples(samples: np.ndarray, kinv: np.ndarray) -> np.ndarray:
    """Exact Schur-positivity test for each row of float monomial coefficients.

    Row ``a`` is positive iff ``a @ kinv`` has no negative entry, evaluated
    exactly: every float is a dyadic rational, so the row is rescaled to a
    common power-of-two denominator and summed in Python integers.
    """
    samples = np.ascontiguousarray(samples, dtype=np.float64)
    n, p = samples.shape
    columns = []
    for j in range(p):
        columns.append([(i, int(kinv[i, j])) for i in range(p) if kinv[i, j] != 0])
    out = np.empty(n, dtype=bool)
    for row_idx, row in enumerate(samples.tolist()):
        ratios = [x.as_integer_ratio() for x in row]
        den = max(d for _, d in ratios)
        nums = [num * (den // d) for num, d in ratios]
        ok = True
        for col in columns:
            if sum(nums[i] * c for i, c in col) < 0:
                ok = False
                break
        out[row_idx] = ok
    return out
