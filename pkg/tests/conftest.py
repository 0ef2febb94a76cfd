import itertools
import random
from fractions import Fraction

import pytest

from schurpos import _purepy

try:
    from schurpos import _speedups
except ImportError:  # extension not built
    _speedups = None

BACKENDS = [pytest.param(_purepy, id="python")]
BACKENDS.append(
    pytest.param(_speedups, id="cython", marks=pytest.mark.skipif(_speedups is None, reason="extension not built"))
)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def random_rational(rng: random.Random, bound: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def cofactor_det(rows):
    """Laplace expansion along the first row; independent determinant oracle."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


def brute_partitions(k):
    """All weakly decreasing positive sequences summing to k, by filtering compositions."""
    out = set()
    for length in range(1, k + 1):
        for seq in itertools.product(range(1, k + 1), repeat=length):
            if sum(seq) == k and all(seq[i] >= seq[i + 1] for i in range(length - 1)):
                out.add(seq)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_RESULTS
    except ImportError:
        return
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
