"""Geometry of the Schur-positive cone inside the monomial-positive cone.

Three routes to the probability that a random nonnegative symmetric
polynomial of degree k is Schur positive:

* :func:`schur_positivity_probability` -- the product of 1/k_lam;
* :func:`slice_volume_ratio` -- determinants of the simplices cut out by the
  coefficient-sum-one slice;
* :func:`sample_positivity` -- seeded Monte Carlo over that slice.

Only volume *ratios* are formed, so the 1/d! simplex factor is omitted.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import DomainError
from .exactmath import RationalMatrix, determinant, solve
from .kostka import inverse_kostka_int_rows, k_lambda, kostka_matrix
from .partitions import Partition, partitions_of

DEFAULT_SEED = 20181107
BLOCK_SIZE = 8192


def schur_positivity_probability(k: int) -> Fraction:
    if k < 1:
        raise DomainError(f"degree must be positive: {k}")
    prob = Fraction(1)
    for lam in partitions_of(k):
        prob /= k_lambda(lam)
    return prob


@dataclass(frozen=True)
class SliceBasis:
    """Edge vectors of the two simplices, both based at m_(1^k) = s_(1^k).

    ``vertices`` lists the partitions other than (1^k) from the bottom of the
    canonical order upwards, so for k=3 it is ((2,1), (3)). Vectors are stored
    as coefficient lists over ``partitions_of(degree)`` (monomial basis);
    ``v_coords[i]`` holds v_i in the e-basis.
    """

    degree: int
    origin: Partition
    vertices: tuple[Partition, ...]
    e_vectors: tuple[tuple[Fraction, ...], ...]
    v_vectors: tuple[tuple[Fraction, ...], ...]
    v_coords: tuple[tuple[Fraction, ...], ...]

    def _reduced(self, vectors) -> RationalMatrix:
        # drop the origin coordinate: the remaining ones are affine coordinates on the slice
        order = partitions_of(self.degree)
        keep = [order.index(lam) for lam in self.vertices]
        d = len(keep)
        return RationalMatrix([[vectors[j][i] for j in range(d)] for i in keep], cols=d)

    def e_matrix(self) -> RationalMatrix:
        """Columns are the e-vectors in slice coordinates."""
        return self._reduced(self.e_vectors)

    def v_matrix(self) -> RationalMatrix:
        """Columns are the v-vectors in slice coordinates."""
        return self._reduced(self.v_vectors)

    def v_matrix_in_e_basis(self) -> RationalMatrix:
        d = len(self.vertices)
        return RationalMatrix([[self.v_coords[j][i] for j in range(d)] for i in range(d)], cols=d)


def build_slice_basis(k: int) -> SliceBasis:
    if k < 1:
        raise DomainError(f"degree must be positive: {k}")
    km = kostka_matrix(k)
    order = km.order
    origin = order[-1]
    vertices = tuple(reversed(order[:-1]))

    def unit(lam):
        return [Fraction(int(mu == lam)) for mu in order]

    e_vectors = []
    v_vectors = []
    origin_vec = unit(origin)
    for lam in vertices:
        e_vectors.append(tuple(a - b for a, b in zip(unit(lam), origin_vec)))
        row = km.entries.row(km.index(lam))
        kl = sum(row)
        v_vectors.append(tuple(a / kl - b for a, b in zip(row, origin_vec)))

    basis = SliceBasis(k, origin, vertices, tuple(e_vectors), tuple(v_vectors), ())
    e_red = basis.e_matrix()
    d = len(vertices)
    v_red = basis.v_matrix()
    coords = tuple(tuple(solve(e_red, [v_red[i, j] for i in range(d)])) for j in range(d))
    return SliceBasis(k, origin, vertices, tuple(e_vectors), tuple(v_vectors), coords)


def slice_volume_ratio(k: int) -> Fraction:
    """|det V| / |det E| for the Schur and monomial slice simplices."""
    basis = build_slice_basis(k)
    return abs(determinant(basis.v_matrix())) / abs(determinant(basis.e_matrix()))


@dataclass(frozen=True)
class MonteCarloReport:
    degree: int
    samples: int
    seed: int
    positive: int
    estimate: Fraction
    standard_error: float
    exact: Fraction

    @property
    def estimate_float(self) -> float:
        return float(self.estimate)

    def z_score(self) -> float:
        if self.standard_error == 0:
            return 0.0 if self.estimate == self.exact else math.inf
        return float(self.estimate - self.exact) / self.standard_error

    def to_dict(self) -> dict:
        d = asdict(self)
        d["estimate"] = f"{self.estimate.numerator}/{self.estimate.denominator}"
        d["exact"] = f"{self.exact.numerator}/{self.exact.denominator}"
        d["estimate_approx"] = float(self.estimate)
        d["exact_approx"] = float(self.exact)
        return d


def _block_rng(seed: int, block: int) -> np.random.Generator:
    # Philox is counter based; each block owns a disjoint 2**128-draw window
    return np.random.Generator(np.random.Philox(key=seed & (2**64 - 1)).jumped(block))


def draw_block(k: int, seed: int, block: int, count: int) -> np.ndarray:
    """Unnormalised slice samples: one standard exponential per partition of ``k``.

    Dividing a row by its sum gives a uniform point of the simplex; the
    positivity test is scale invariant, so callers may skip the division.
    """
    p = len(partitions_of(k))
    return _block_rng(seed, block).standard_exponential(size=(count, p))


def classify_coefficients(k: int, samples: np.ndarray) -> np.ndarray:
    """Exact Schur-positivity of each row of monomial coefficients (canonical order)."""
    kinv = np.array(inverse_kostka_int_rows(k), dtype=np.int64)
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim != 2 or samples.shape[1] != kinv.shape[0]:
        raise DomainError(f"samples must have {kinv.shape[0]} columns for degree {k}")
    return kernels.classify_samples(samples, kinv)


def sample_positivity(
    k: int,
    n_samples: int,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    block_size: int = BLOCK_SIZE,
) -> MonteCarloReport:
    """Estimate the Schur-positivity probability by uniform sampling of the slice.

    Sample ``i`` always comes from block ``i // block_size`` of the Philox
    stream, so the report is identical for every ``workers`` value.
    """
    if k < 1:
        raise DomainError(f"degree must be positive: {k}")
    if n_samples < 1:
        raise DomainError("need at least one sample")
    kinv = np.array(inverse_kostka_int_rows(k), dtype=np.int64)
    nblocks = -(-n_samples // block_size)

    def run_block(b: int) -> int:
        count = min(block_size, n_samples - b * block_size)
        rows = draw_block(k, seed, b, count)
        return int(np.count_nonzero(kernels.classify_samples(rows, kinv)))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            positive = sum(pool.map(run_block, range(nblocks)))
    else:
        positive = sum(run_block(b) for b in range(nblocks))

    est = Fraction(positive, n_samples)
    p_hat = positive / n_samples
    se = math.sqrt(p_hat * (1 - p_hat) / n_samples)
    return MonteCarloReport(k, n_samples, seed, positive, est, se, schur_positivity_probability(k))
