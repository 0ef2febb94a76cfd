from fractions import Fraction

import numpy as np
import pytest

from schurpos.conegeom import (
    DEFAULT_SEED,
    build_slice_basis,
    classify_coefficients,
    draw_block,
    sample_positivity,
    schur_positivity_probability,
    slice_volume_ratio,
)
from schurpos.errors import DomainError
from schurpos.exactmath import determinant
from schurpos.kostka import k_lambda, kostka_matrix
from schurpos.partitions import Partition, partitions_of

PAPER_PROBABILITIES = {
    1: Fraction(1),
    2: Fraction(1, 2),
    3: Fraction(1, 9),
    4: Fraction(1, 560),
    5: Fraction(1, 480480),
    6: Fraction(1, 1027458432000),
    7: Fraction(1, 2465474364698304960000),
}


def test_probability_examples():
    assert schur_positivity_probability(3) == Fraction(1, 9)
    assert schur_positivity_probability(1) == 1
    assert schur_positivity_probability(7) == Fraction(1, 2465474364698304960000)
    with pytest.raises(DomainError):
        schur_positivity_probability(0)


def test_probability_decreasing():
    values = [schur_positivity_probability(k) for k in range(1, 9)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert all(v < 1 for v in values[1:])


def test_slice_basis_degree_three():
    b = build_slice_basis(3)
    assert b.origin == (1, 1, 1)
    assert b.vertices == ((2, 1), (3,))
    third = Fraction(1, 3)
    assert b.v_coords == ((third, 0), (third, third))
    # both endpoints lie on the coefficient-sum-one slice
    for v in b.v_vectors:
        assert sum(v) == 0
    assert abs(determinant(b.e_matrix())) == 1
    assert abs(determinant(b.v_matrix())) == Fraction(1, 9)


def test_slice_basis_degree_one_is_a_point():
    b = build_slice_basis(1)
    assert b.vertices == () and b.v_coords == ()
    assert slice_volume_ratio(1) == 1


def test_slice_basis_degree_four_triangular():
    b = build_slice_basis(4)
    assert len(b.e_vectors) == len(b.v_vectors) == 4
    v = b.v_matrix_in_e_basis()
    for i in range(4):
        for j in range(4):
            if i > j:
                assert v[i, j] == 0
        assert v[i, i] == Fraction(1, k_lambda(b.vertices[i]))
    km = kostka_matrix(4)
    for j, lam in enumerate(b.vertices):
        row = km.entries.row(km.index(lam))
        for i, mu in enumerate(b.vertices):
            assert v[i, j] == row[km.index(mu)] / sum(row)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_slice_ratio_examples(k):
    assert slice_volume_ratio(k) == PAPER_PROBABILITIES[k]


def test_sample_degree_one_is_certain():
    r = sample_positivity(1, 500, seed=3)
    assert r.positive == 500 and r.estimate == 1 and r.standard_error == 0


@pytest.mark.parametrize("k, expected", [(2, Fraction(1, 2)), (3, Fraction(1, 9))])
def test_sample_within_three_standard_errors(k, expected):
    r = sample_positivity(k, 100_000, seed=DEFAULT_SEED)
    assert r.exact == expected
    assert abs(float(r.estimate) - float(expected)) <= 3 * r.standard_error
    assert 0 <= r.positive <= r.samples


def test_sample_is_reproducible_across_workers():
    reports = {sample_positivity(4, 50_000, seed=99, workers=w) for w in (1, 2, 5)}
    assert len(reports) == 1
    assert sample_positivity(4, 50_000, seed=100) != reports.pop()


def test_blocks_are_prefix_stable():
    full = draw_block(3, seed=5, block=2, count=100)
    assert np.array_equal(draw_block(3, seed=5, block=2, count=40), full[:40])
    assert not np.array_equal(draw_block(3, seed=5, block=3, count=40), full[:40])


def test_crafted_samples():
    for k in range(2, 7):
        order = partitions_of(k)
        p = len(order)
        ones = np.zeros((1, p))
        ones[0, order.index(Partition((1,) * k))] = 1.0
        assert classify_coefficients(k, ones).all()
        km = kostka_matrix(k)
        rows = np.array([[float(x) for x in r] for r in km.as_int_rows()])
        assert classify_coefficients(k, rows).all()
    with pytest.raises(DomainError):
        classify_coefficients(3, np.ones((2, 4)))


def test_report_dict():
    d = sample_positivity(2, 1000, seed=1).to_dict()
    assert d["exact"] == "1/2" and isinstance(d["positive"], int)
