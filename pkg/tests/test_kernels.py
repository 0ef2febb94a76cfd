import itertools

import numpy as np
import pytest

from schurpos import kernels
from schurpos.conegeom import draw_block
from schurpos.kostka import inverse_kostka_int_rows, kostka_matrix
from schurpos.partitions import partitions_of
from schurpos.symfunc import MONOMIAL, SymPoly, is_schur_positive
from schurpos.tableaux import enumerate_ssyt_content


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")


@pytest.mark.parametrize("k", range(0, 7))
def test_count_matches_enumeration(backend, k):
    for lam in partitions_of(k):
        for mu in partitions_of(k):
            assert backend.count_ssyt_content(lam, mu) == len(enumerate_ssyt_content(lam, mu))


def test_count_compositions_and_mismatch(backend):
    for c in itertools.permutations((2, 1, 1, 0)):
        assert backend.count_ssyt_content((2, 1, 1), c) == len(enumerate_ssyt_content((2, 1, 1), c))
    assert backend.count_ssyt_content((2, 1), (1, 1)) == 0
    assert backend.count_ssyt_content((), ()) == 1


def _exact_reference(k, rows):
    order = partitions_of(k)
    return np.array([is_schur_positive(SymPoly(k, MONOMIAL, dict(zip(order, map(float, r))))) for r in rows])


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_classifier_matches_exact_symfunc(backend, k):
    rows = draw_block(k, seed=7, block=k, count=400)
    kinv = np.array(inverse_kostka_int_rows(k))
    np.testing.assert_array_equal(backend.classify_samples(rows, kinv), _exact_reference(k, rows))


def test_classifier_boundary_and_near_boundary(backend):
    kinv = np.array(inverse_kostka_int_rows(3))
    eps = 2.0 ** -52
    rows = np.array(
        [
            [0.0, 0.0, 1.0],               # m_111 = s_111
            [0.0, 1.0, 2.0],               # s_21 exactly: zero coefficients on s_3, s_111
            [1.0, 1.0, 1.0],               # s_3
            [0.0, 1.0, 2.0 - 2 * eps],     # s_21 minus a sliver of m_111: negative
            [0.0, 1.0, 2.0 + 2 * eps],     # s_21 plus a sliver of m_111: positive
            [1e-300, 1.0, 2.0],            # tiny s_3 coefficient, rest exact cancellation
            [1.0, 1.0 + eps, 1.0],         # m_21 coefficient pushes s_111 slightly negative
            [0.0, 1.0, 0.0],               # m_21 alone
        ]
    )
    expected = [True, True, True, False, True, True, False, False]
    assert backend.classify_samples(rows, kinv).tolist() == expected
    assert _exact_reference(3, rows).tolist() == expected


def test_classifier_normalized_schur_points(backend):
    for k in range(2, 7):
        km = kostka_matrix(k)
        kinv = np.array(inverse_kostka_int_rows(k))
        rows = np.array([[float(x) for x in r] for r in km.as_int_rows()])
        assert backend.classify_samples(rows, kinv).all()
        # dyadic rescaling is exact in binary floating point
        assert backend.classify_samples(rows * 2.0 ** -40, kinv).all()
