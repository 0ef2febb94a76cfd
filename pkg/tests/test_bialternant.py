import random
from fractions import Fraction

import pytest

from schurpos.bialternant import alternant, bialternant_eval, vandermonde
from schurpos.errors import DomainError, SingularError
from schurpos.partitions import Partition, partitions_of
from schurpos.symfunc import evaluate, schur_to_monomial


def vandermonde_product(x):
    out = Fraction(1)
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            out *= Fraction(x[i]) - Fraction(x[j])
    return out


def test_vandermonde_examples():
    assert vandermonde_product([3, 2, 1]) == 2
    assert vandermonde([3, 2, 1]) == 2
    assert vandermonde([1, 5, 1]) == 0
    assert vandermonde([Fraction(7, 2)]) == 1


def test_vandermonde_matches_product():
    rng = random.Random(3)
    for n in range(1, 7):
        for _ in range(10):
            x = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]
            assert vandermonde(x) == vandermonde_product(x)


def test_bialternant_examples():
    assert bialternant_eval(Partition((2, 1)), [1, 2, 3]) == 60
    assert bialternant_eval(Partition((4,)), [Fraction(3, 2)]) == Fraction(81, 16)
    assert bialternant_eval(Partition((3, 1)), [1, 2]) == 1 * 2 + 4 + 8 == 14
    with pytest.raises(SingularError):
        bialternant_eval(Partition((3, 1)), [1, 1])
    with pytest.raises(DomainError):
        bialternant_eval(Partition((1, 1, 1)), [1, 2])


def test_numerator_and_denominator_are_antisymmetric():
    mu = Partition((3, 1))
    x = [Fraction(1, 2), 3, -2]
    y = [3, Fraction(1, 2), -2]
    exps = [3 + 2, 1 + 1, 0]
    assert alternant(exps, y) == -alternant(exps, x)
    assert vandermonde(y) == -vandermonde(x)
    assert bialternant_eval(mu, x) == bialternant_eval(mu, y)


def test_agrees_with_tableau_definition():
    rng = random.Random(11)
    all_parts = [lam for k in range(1, 8) for lam in partitions_of(k)]
    for _ in range(60):
        mu = rng.choice(all_parts)
        n = rng.randint(len(mu), len(mu) + 2)
        x = set()
        while len(x) < n:
            x.add(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        x = list(x)
        assert bialternant_eval(mu, x) == evaluate(schur_to_monomial(mu), x)
