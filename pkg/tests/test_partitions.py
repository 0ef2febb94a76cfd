import itertools
from functools import lru_cache

import pytest

from schurpos.errors import DomainError
from schurpos.partitions import (
    Partition,
    compositions_sorting_to,
    dominance_leq,
    parse_partition,
    partition_from_composition,
    partitions_of,
)

from conftest import brute_partitions


@lru_cache(maxsize=None)
def p_recurrence(n, largest):
    """Partitions of n with parts <= largest, by the standard two-way recurrence."""
    if n == 0:
        return 1
    if n < 0 or largest == 0:
        return 0
    return p_recurrence(n - largest, largest) + p_recurrence(n, largest - 1)


def test_partitions_of_three():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]


def test_partitions_of_one():
    assert partitions_of(1) == [(1,)]


def test_partitions_of_four_brute_force():
    parts = partitions_of(4)
    assert len(parts) == 5
    assert set(parts) == brute_partitions(4)


def test_zero_and_negative():
    assert partitions_of(0) == [()]
    with pytest.raises(DomainError):
        partitions_of(-1)


@pytest.mark.parametrize("k", range(1, 13))
def test_count_matches_recurrence(k):
    parts = partitions_of(k)
    assert len(parts) == p_recurrence(k, k)
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("k", range(1, 9))
def test_order_refines_dominance(k):
    order = partitions_of(k)
    for i, lam in enumerate(order):
        for j, mu in enumerate(order):
            if lam != mu and dominance_leq(mu, lam):
                assert i < j


def test_partition_validation():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    assert Partition((3, 2)).size() == 5
    for bad in [(1, 2), (2, -1), (0, 1)]:
        with pytest.raises(DomainError):
            Partition(bad)


def test_compositions_of_42():
    assert set(compositions_sorting_to(Partition((4, 2)), 3)) == {
        (4, 2, 0), (4, 0, 2), (0, 4, 2), (2, 4, 0), (2, 0, 4), (0, 2, 4)
    }


def test_compositions_trivial_and_too_many_parts():
    assert compositions_sorting_to(Partition((1, 1, 1)), 3) == [(1, 1, 1)]
    assert compositions_sorting_to(Partition((1, 1, 1)), 2) == []


def test_compositions_21_in_two_vars_brute_force():
    brute = {s for s in itertools.product(range(4), repeat=2)
             if sorted((x for x in s if x), reverse=True) == [2, 1]}
    assert brute == {(2, 1), (1, 2)}
    assert set(compositions_sorting_to(Partition((2, 1)), 2)) == brute


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("n", range(1, 5))
def test_compositions_generate_and_dedupe_oracle(k, n):
    for lam in partitions_of(k):
        got = compositions_sorting_to(lam, n)
        assert len(got) == len(set(got))
        expected = {perm for perm in itertools.permutations(lam.padded(n))} if len(lam) <= n else set()
        assert set(got) == expected
        for c in got:
            assert partition_from_composition(c) == lam


def test_dominance_examples():
    assert dominance_leq(Partition((1, 1, 1)), Partition((3,)))
    assert not dominance_leq(Partition((3,)), Partition((1, 1, 1)))
    assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
    with pytest.raises(DomainError):
        dominance_leq(Partition((2,)), Partition((3,)))


def test_parse_partition():
    assert parse_partition("[3,2,1]") == (3, 2, 1)
    assert parse_partition(" 3, 2,1 ") == (3, 2, 1)
    assert parse_partition("[]") == ()
    for bad in ["[1,2]", "[3,x]", "[3,0]", "[3"]:
        with pytest.raises(DomainError):
            parse_partition(bad)
    assert str(Partition((3, 2))) == "[3,2]"
