#!/usr/bin/env python3

from math import factorial

import pytest

from src.combinat.partitions import (
    ExponentialForm,
    Partition,
    class_representative,
    divisors,
    moebius,
    partitions_of,
    z_of,
)


def test_partitions_in_reverse_lex_order():
    assert [tuple(lam) for lam in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == (Partition(()),)
    assert len(partitions_of(10)) == 42


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.from_unsorted([1, 3, 2]) == (3, 2, 1)


def test_partition_shape_data():
    lam = Partition((3, 1))
    assert lam.n == 4
    assert lam.length == 2
    assert lam.conjugate() == (2, 1, 1)
    assert sorted(lam.hook_lengths()) == [1, 1, 2, 4]
    assert lam.weighted_size() == 1
    assert lam + Partition((2,)) == (3, 2, 1)
    assert lam.scale(2) == (6, 2)


def test_exponential_form():
    form = Partition((2, 2, 1)).exponential()
    assert form.multiplicities == ((1, 1), (2, 2))
    assert form.n == 5
    assert form.length == 3
    assert form.support_count == 2
    assert form.to_partition() == (2, 2, 1)
    assert ExponentialForm.from_mapping({3: 1, 1: 0}).multiplicities == ((3, 1),)


def test_z_of():
    assert z_of(Partition((1, 1, 1))) == 6
    assert z_of(Partition((2, 1, 1))) == 4
    assert z_of(Partition((3,))) == 3
    assert z_of(Partition(())) == 1


def test_moebius_and_divisors():
    assert [moebius(d) for d in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        moebius(0)


def test_class_representative_has_cycle_type():
    sigma = class_representative(Partition((3, 2)))
    assert sigma == (1, 2, 0, 4, 3)
    assert sorted(sigma) == list(range(5))


@pytest.mark.parametrize("n", range(1, 31))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // z_of(lam) for lam in partitions_of(n)) == factorial(n)


def test_exponential_form_round_trip():
    for n in range(21):
        for lam in partitions_of(n):
            form = ExponentialForm.from_partition(lam)
            assert form.to_partition() == lam
            assert form == lam.exponential()
            assert form.n == n


def test_moebius_sums_over_divisors():
    assert sum(moebius(d) for d in divisors(1)) == 1
    for n in range(2, 200):
        assert sum(moebius(d) for d in divisors(n)) == 0
