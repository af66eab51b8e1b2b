import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chardeg.partitions import (bounded_partition_counts, conjugate,
                                hook_lengths, is_self_conjugate,
                                partition_count, partitions,
                                strict_partitions, validate_partition,
                                validate_strict_partition)

part_tuples = st.lists(st.integers(1, 25), min_size=0, max_size=12).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_partitions_of_four_descending_lex():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_edge_cases():
    assert list(partitions(0)) == [()]
    assert list(partitions(1)) == [(1,)]
    assert list(partitions(3, max_part=0)) == []
    with pytest.raises(ValueError):
        list(partitions(-1))


@pytest.mark.parametrize("n", range(0, 31))
def test_count_matches_pentagonal_recurrence(n):
    assert sum(1 for _ in partitions(n)) == partition_count(n)


def test_partition_count_values():
    assert partition_count(0) == 1
    assert partition_count(4) == 5
    assert partition_count(50) == 204226


def test_stream_strictly_decreasing_and_valid():
    for n in range(1, 21):
        prev = None
        for lam in partitions(n):
            validate_partition(lam)
            assert sum(lam) == n
            if prev is not None:
                assert prev > lam  # lex order on tuples
            prev = lam


def test_max_part_bound():
    assert list(partitions(10, max_part=4))[0] == (4, 4, 2)
    for lam in partitions(12, max_part=3):
        assert max(lam) <= 3


@pytest.mark.parametrize("n", [6, 9, 13, 18])
def test_first_part_split_reassembles_full_stream(n):
    split = []
    for k in range(n, 0, -1):
        split.extend((k,) + tail for tail in partitions(n - k, max_part=k))
    assert split == list(partitions(n))


def test_bounded_counts_table():
    t = bounded_partition_counts(12)
    assert t[12][12] == partition_count(12)
    for k in range(13):
        assert t[0][k] == 1
    # column k=2: partitions into parts 1 and 2
    assert t[7][2] == 4


def test_conjugate_examples():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate((3, 1, 1)) == (3, 1, 1)
    assert conjugate((7,)) == (1,) * 7
    assert conjugate(()) == ()


def test_conjugate_involution_exhaustive():
    for n in range(0, 13):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam
            assert sum(conjugate(lam)) == n


@given(part_tuples)
@settings(max_examples=100)
def test_conjugate_involution_random(lam):
    assert conjugate(conjugate(lam)) == lam


def test_is_self_conjugate():
    assert is_self_conjugate((3, 1, 1))
    assert not is_self_conjugate((6, 1))
    for k in range(1, 9):
        assert is_self_conjugate((k + 1,) + (1,) * k)


def test_hook_lengths_examples():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert sorted(hook_lengths((6,))) == [1, 2, 3, 4, 5, 6]
    hooks = sorted(hook_lengths((13, 1)))
    assert hooks == [1, 1] + list(range(2, 13)) + [14]


def test_hook_multiset_conjugation_invariant():
    for n in range(1, 13):
        for lam in partitions(n):
            assert len(hook_lengths(lam)) == n
            assert sorted(hook_lengths(lam)) == sorted(hook_lengths(conjugate(lam)))


def test_strict_partitions_examples():
    assert list(strict_partitions(5)) == [(5,), (4, 1), (3, 2)]
    assert list(strict_partitions(1)) == [(1,)]
    assert list(strict_partitions(0)) == [()]
    assert len(list(strict_partitions(10))) == 10


def _odd_part_partition_count(n):
    # independent oracle: partitions into odd parts, by iterative DP
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


@pytest.mark.parametrize("n", range(0, 31))
def test_strict_count_equals_odd_part_count(n):
    stream = list(strict_partitions(n))
    assert len(set(stream)) == len(stream)
    for lam in stream:
        validate_strict_partition(lam)
    assert len(stream) == _odd_part_partition_count(n)


def test_validation_errors():
    with pytest.raises(ValueError):
        validate_partition((1, 2))
    with pytest.raises(ValueError):
        validate_partition((3, 0))
    with pytest.raises(ValueError):
        validate_strict_partition((3, 3, 1))
