import math
from functools import lru_cache

import pytest

from chardeg import cdset
from chardeg.degrees import DegreeEngine, degree, divide_filter, divisibility_maximal
from chardeg.groups import alternating, cover_alternating, symmetric
from chardeg.partitions import hook_lengths, is_self_conjugate, partitions


@lru_cache(maxsize=None)
def _syt_count(lam):
    """Independent degree oracle: count standard Young tableaux by
    recursively removing corner cells."""
    if sum(lam) <= 1:
        return 1
    total = 0
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            smaller = lam[:i] + (lam[i] - 1,) + lam[i + 1:]
            if smaller[i] == 0:
                smaller = smaller[:i]
            total += _syt_count(smaller)
    return total


def test_degree_examples():
    assert degree((2, 2)) == 2
    assert degree((9,)) == 1
    assert degree(()) == 1
    for m in range(5, 21):
        assert degree((m - 1, 1)) == m - 1
        assert degree((m - 2, 2)) == m * (m - 3) // 2
        assert degree((m - 2, 1, 1)) == (m - 1) * (m - 2) // 2


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_matches_tableau_count(n):
    for lam in partitions(n):
        assert degree(lam) == _syt_count(lam)


def test_degree_conjugation_and_exactness():
    from chardeg.partitions import conjugate
    for n in range(1, 15):
        fact = math.factorial(n)
        for lam in partitions(n):
            f = degree(lam)
            assert f == degree(conjugate(lam))
            assert f * math.prod(hook_lengths(lam)) == fact


def test_self_conjugate_degrees_are_even():
    for n in range(2, 19):
        for lam in partitions(n):
            if is_self_conjugate(lam):
                assert degree(lam) % 2 == 0, lam


def test_basic_degree_sets(engine):
    assert engine.degree_set(alternating(5)).degrees == (1, 3, 4, 5)
    assert engine.degree_set(symmetric(4)).degrees == (1, 2, 3)
    cd14 = engine.degree_set(alternating(14))
    assert 560 in cd14 and 1001 in cd14
    assert 7280 not in cd14


def test_tiny_groups(engine):
    # A_1, A_2 trivial; A_3 cyclic of order 3; A_4 has degrees 1, 3
    assert engine.degree_set(alternating(1), True).multiplicities == (1,)
    a2 = engine.degree_set(alternating(2), True)
    assert a2.degrees == (1,) and a2.multiplicities == (1,)
    a3 = engine.degree_set(alternating(3), True)
    assert a3.degrees == (1,) and a3.multiplicities == (3,)
    a4 = engine.degree_set(alternating(4), True)
    assert a4.degrees == (1, 3) and a4.multiplicities == (3, 1)


def test_degree_set_rejects_cover_tags(engine):
    with pytest.raises(ValueError):
        engine.degree_set(cover_alternating(5))


@pytest.mark.parametrize("n", range(1, 17))
def test_sum_of_squares_identities(engine, n):
    s = engine.degree_set(symmetric(n), True)
    assert s.sum_of_squares() == math.factorial(n)
    a = engine.degree_set(alternating(n), True)
    assert a.sum_of_squares() == (math.factorial(n) // 2 if n >= 2 else 1)


def _self_conjugate_count(n):
    # = partitions into distinct odd parts
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for m in range(n, part - 1, -1):
            ways[m] += ways[m - part]
    return ways[n]


@pytest.mark.parametrize("n", range(2, 26))
def test_alternating_class_count_formula(engine, n):
    from chardeg.partitions import partition_count
    a = engine.degree_set(alternating(n), True)
    assert a.class_count() == (partition_count(n) + 3 * _self_conjugate_count(n)) // 2


def test_stats_examples(engine):
    s5 = engine.stats(symmetric(5))
    assert (s5.class_count, s5.sum_of_squares) == (7, 120)
    a5 = engine.stats(alternating(5))
    assert (a5.class_count, a5.largest_degree, a5.sum_of_squares) == (5, 5, 60)


def test_minimal_degrees(engine):
    assert engine.minimal_degrees(alternating(14), 4).entries == (13, 77, 78, 273)
    # first eight closed forms at n = 22
    assert engine.minimal_degrees(alternating(22), 8).entries == (
        21, 209, 210, 1309, 1330, 2640, 5775, 5985)
    table = engine.minimal_degrees(alternating(20), 9)
    for k in range(1, 9):
        prefix = engine.minimal_degrees(alternating(20), k)
        assert table.entries[:k] == prefix.entries
    assert table.d(1) == 19


def test_minimal_degrees_symmetric_43(engine):
    entries = engine.minimal_degrees(symmetric(43), 14).entries
    assert entries[12] == 850668   # (n-1)(n-2)(n-3)(n-4)(n-5)/120 at 43
    assert entries[13] == 3369093  # n(n-1)(n-2)(n-4)(n-8)/30 at 43


def test_minimal_degrees_exhausted(engine):
    with pytest.raises(ValueError):
        engine.minimal_degrees(alternating(5), 4)


def test_prime_power_degrees(engine):
    assert engine.prime_power_degrees(alternating(6)) == (5, 8, 9)
    assert engine.prime_power_degrees(alternating(17)) == (16,)
    assert engine.prime_power_degrees(alternating(16)) == ()


def test_quotient_sets(engine):
    q = engine.quotient_set(14, 14)
    assert q.values == (40, 143, 312, 352, 429, 546, 858, 975, 1001, 1144,
                        1456, 1664, 2002, 3003, 3432, 3575, 4576)
    assert engine.quotient_set(14, 1716).values == (1, 7, 9, 20, 28)
    assert max(engine.quotient_set(14, 91).values) == 704
    assert 40 in q and 41 not in q
    # defining property: value * index is always a degree
    for index in (14, 91, 364):
        for v in engine.quotient_set(14, index).values:
            assert engine.is_degree(alternating(14), v * index)


def test_divide_filter():
    a14 = DegreeEngine().quotient_set(14, 14).values
    assert divide_filter(a14, 13) == (11, 24, 33, 42, 66, 75, 77, 88, 112,
                                      128, 154, 231, 264, 275, 352)
    assert divide_filter({10, 15, 7}, 5) == (2, 3)
    assert divide_filter((4, 9, 2), 1) == (2, 4, 9)
    with pytest.raises(ValueError):
        divide_filter((4,), 0)


def test_divisibility_maximal():
    assert divisibility_maximal((4, 7, 11, 44)) == (7, 44)
    assert divisibility_maximal((3, 4, 7, 12, 16)) == (7, 12, 16)
    assert divisibility_maximal((5,)) == (5,)


def test_membership_queries(engine):
    assert engine.is_degree(alternating(13), 21450)
    assert engine.is_degree(alternating(12), 5775)
    assert not engine.is_degree(alternating(14), 7280)
    with pytest.raises(ValueError):
        engine.is_degree(alternating(5), 0)


def test_worker_determinism_bytes():
    one = DegreeEngine(workers=1).degree_set(alternating(24), True)
    two = DegreeEngine(workers=2).degree_set(alternating(24), True)
    assert cdset.dumps(one) == cdset.dumps(two)
