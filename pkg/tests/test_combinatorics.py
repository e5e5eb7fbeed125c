import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skein_s1s2.combinatorics import (
    Partition,
    StandardTableau,
    cell_stats,
    extreme_cell_count_e,
    extreme_cell_count_formula,
    hook_product,
    parse_partition,
    parse_tableau,
    partition_count,
    partitions,
    standard_tableaux,
)
from skein_s1s2.scalars import ONE, S, quantum_int

small_partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions(n)))


def test_partition_enumeration():
    assert partitions(0) == [Partition(())]
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions(5)) == 7
    with pytest.raises(ValueError):
        partitions(-1)


def test_partitions_are_distinct_and_valid():
    for n in range(9):
        ps = partitions(n)
        assert len(set(ps)) == len(ps) == partition_count(n)
        assert all(p.size == n for p in ps)


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_cell_stats_examples():
    one = cell_stats(Partition((1,)))
    assert one.hooks == {(1, 1): 1} and one.contents == {(1, 1): 0}
    assert one.extreme == [(1, 1)]
    st21 = cell_stats(Partition((2, 1)))
    assert st21.hooks == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert sorted(st21.contents.values()) == [-1, 0, 1]
    assert set(st21.extreme) == {(1, 2), (2, 1)}
    assert cell_stats(Partition((3, 3))).extreme == [(2, 3)]


def test_hook_products():
    assert hook_product(Partition(())) == ONE
    assert hook_product(Partition((2, 1))) == quantum_int(3) == S**2 + 1 + S**-2
    assert hook_product(Partition((2,))) == S + S.inverse()


def test_tableau_counts():
    assert len(standard_tableaux(Partition((4,)))) == 1
    assert len(standard_tableaux(Partition((2, 1)))) == 2
    for n in range(1, 7):
        assert sum(len(standard_tableaux(p)) ** 2 for p in partitions(n)) == math.factorial(n)


def test_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 3), (4,), (2,)))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (2,)))


def test_extreme_cell_counts():
    assert extreme_cell_count_e(1) == 1
    assert extreme_cell_count_e(3) == 4
    assert extreme_cell_count_e(6) == 19 == 1 + 1 + 2 + 3 + 5 + 7
    for n in range(1, 13):
        assert extreme_cell_count_e(n) == extreme_cell_count_formula(n)
    with pytest.raises(ValueError):
        extreme_cell_count_e(0)


@given(small_partitions)
def test_transpose_invariants(lam):
    lt = lam.transpose()
    assert lt.transpose() == lam
    assert Counter(cell_stats(lam).hooks.values()) == Counter(cell_stats(lt).hooks.values())
    assert lt.content_sum() == -lam.content_sum()


@given(small_partitions)
def test_addable_corners_exceed_extreme_cells_by_one(lam):
    stats = cell_stats(lam)
    assert len(stats.addable) == len(stats.extreme) + 1
    for c in stats.extreme:
        assert lam.remove(c).size == lam.size - 1
    for c in stats.addable:
        assert lam.add(c).size == lam.size + 1


@given(small_partitions)
def test_truncations_stay_standard(lam):
    for t in standard_tableaux(lam):
        while t.size:
            assert t.cell_of(t.size) in t.shape.extreme_cells()
            t = t.truncate()


def test_literals():
    assert parse_partition("[3,1,1]") == Partition((3, 1, 1))
    assert parse_partition("[]") == Partition(())
    assert str(Partition((3, 1, 1))) == "[3,1,1]"
    t = parse_tableau("[[1,3],[2]]")
    assert t.shape == Partition((2, 1)) and str(t) == "[[1,3],[2]]"
    for bad in ("3,1", "[a]", "[1,2]"):
        with pytest.raises(ValueError):
            parse_partition(bad)
