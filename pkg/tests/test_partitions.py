import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromatic_schur.partitions import (
    UNDEFINED,
    check_partition,
    partitions_of,
    sort_to_partition,
    strip_trailing_ones,
)

# p(0)..p(8)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_sort_examples():
    assert sort_to_partition([2, 5, 1]) == (5, 2, 1)
    assert sort_to_partition([]) == ()
    assert sort_to_partition([3, 3, 1]) == (3, 3, 1)


def test_sort_rejects_nonpositive():
    with pytest.raises(ValueError):
        sort_to_partition([2, 0])


@given(st.lists(st.integers(min_value=1, max_value=9), max_size=8))
def test_sort_idempotent_on_partitions(parts):
    lam = sort_to_partition(parts)
    assert sort_to_partition(lam) == lam
    assert sum(lam) == sum(parts)


def test_strip_trailing_ones_examples():
    assert strip_trailing_ones((3, 2, 1, 1), 2) == (3, 2)
    assert strip_trailing_ones((2, 1), 2) is UNDEFINED
    assert strip_trailing_ones((1, 1, 1), 3) == ()


@given(st.lists(st.integers(min_value=1, max_value=9), max_size=8))
def test_strip_zero_is_identity(parts):
    lam = sort_to_partition(parts)
    assert strip_trailing_ones(lam, 0) == lam


def test_partitions_of_counts_and_order():
    for n, expected in enumerate(PARTITION_COUNTS):
        assert len(partitions_of(n)) == expected
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    # reverse lexicographic: strictly decreasing as tuples
    for n in range(9):
        lams = partitions_of(n)
        assert all(lams[i] > lams[i + 1] for i in range(len(lams) - 1))
        assert all(check_partition(lam) == lam and sum(lam) == n for lam in lams)


def test_partitions_of_rejects_negative():
    with pytest.raises(ValueError):
        partitions_of(-1)
