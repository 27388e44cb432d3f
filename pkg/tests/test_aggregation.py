from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DATA, fuzzy_sets
from lfuzzy.aggregation import Partition, aggregate_incl, load_partition, partition_from_dict
from lfuzzy.lattice import FuzzySet, Universe
from lfuzzy.relations import incl, to_bitlist
from lfuzzy.scalar import MEASURE_IDS, eval_scalar

U4 = Universe.of_size(4)


def test_halves_with_kosko(ex):
    part = load_partition(DATA / "halves.json", U4)
    agg = aggregate_incl(ex["A"], ex["B"], part, 1)
    assert agg.as_fractions() == [1, F(8, 9)]
    assert agg.measure == 1 and len(agg.values) == len(part) == 2


def test_singletons_with_kosko(ex):
    agg = aggregate_incl(ex["A"], ex["B"], Partition.singletons(U4), "kosko")
    assert agg.as_fractions() == [1, 1, 1, F(8, 9)]
    # the third block has |A| = 0
    assert [v.degenerate for v in agg.values] == [False, False, True, False]


@pytest.mark.parametrize("m", MEASURE_IDS)
def test_single_block_is_the_scalar_measure(ex, m):
    agg = aggregate_incl(ex["A"], ex["B"], Partition.whole(U4), m)
    assert agg.values == (eval_scalar(m, ex["A"], ex["B"]),)


@pytest.mark.parametrize(
    "blocks, match",
    [
        ([["1", "2"], ["3"]], "cover"),
        ([["1", "2"], ["2", "3", "4"]], "more than one block"),
        ([["1", "2", "3", "4"], []], "empty"),
        ([["1", "2", "3", "9"]], "9"),
    ],
)
def test_partition_validation(blocks, match):
    with pytest.raises(ValueError, match=match):
        partition_from_dict({"blocks": blocks}, U4)


def test_partition_file_requires_blocks():
    with pytest.raises(ValueError, match="blocks"):
        partition_from_dict({}, U4)


def test_partition_universe_must_match(ex):
    with pytest.raises(ValueError):
        aggregate_incl(ex["A"], ex["B"], Partition.whole(Universe.of_size(3)), 1)


def test_block_order_fixes_output_order(ex):
    fwd = aggregate_incl(ex["A"], ex["B"], partition_from_dict({"blocks": [["1", "2"], ["3", "4"]]}, U4), 1)
    rev = aggregate_incl(ex["A"], ex["B"], partition_from_dict({"blocks": [["3", "4"], ["1", "2"]]}, U4), 1)
    assert fwd.as_fractions() == rev.as_fractions()[::-1]


@given(fuzzy_sets(n=4, count=3), st.integers(1, 12))
def test_blocks_only_see_their_own_elements(abc, m):
    A, B, other = abc
    part = partition_from_dict({"blocks": [["1", "2"], ["3", "4"]]}, U4)
    # overwrite block 2 of A and B with arbitrary grades
    A2 = FuzzySet(U4, list(A.grades[:2]) + list(other.grades[2:]))
    B2 = FuzzySet(U4, list(B.grades[:2]) + list(other.grades[:2]))
    assert aggregate_incl(A, B, part, m).values[0] == aggregate_incl(A2, B2, part, m).values[0]


@given(fuzzy_sets(n=4, count=2), st.sampled_from([1, 2, 3, 4, 5, 6, 9, 12]))
def test_singleton_blocks_threshold_to_incl(ab, m):
    A, B = ab
    agg = aggregate_incl(A, B, Partition.singletons(U4), m)
    assert [int(v.value == 1) for v in agg.values] == to_bitlist(incl(A, B))
