import pytest
from hypothesis import given
from hypothesis import strategies as st

from partgraph import (
    Partition,
    conjugate,
    enumerate_partitions,
    gaps,
    make_partition,
    parse_partition,
)

from oracles import conjugate_parts_by_cells, partition_count

partitions = st.lists(st.integers(1, 9), min_size=1, max_size=8).map(make_partition)


class TestConstruction:
    def test_normalizes_and_encodes_blocks(self):
        p = make_partition([2, 4, 2, 4])
        assert p.parts == (4, 4, 2, 2)
        assert p.blocks == ((4, 2), (2, 2))
        assert p.block_sizes() == (4, 2)
        assert p.multiplicities() == (2, 2)
        assert p.weight == 12
        assert p.support_size == 2

    def test_single_part(self):
        p = make_partition([5])
        assert p.blocks == ((5, 1),)
        assert p.support_size == 1

    @pytest.mark.parametrize("bad", [[], [0], [3, -1], [0, 3], [2.0, 1]])
    def test_rejects_invalid_parts(self, bad):
        with pytest.raises(ValueError):
            make_partition(bad)

    def test_direct_constructor_requires_descending(self):
        with pytest.raises(ValueError):
            Partition((2, 4))

    def test_str_form(self):
        assert str(make_partition([4, 2, 4, 2])) == "4,4,2,2"


class TestParse:
    def test_accepts_any_order(self):
        assert parse_partition("2,4,2,4").parts == (4, 4, 2, 2)

    def test_accepts_whitespace(self):
        assert parse_partition(" 3, 1 ").parts == (3, 1)

    @pytest.mark.parametrize("bad", ["", "0,3", "a,b", "3,", "-1"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_partition(bad)

    @given(partitions)
    def test_roundtrips_str(self, p):
        assert parse_partition(str(p)) == p


class TestConjugate:
    @pytest.mark.parametrize("parts,expected", [
        ((3, 1), (2, 1, 1)),
        ((4, 4, 2, 2), (4, 4, 2, 2)),
        ((7,), (1,) * 7),
        ((1,) * 7, (7,)),
    ])
    def test_known_values(self, parts, expected):
        assert conjugate(Partition(parts)).parts == expected

    @given(partitions)
    def test_matches_cell_transpose(self, p):
        assert conjugate(p).parts == conjugate_parts_by_cells(p.parts)

    @given(partitions)
    def test_involution(self, p):
        assert conjugate(conjugate(p)) == p

    @given(partitions)
    def test_preserves_weight(self, p):
        assert conjugate(p).weight == p.weight


class TestGaps:
    @pytest.mark.parametrize("parts,expected", [
        ((4, 4, 2, 2), (2, 2)),
        ((3, 2, 1), (1, 1, 1)),
        ((1, 1, 1), (1,)),
        ((9,), (9,)),
    ])
    def test_known_values(self, parts, expected):
        assert gaps(Partition(parts)) == expected

    @given(partitions)
    def test_positive_with_suffix_sums_giving_sizes(self, p):
        g = gaps(p)
        assert len(g) == p.support_size
        assert all(gap >= 1 for gap in g)
        assert tuple(sum(g[k:]) for k in range(len(g))) == p.block_sizes()


class TestEnumeration:
    def test_exact_list_for_weight_four(self):
        assert [p.parts for p in enumerate_partitions(4)] == [
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
        ]

    def test_weight_one(self):
        assert [p.parts for p in enumerate_partitions(1)] == [(1,)]

    def test_counts_match_recurrence(self):
        for n in range(1, 21):
            assert len(enumerate_partitions(n)) == partition_count(n)

    def test_reverse_lexicographic_without_duplicates(self):
        for n in range(1, 13):
            found = enumerate_partitions(n)
            assert len(set(found)) == len(found)
            assert all(p.weight == n for p in found)
            assert all(a.parts > b.parts for a, b in zip(found, found[1:]))
            assert found[0].parts == (n,)
            assert found[-1].parts == (1,) * n

    @pytest.mark.parametrize("bad", [0, -3])
    def test_rejects_nonpositive_weight(self, bad):
        with pytest.raises(ValueError):
            enumerate_partitions(bad)
