import pytest
from hypothesis import given, strategies as st

from genusone import (
    DomainError,
    NotationError,
    SetPartition,
    enumerate_set_partitions,
    from_permutation,
    genus_of_partition,
    identity,
    is_noncrossing,
    kreweras_dual,
    narayana,
    parse_cycles,
    parse_partition,
    to_permutation,
    zeta,
)
from genusone.setpart import restricted_growth_strings

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]


def S(text):
    return parse_partition(text)


class TestEncoding:
    def test_worked_example(self):
        p = S("{1,5,7,8}/{2,4}/{3}/{6}")
        assert to_permutation(p) == parse_cycles("(1,5,7,8)(2,4)(3)(6)", 8)

    def test_singletons_and_single_block(self):
        assert to_permutation(S("{1}/{2}/{3}")) == identity(3)
        assert to_permutation(S("{1,2,3,4}")) == zeta(4)

    def test_from_permutation(self):
        assert from_permutation(parse_cycles("(1,3)(2,4)", 4)) == S("{1,3}/{2,4}")
        assert from_permutation(parse_cycles("(1,3,2)", 3)) is None
        assert from_permutation(identity(3)) == S("{1}/{2}/{3}")

    @pytest.mark.parametrize("n", range(0, 9))
    def test_round_trip(self, n):
        for p in enumerate_set_partitions(n):
            assert from_permutation(to_permutation(p)) == p


class TestParsing:
    def test_block_order_is_free(self):
        assert S("{6}/{2,4}/{3}/{8,7,5,1}") == S("{1,5,7,8}/{2,4}/{3}/{6}")

    def test_canonical_display(self):
        assert str(S("{6}/{4,2}/{3}/{8,7,5,1}")) == "{1,5,7,8}/{2,4}/{3}/{6}"

    @pytest.mark.parametrize("text", ["{1,2}/{2,3}", "{1,3}", "{1,2", "{}", "1,2"])
    def test_rejects_bad_text(self, text):
        with pytest.raises(NotationError):
            S(text)

    def test_rejects_bad_blocks(self):
        with pytest.raises(DomainError):
            SetPartition(3, ((1, 2),))


class TestGenus:
    def test_examples(self):
        assert genus_of_partition(S("{1,3}/{2,4}")) == 1
        assert genus_of_partition(S("{1,4}/{2,5}/{3,6}")) == 1
        assert genus_of_partition(S("{1,5,7,8}/{2,4}/{3}/{6}")) == 0

    def test_noncrossing_examples(self):
        assert is_noncrossing(S("{1,5,7,8}/{2,4}/{3}/{6}"))
        assert not is_noncrossing(S("{1,3}/{2,4}"))
        assert is_noncrossing(S("{1}/{2}/{3}/{4}"))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_noncrossing_iff_genus_zero(self, n):
        for p in enumerate_set_partitions(n):
            assert is_noncrossing(p) == (genus_of_partition(p) == 0)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_noncrossing_counts_are_narayana(self, n):
        by_blocks = [0] * (n + 1)
        for p in enumerate_set_partitions(n, is_noncrossing):
            by_blocks[len(p)] += 1
        assert by_blocks == [narayana(n, k) for k in range(n + 1)]


class TestEnumeration:
    @pytest.mark.parametrize("n", range(0, 10))
    def test_bell_numbers(self, n):
        assert sum(1 for _ in enumerate_set_partitions(n)) == BELL[n]

    def test_empty_set(self):
        assert list(enumerate_set_partitions(0)) == [SetPartition(0, ())]

    def test_genus_one_at_four_points(self):
        found = list(enumerate_set_partitions(4, lambda p: genus_of_partition(p) == 1))
        assert found == [S("{1,3}/{2,4}")]

    def test_lexicographic_and_distinct(self):
        strings = list(restricted_growth_strings(6))
        assert strings == sorted(set(strings))

    def test_prefixes_split_the_stream(self):
        whole = list(restricted_growth_strings(6))
        pieces = [s for pre in [(0, 0), (0, 1)] for s in restricted_growth_strings(6, pre)]
        assert pieces == whole

    def test_invalid_prefix_is_empty(self):
        assert list(restricted_growth_strings(4, (0, 2))) == []


class TestKrewerasDual:
    def test_extremes(self):
        assert kreweras_dual(S("{1}/{2}/{3}")) == S("{1,2,3}")
        assert kreweras_dual(S("{1,2,3,4}")) == S("{1}/{2}/{3}/{4}")

    def test_two_pairs(self):
        assert kreweras_dual(S("{1,2}/{3,4}")) == S("{1}/{2,4}/{3}")

    def test_rejects_crossing(self):
        with pytest.raises(DomainError):
            kreweras_dual(S("{1,3}/{2,4}"))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_double_dual_keeps_block_sizes(self, n):
        for p in enumerate_set_partitions(n, is_noncrossing):
            dual = kreweras_dual(p)
            assert is_noncrossing(dual)
            assert len(p) + len(dual) == n + 1
            assert sorted(map(len, kreweras_dual(dual).blocks)) == sorted(map(len, p.blocks))


@given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=12))
def test_any_labelling_gives_a_valid_partition(labels):
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels, start=1):
        groups.setdefault(lab, []).append(i)
    p = SetPartition.from_blocks(groups.values())
    assert parse_partition(str(p)) == p
    assert from_permutation(to_permutation(p)) == p
