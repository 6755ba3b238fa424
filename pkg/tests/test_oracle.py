from collections import Counter
from math import factorial

import pytest

from genusone import (
    DomainError,
    Permutation,
    back_points,
    brute_table,
    enumerate_permutations,
    extension_count,
    formula_table,
    full_count,
    genus,
    is_reduced,
    narayana,
    num_cycles,
    parse_cycles,
    reduce_fully,
    verify_suite,
)
from genusone.oracle import CACHE_ENV, ClassKey, class_counts
from genusone.series import BivariateSeries, divide, solve_D, substitute_x, x_partial_x

EMPTY = Permutation(())


class TestEnumeration:
    def test_sizes(self):
        assert sum(1 for _ in enumerate_permutations(3)) == 6
        assert list(enumerate_permutations(0)) == [EMPTY]

    def test_lexicographic(self):
        images = [p.images for p in enumerate_permutations(4)]
        assert images == sorted(images) and len(set(images)) == 24

    def test_limit(self):
        with pytest.raises(DomainError):
            next(enumerate_permutations(10))
        with pytest.raises(DomainError):
            brute_table("partition", 13)
        with pytest.raises(DomainError):
            brute_table("graph", 3)

    def test_genus_histogram_at_four(self):
        hist = Counter(genus(a) for a in enumerate_permutations(4))
        assert hist == {0: 14, 1: 10}


class TestKernel:
    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_reference(self, n):
        expected = Counter()
        for a in enumerate_permutations(n):
            expected[ClassKey(n, num_cycles(a), genus(a), len(back_points(a)), is_reduced(a))] += 1
        assert class_counts("permutation", n) == expected

    @pytest.mark.parametrize("n", range(0, 9))
    def test_totals(self, n):
        assert sum(class_counts("permutation", n).values()) == factorial(n)

    def test_parallel_split_gives_same_histogram(self):
        from genusone.oracle import _permutation_chunk, _partition_chunk, _run_chunks
        whole = _permutation_chunk((6, None))
        assert _run_chunks(_permutation_chunk, [(6, f) for f in range(6)], jobs=2) == whole
        parts = [(7, p) for p in [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]]
        assert _run_chunks(_partition_chunk, parts, jobs=2) == _partition_chunk((7, ()))


class TestBruteTables:
    def test_examples(self):
        assert brute_table("partition", 4, n_min=4).entries == {(4, 2): 1}
        assert brute_table("permutation", 3, n_min=3).entries == {(3, 1): 1}
        assert brute_table("permutation", 4, reduced=True)[(4, 1)] == 5

    def test_genus_zero_is_narayana(self):
        t = brute_table("permutation", 7, genus=0)
        assert all(t[(n, k)] == narayana(n, k) for n in range(1, 8) for k in range(n + 1))

    @pytest.mark.parametrize("j", [0, 1, 2, "any"])
    def test_permutations_match_formulas(self, j):
        assert brute_table("permutation", 8, backpoints=j).same_counts(formula_table("permutation", 8, backpoints=j))

    def test_partitions_match_formulas(self):
        assert brute_table("partition", 9).same_counts(formula_table("partition", 9))

    def test_cache_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setenv(CACHE_ENV, str(tmp_path))
        first = brute_table("partition", 6)
        assert (tmp_path / "partition-6.csv").is_file()
        text = (tmp_path / "partition-6.csv").read_text()
        assert text.startswith("n,k,genus,backpoints,reduced,count\n")
        assert brute_table("partition", 6).same_counts(first)


class TestExtensions:
    def test_examples(self):
        rho = parse_cycles("(1,3)(2,4)", 4)
        assert extension_count(EMPTY, 3, 3) == 1
        assert extension_count(rho, 4, 2) == 1
        assert extension_count(rho, 3, 2) == 0

    def test_rejects_unreduced(self):
        with pytest.raises(DomainError):
            extension_count(parse_cycles("(1,2)", 2), 4, 2)

    def test_matches_single_lift(self):
        rho = parse_cycles("(1,3)(2,4)", 4)
        t = 7
        D = solve_D(t)
        xD = D.shift_x(1).truncate(t)
        lift = substitute_x(BivariateSeries.monomial(4, 2, t), xD) * (1 + divide(x_partial_x(D), D))
        for n in (5, 6, 7):
            assert [extension_count(rho, n, k) for k in range(n + 1)] == [lift.coefficient(n, k) for k in range(n + 1)]

    @pytest.mark.parametrize("n", range(3, 7))
    def test_reduced_forms_partition_the_class(self, n):
        reduced_forms = {reduce_fully(a).result for m in range(n + 1) for a in enumerate_permutations(m)
                         if genus(a) <= 1 and is_reduced(a)}
        for k in range(n + 1):
            total = sum(extension_count(rho, n, k) for rho in reduced_forms if rho.n <= n)
            assert total == full_count(n, k) + narayana(n, k)


class TestVerifySuite:
    def test_passes(self):
        report = verify_suite(6)
        assert report["schema_version"] == 1
        assert report["passed"]
        assert all(c["passed"] and c["witness"] is None for c in report["checks"])

    def test_corrupted_genus_is_caught(self):
        def wrong(alpha):
            return genus(alpha) + (1 if alpha.n == 5 and alpha(1) == 2 else 0)

        report = verify_suite(5, genus_fn=wrong)
        assert not report["passed"]
        first = next(c for c in report["checks"] if not c["passed"])
        assert first["name"] == "kernel_matches_reference_genus"
        assert first["witness"].startswith("(1,2")

    def test_deterministic(self):
        assert verify_suite(4) == verify_suite(4)
