from __future__ import annotations

import math

import pytest

from fubiniflat import (
    CeilingExceeded,
    CountTable,
    FlattenVariant,
    Limits,
    Ranking,
    ReducedContent,
    StirlingPermutation,
    classify,
    compositions,
    count_filtered,
    count_table,
    descents,
    fubini_by_reduced_content,
    fubini_stream,
    multiset_permutations,
    runs,
    stirling_stream,
    weak_compositions,
)

from oracles import (
    brute_rankings,
    brute_stirling_words,
    double_factorial_odd,
    rankings_with_multiset,
    reference_fubini_number,
)
from test_core import FR3


class TestCompositions:
    def test_counts(self):
        for n in range(1, 10):
            assert sum(1 for _ in compositions(n)) == 2 ** (n - 1)
        assert list(compositions(0)) == [()]

    def test_lexicographic_and_distinct(self):
        for n in range(1, 9):
            items = list(compositions(n))
            assert items == sorted(items)
            assert len(set(items)) == len(items)
            assert all(sum(parts) == n and min(parts) >= 1 for parts in items)

    def test_weak_compositions(self):
        for total in range(5):
            for parts in range(1, 4):
                items = list(weak_compositions(total, parts))
                assert len(items) == math.comb(total + parts - 1, parts - 1)
                assert items == sorted(items)
                assert all(sum(t) == total and len(t) == parts for t in items)
        assert list(weak_compositions(0, 0)) == [()]
        assert list(weak_compositions(2, 0)) == []


class TestMultisetPermutations:
    def test_matches_stdlib_set(self):
        for word in [(1, 2, 2), (1, 1, 3, 3), (1, 1, 1), (2, 1, 2), (1, 2, 3, 4)]:
            got = list(multiset_permutations(word))
            assert set(got) == rankings_with_multiset(word)
            assert len(got) == len(set(got))

    def test_lexicographic_order(self):
        got = list(multiset_permutations((1, 1, 3, 3)))
        assert got == sorted(got)
        assert got[0] == (1, 1, 3, 3)
        assert got[-1] == (3, 3, 1, 1)

    def test_multinomial_count(self):
        word = (1, 1, 1, 4, 4)
        assert sum(1 for _ in multiset_permutations(word)) == math.factorial(5) // (
            math.factorial(3) * math.factorial(2)
        )

    def test_empty(self):
        assert list(multiset_permutations(())) == [()]


class TestFubiniStream:
    def test_length_three_is_exactly_fr3(self):
        got = [tuple(r) for r in fubini_stream(3)]
        assert len(got) == 13
        assert set(got) == FR3

    def test_length_one(self):
        assert [tuple(r) for r in fubini_stream(1)] == [(1,)]

    def test_length_four_count(self):
        assert sum(1 for _ in fubini_stream(4)) == 75
        assert reference_fubini_number(4) == 75

    def test_counts_match_recurrence(self):
        for n in range(1, 7):
            assert sum(1 for _ in fubini_stream(n)) == reference_fubini_number(n)

    def test_no_duplicates(self):
        for n in range(1, 7):
            words = [tuple(r) for r in fubini_stream(n)]
            assert len(words) == len(set(words))

    def test_matches_ambient_filter(self):
        for n in range(6):
            assert {tuple(r) for r in fubini_stream(n)} == brute_rankings(n)

    def test_deterministic_order(self):
        assert [tuple(r) for r in fubini_stream(4)] == [tuple(r) for r in fubini_stream(4)]

    def test_ceiling_guard(self):
        with pytest.raises(CeilingExceeded, match="FUBINI_N_CEILING"):
            next(fubini_stream(4, limits=Limits(n_ceiling=3)))

    def test_empty_length(self):
        assert [r.n for r in fubini_stream(0)] == [0]


class TestFubiniByReducedContent:
    def test_multinomial_fiber(self):
        got = list(fubini_by_reduced_content((3, 2)))
        assert len(got) == 10
        assert {tuple(r) for r in got} == rankings_with_multiset((1, 1, 1, 4, 4))

    def test_two_singletons(self):
        assert {tuple(r) for r in fubini_by_reduced_content((1, 1))} == {(1, 2), (2, 1)}

    def test_single_part(self):
        assert [tuple(r) for r in fubini_by_reduced_content((4,))] == [(1, 1, 1, 1)]

    def test_yields_validated_rankings_with_content(self):
        rc = ReducedContent((1, 2, 1))
        for r in fubini_by_reduced_content(rc):
            assert isinstance(r, Ranking)
            assert r.content().reduced() == rc

    def test_partition_of_full_stream(self):
        for n in range(1, 7):
            total = sum(
                sum(1 for _ in fubini_by_reduced_content(parts)) for parts in compositions(n)
            )
            assert total == reference_fubini_number(n)


def classify_filter_counts(n: int, variant: FlattenVariant) -> tuple[int, ...]:
    # Independent of the optimized counting pass: classify every ranking with
    # the public predicates and tally run counts.
    vec = [0] * n
    for r in fubini_stream(n):
        if variant in classify(r):
            vec[runs(r, variant.run_mode).k - 1] += 1
    return tuple(vec)


class TestCountFiltered:
    @pytest.mark.parametrize(
        "n,variant,expected",
        [
            (7, FlattenVariant.WFLAT_WRUNS, (64, 1464, 2264, 208, 0, 0, 0)),
            (6, FlattenVariant.WFLAT_RUNS, (1, 93, 286, 112, 13, 1)),
            (7, FlattenVariant.FLAT_WRUNS, (64, 967, 871, 41, 0, 0, 0)),
        ],
    )
    def test_reference_rows(self, n, variant, expected):
        assert count_filtered(n, variant) == expected

    def test_single_value_lookup(self):
        assert count_filtered(7, FlattenVariant.WFLAT_WRUNS, 2) == 1464
        assert count_filtered(7, FlattenVariant.WFLAT_WRUNS, 9) == 0

    def test_agrees_with_classify_filter(self):
        for n in range(1, 6):
            for variant in FlattenVariant:
                assert count_filtered(n, variant) == classify_filter_counts(n, variant)

    def test_single_weak_run_counts_are_powers_of_two(self):
        for n in range(1, 8):
            assert count_filtered(n, FlattenVariant.WFLAT_WRUNS, 1) == 2 ** (n - 1)
            assert count_filtered(n, FlattenVariant.FLAT_WRUNS, 1) == 2 ** (n - 1)

    def test_single_strict_run_is_unique(self):
        for n in range(1, 8):
            assert count_filtered(n, FlattenVariant.WFLAT_RUNS, 1) == 1
            assert count_filtered(n, FlattenVariant.FLAT_RUNS, 1) == 1

    def test_only_last_run_may_be_singleton(self):
        # Weak-runs flattened members never have an internal singleton run.
        for n in range(1, 7):
            for r in fubini_stream(n):
                families = classify(r)
                if FlattenVariant.WFLAT_WRUNS in families or FlattenVariant.FLAT_WRUNS in families:
                    parts = runs(r, FlattenVariant.WFLAT_WRUNS.run_mode).runs
                    assert all(len(run) >= 2 for run in parts[:-1])

    def test_ceiling_guard(self):
        with pytest.raises(CeilingExceeded):
            count_filtered(5, FlattenVariant.FLAT_RUNS, limits=Limits(n_ceiling=4))


class TestCountTable:
    def test_flat_runs_small_rows(self):
        table = count_table(5, FlattenVariant.FLAT_RUNS)
        assert table.rows == ((1,), (1, 0), (1, 2, 0), (1, 8, 0, 0), (1, 24, 10, 0, 0))

    def test_minimal_table(self):
        for variant in FlattenVariant:
            assert count_table(1, variant).rows == ((1,),)

    def test_flat_runs_row_eight(self):
        table = count_table(8, FlattenVariant.FLAT_RUNS)
        assert table.row(8) == (1, 400, 2772, 1352, 0, 0, 0, 0)

    def test_row_sums_match_vector_sums(self):
        table = count_table(5, FlattenVariant.WFLAT_WRUNS)
        assert table.row_sums() == (1, 2, 6, 24, 116)

    def test_cell_addressing(self):
        table = count_table(4, FlattenVariant.WFLAT_WRUNS)
        assert table.cell(4, 2) == 16
        assert table.cell(4, 9) == 0
        with pytest.raises(ValueError):
            table.row(5)

    def test_csv_layout(self):
        table = count_table(3, FlattenVariant.FLAT_RUNS)
        assert table.to_csv() == "n,k=1,k=2,k=3\n1,1,0,0\n2,1,0,0\n3,1,2,0\n"

    def test_json_round_trip(self):
        table = count_table(5, FlattenVariant.FLAT_WRUNS)
        assert CountTable.from_json(table.to_json()) == table

    def test_text_contains_all_cells(self):
        text = count_table(3, FlattenVariant.WFLAT_RUNS).to_text()
        for cell in ("1", "4"):
            assert cell in text


class TestStirling:
    def test_order_one(self):
        assert [tuple(sp) for sp in stirling_stream(1)] == [(1, 1)]

    def test_order_two(self):
        assert {tuple(sp) for sp in stirling_stream(2)} == {(1, 1, 2, 2), (1, 2, 2, 1), (2, 2, 1, 1)}

    def test_order_three_count(self):
        assert sum(1 for _ in stirling_stream(3)) == 15

    def test_counts_are_odd_double_factorials(self):
        for m in range(1, 7):
            assert sum(1 for _ in stirling_stream(m)) == double_factorial_odd(m)

    def test_no_duplicates_and_valid(self):
        for m in range(1, 6):
            words = [tuple(sp) for sp in stirling_stream(m)]
            assert len(words) == len(set(words))

    def test_matches_filter_oracle(self):
        for m in range(1, 5):
            assert {tuple(sp) for sp in stirling_stream(m)} == brute_stirling_words(m)

    def test_validation_rejects_bad_words(self):
        with pytest.raises(ValueError):
            StirlingPermutation((1, 2, 1, 2))
        with pytest.raises(ValueError):
            StirlingPermutation((1, 1, 2))

    def test_ceiling_guard(self):
        with pytest.raises(CeilingExceeded, match="FUBINI_STIRLING_CEILING"):
            next(stirling_stream(3, limits=Limits(stirling_ceiling=2)))


class TestDescents:
    @pytest.mark.parametrize(
        "word,convention,expected",
        [
            ((1, 2, 2, 1), "plain", 1),
            ((1, 1, 2, 2), "plain", 0),
            ((1, 1, 2, 2), "sentinel", 1),
            ((2, 2, 1, 1), "plain", 1),
            ((2, 2, 1, 1), "sentinel", 2),
        ],
    )
    def test_examples(self, word, convention, expected):
        assert descents(word, convention) == expected

    def test_sentinel_is_plain_plus_one(self):
        for sp in stirling_stream(3):
            assert descents(sp, "sentinel") == descents(sp, "plain") + 1

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            descents((1, 1), "terminal")
