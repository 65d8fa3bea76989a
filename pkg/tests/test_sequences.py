import pytest

import oracles
from degseq import (
    DegreeSequence,
    EntryTooLargeError,
    EnumerationStats,
    LayoffIndexError,
    NegativeEntryError,
    ResultNegativeError,
    candidate_sequences,
    enumerate_graphic_sequences,
    erdos_gallai_margins,
    format_sequence,
    havel_hakimi_realize,
    is_graphic,
    layoff,
    normalize,
    parse_sequence,
    run_over_shards,
)


class TestDegreeSequence:
    def test_valid_construction(self):
        pi = DegreeSequence((3, 3, 2, 2))
        assert pi.n == 4
        assert pi.sigma == 10
        assert len(pi) == 4
        assert pi[0] == 3
        assert list(pi) == [3, 3, 2, 2]
        assert str(pi) == "3,3,2,2"

    def test_negative_entry_rejected(self):
        with pytest.raises(NegativeEntryError):
            DegreeSequence((2, 1, -1))

    def test_entry_above_cap_rejected(self):
        with pytest.raises(EntryTooLargeError):
            DegreeSequence((3, 1, 1))
        with pytest.raises(EntryTooLargeError):
            DegreeSequence((1,))

    def test_out_of_order_rejected(self):
        with pytest.raises(ValueError):
            DegreeSequence((1, 2, 1))

    def test_normalize_sorts(self):
        assert normalize([2, 3, 2, 3]).entries == (3, 3, 2, 2)
        assert normalize([0]).entries == (0,)

    def test_normalize_validates(self):
        with pytest.raises(NegativeEntryError):
            normalize([1, -2, 1])
        with pytest.raises(EntryTooLargeError):
            normalize([4, 1, 1, 0])


class TestParseFormat:
    def test_parse_basic(self):
        assert parse_sequence("3,3,2,2").entries == (3, 3, 2, 2)
        assert parse_sequence(" 3, 3 ,2,2 ").entries == (3, 3, 2, 2)
        assert parse_sequence("2,3,3,2").entries == (3, 3, 2, 2)

    @pytest.mark.parametrize("bad", ["", "  ", "3,,2", "a,b", "3;2", "1.5,1.5"])
    def test_parse_rejects_junk(self, bad):
        with pytest.raises(ValueError):
            parse_sequence(bad)

    def test_format_round_trip(self):
        for text in ("3,3,2,2", "0", "1,1"):
            assert format_sequence(parse_sequence(text)) == text


class TestIsGraphic:
    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((3, 3, 2, 2), True),
            ((3, 3, 1, 1), False),
            ((0,), True),
            ((2, 2, 2), True),
            ((2, 2, 1), False),  # odd sum
            ((5, 4, 3, 3, 3, 3), False),  # odd sum again
            ((7, 3, 3, 3, 3, 3, 3, 3), True),
            ((0, 0, 0, 0), True),
            ((4, 4, 2, 2, 2), True),
        ],
    )
    def test_frozen_verdicts(self, entries, expected):
        assert is_graphic(DegreeSequence(entries)) is expected

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_exhaustive_census(self, n):
        for entries in candidate_sequences(n):
            assert is_graphic(DegreeSequence(entries)) == oracles.is_graphic_oracle(entries), entries


class TestMargins:
    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((3, 3, 2, 2), [0, 0, 0]),
            ((3, 3, 1, 1), [0, -2, 0]),
            ((2, 2, 2), [0, 0]),
            ((0,), []),
        ],
    )
    def test_frozen_rows(self, entries, expected):
        assert erdos_gallai_margins(DegreeSequence(entries)) == expected

    @pytest.mark.parametrize("n", range(2, 7))
    def test_margins_characterize_graphicality(self, n):
        # graphic iff even sum and no aggregate bound is overshot
        for entries in candidate_sequences(n):
            pi = DegreeSequence(entries)
            clean = pi.sigma % 2 == 0 and all(m >= 0 for m in erdos_gallai_margins(pi))
            assert clean == is_graphic(pi), entries


class TestLayoff:
    @pytest.mark.parametrize(
        "entries,k,expected",
        [
            ((2, 2, 2), 1, (1, 1)),
            ((2, 2, 2), 3, (1, 1)),
            ((3, 3, 2, 2), 1, (2, 1, 1)),
            ((3, 3, 2, 2), 4, (2, 2, 2)),
            ((1, 1, 0), 3, (1, 1)),
            ((0,), 1, ()),
        ],
    )
    def test_frozen_rows(self, entries, k, expected):
        assert layoff(DegreeSequence(entries), k).entries == expected

    @pytest.mark.parametrize("k", [0, -1, 4])
    def test_position_out_of_range(self, k):
        with pytest.raises(LayoffIndexError):
            layoff(DegreeSequence((2, 2, 2)), k)

    def test_negative_residual_certifies_nongraphic(self):
        with pytest.raises(ResultNegativeError):
            layoff(DegreeSequence((3, 3, 3, 0)), 1)

    def test_oversized_residual_certifies_nongraphic(self):
        with pytest.raises(EntryTooLargeError):
            layoff(DegreeSequence((3, 3, 0, 0)), 3)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_preserves_graphicality_both_ways(self, n):
        # the recursion step: pi graphic iff its residual is, at every position
        for entries in candidate_sequences(n):
            pi = DegreeSequence(entries)
            before = is_graphic(pi)
            for k in range(1, n + 1):
                try:
                    residual = layoff(pi, k)
                except (ResultNegativeError, EntryTooLargeError):
                    assert not before, (entries, k)
                    continue
                assert is_graphic(residual) == before, (entries, k)


class TestHavelHakimi:
    def test_not_graphic_returns_none(self):
        assert havel_hakimi_realize(DegreeSequence((3, 3, 1, 1))) is None

    def test_trivial_graphs(self):
        g = havel_hakimi_realize(DegreeSequence((0,)))
        assert g.n == 1 and g.edge_count == 0
        g = havel_hakimi_realize(DegreeSequence((1, 1)))
        assert g.edges() == [(0, 1)]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_realizes_positionally(self, n):
        for entries in candidate_sequences(n):
            pi = DegreeSequence(entries)
            g = havel_hakimi_realize(pi)
            if is_graphic(pi):
                assert g is not None, entries
                assert g.degrees() == list(entries), entries
            else:
                assert g is None, entries


class TestEnumeration:
    def test_small_lists_in_order(self):
        assert [pi.entries for pi in enumerate_graphic_sequences(2)] == [(1, 1), (0, 0)]
        assert [pi.entries for pi in enumerate_graphic_sequences(3)] == [
            (2, 2, 2),
            (2, 1, 1),
            (1, 1, 0),
            (0, 0, 0),
        ]

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 31), (6, 102)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphic_sequences(n)) == count

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_census(self, n):
        assert {pi.entries for pi in enumerate_graphic_sequences(n)} == set(oracles.census(n))

    def test_min_sigma_filter(self):
        got = [pi.entries for pi in enumerate_graphic_sequences(4, min_sigma=8)]
        assert got == [(3, 3, 3, 3), (3, 3, 2, 2), (3, 2, 2, 1), (2, 2, 2, 2)]
        for pi in enumerate_graphic_sequences(5, min_sigma=12):
            assert pi.sigma >= 12

    def test_exclude_zero_terms(self):
        with_zeros = {pi.entries for pi in enumerate_graphic_sequences(4)}
        positive = {pi.entries for pi in enumerate_graphic_sequences(4, exclude_zero_terms=True)}
        assert positive == {e for e in with_zeros if 0 not in e}

    def test_first_entry_shards_partition_in_order(self):
        whole = [pi.entries for pi in enumerate_graphic_sequences(5)]
        sharded = [
            pi.entries
            for d1 in range(4, -1, -1)
            for pi in enumerate_graphic_sequences(5, first_entry=d1)
        ]
        assert sharded == whole

    def test_stats_tally(self):
        stats = EnumerationStats()
        n_graphic = sum(1 for _ in enumerate_graphic_sequences(5, stats=stats))
        assert stats.graphic == n_graphic == 31
        assert stats.candidates >= stats.graphic

    def test_candidate_space_size(self):
        # number of non-increasing tuples over [0, n-1] is C(2n-1, n)
        assert sum(1 for _ in candidate_sequences(4)) == 35
        assert sum(1 for _ in candidate_sequences(5)) == 126


class TestShards:
    def test_results_in_shard_order(self):
        assert run_over_shards(4, lambda d1: d1) == [3, 2, 1, 0]

    def test_threaded_merge_identical(self):
        serial = run_over_shards(6, lambda d1: d1 * d1)
        threaded = run_over_shards(6, lambda d1: d1 * d1, threads=4)
        assert serial == threaded

    def test_thread_count_validated(self):
        with pytest.raises(ValueError):
            run_over_shards(4, lambda d1: d1, threads=0)
