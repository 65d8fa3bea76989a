import pytest

import oracles
from degseq import (
    ConstraintViolationError,
    DegreeSequence,
    PatternSpec,
    SimpleGraph,
    build_removed_pattern,
    complement,
    complete,
    contains_subgraph,
    cycle_graph,
    degree_sequence,
    degree_sequence_census,
    disjoint_union,
    extremal_construction,
    format_graph,
    join,
    parse_graph,
    path_graph,
)


def from_edges(n, edges):
    return SimpleGraph.from_edges(n, edges)


class TestSimpleGraph:
    def test_from_edges_and_accessors(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g.n == 4
        assert g.edge_count == 3
        assert g.degrees() == [1, 2, 2, 1]
        assert g.has_edge(1, 2) and g.has_edge(2, 1)
        assert not g.has_edge(0, 3)
        assert list(g.neighbors(1)) == [0, 2]
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_duplicate_edges_collapse(self):
        g = from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            from_edges(3, [(1, 1)])

    def test_vertex_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            from_edges(3, [(0, 3)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, (0b10, 0b00))


class TestConstructors:
    def test_complete(self):
        k4 = complete(4)
        assert k4.edge_count == 6
        assert k4.degrees() == [3, 3, 3, 3]
        assert complete(0).n == 0
        assert complete(1).edge_count == 0

    def test_complement(self):
        assert complement(complete(4)).edge_count == 0
        # the four-cycle's complement is the two diagonals
        assert complement(cycle_graph(4)).edges() == [(0, 2), (1, 3)]
        g = from_edges(5, [(0, 1), (2, 4)])
        assert complement(complement(g)).edges() == g.edges()

    def test_disjoint_union_shifts_labels(self):
        g = disjoint_union(path_graph(1), path_graph(1))
        assert g.n == 4
        assert g.edges() == [(0, 1), (2, 3)]

    def test_join_degrees(self):
        g = join(complete(2), complement(complete(3)))
        assert sorted(g.degrees(), reverse=True) == [4, 4, 2, 2, 2]
        assert g.edge_count == 1 + 6

    def test_path_and_cycle(self):
        assert path_graph(2).edges() == [(0, 1), (1, 2)]
        assert path_graph(1).edges() == [(0, 1)]
        assert cycle_graph(3).edge_count == 3
        assert cycle_graph(4).degrees() == [2, 2, 2, 2]
        with pytest.raises(ValueError):
            cycle_graph(2)


class TestPatternSpec:
    def test_valid_specs(self):
        assert PatternSpec(4, 1, 1).removed_vertex_count == 5
        assert PatternSpec(2, 0, 1).removed_vertex_count == 2
        assert PatternSpec(6, 1, 2).removed_vertex_count == 7

    @pytest.mark.parametrize("r,k,t", [(1, 0, 0), (4, 2, 0), (2, -1, 0), (2, 0, -1), (4, 0, 3)])
    def test_invalid_specs(self, r, k, t):
        with pytest.raises(ConstraintViolationError):
            PatternSpec(r, k, t)

    def test_label(self):
        assert PatternSpec(4, 1, 1).label() == "K5-(1P2+1K2)"
        assert PatternSpec(5, 2, 0).label() == "K6-(2P2+0K2)"

    def test_threshold_violations(self):
        assert PatternSpec(4, 1, 1).threshold_violations(26) == []
        assert PatternSpec(4, 1, 1).threshold_violations(8) == ["n >= 4r + 10 = 26"]
        broken = PatternSpec(3, 0, 1).threshold_violations(5)
        assert "k >= 1" in broken and "k + t >= 2" in broken and "r >= 4" in broken


class TestBuildRemovedPattern:
    def test_single_missing_edge_sits_last(self):
        h = build_removed_pattern(PatternSpec(4, 0, 1))
        assert h.n == 5
        assert h.edge_count == 9
        assert not h.has_edge(3, 4)
        assert h.degrees() == [4, 4, 4, 3, 3]

    def test_one_path_one_edge(self):
        h = build_removed_pattern(PatternSpec(4, 1, 1))
        assert h.n == 5
        assert h.edge_count == 7
        assert h.degrees() == [3, 3, 3, 3, 2]

    def test_small_path_removal(self):
        # complete graph on 3 vertices short one edge is the two-edge path
        h = build_removed_pattern(PatternSpec(2, 0, 1))
        assert h.edges() == [(0, 1), (0, 2)]

    def test_degrees_non_increasing_by_label(self):
        for spec in (PatternSpec(4, 1, 1), PatternSpec(5, 2, 0), PatternSpec(6, 1, 2), PatternSpec(7, 2, 1)):
            degs = build_removed_pattern(spec).degrees()
            assert degs == sorted(degs, reverse=True), spec

    def test_edge_budget(self):
        # removing k two-edge paths and t single edges drops 2k+t edges
        for spec in (PatternSpec(5, 1, 1), PatternSpec(6, 2, 0), PatternSpec(6, 0, 2)):
            h = build_removed_pattern(spec)
            r = spec.r
            assert h.edge_count == (r + 1) * r // 2 - 2 * spec.k - spec.t

    def test_matches_independent_pattern(self):
        # same isomorphism class as the hand-written oracle copy
        h = build_removed_pattern(PatternSpec(4, 1, 1))
        pn, pe = oracles.PATTERNS["k5-p2k2"]
        assert oracles.contains(h.n, h.edges(), pn, pe)
        assert oracles.contains(pn, pe, h.n, h.edges())


class TestExtremalConstruction:
    def test_small(self):
        g = extremal_construction(3, 5)
        assert degree_sequence(g).entries == (4, 1, 1, 1, 1)

    def test_degree_shape(self):
        g = extremal_construction(4, 8)
        assert degree_sequence(g).entries == (7, 7, 2, 2, 2, 2, 2, 2)
        g = extremal_construction(6, 10)
        assert degree_sequence(g).entries == (9, 9, 9, 9, 4, 4, 4, 4, 4, 4)

    def test_validation(self):
        with pytest.raises(ConstraintViolationError):
            extremal_construction(2, 5)
        with pytest.raises(ConstraintViolationError):
            extremal_construction(4, 4)


class TestContainsSubgraph:
    def test_embedding_is_checked_mapping(self):
        g = cycle_graph(4)
        h = path_graph(2)
        found = contains_subgraph(g, h)
        assert found is not None
        for u, v in h.edges():
            assert g.has_edge(found[u], found[v])

    def test_known_negatives(self):
        paw = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        assert contains_subgraph(paw, cycle_graph(4)) is None
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        two_k2 = disjoint_union(path_graph(1), path_graph(1))
        assert contains_subgraph(star, two_k2) is None

    def test_pattern_larger_than_host(self):
        assert contains_subgraph(complete(3), complete(4)) is None

    def test_empty_pattern_always_embeds(self):
        assert contains_subgraph(complete(3), complete(0)) == {}

    @pytest.mark.parametrize("name", ["p2", "2k2", "c4", "k4-e"])
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_injection_oracle(self, name, n):
        pn, pe = oracles.PATTERNS[name]
        if pn > n:
            return
        pattern = from_edges(pn, pe)
        for mask in range(1 << (n * (n - 1) // 2)):
            edges = oracles.mask_edges(n, mask)
            host = from_edges(n, edges)
            found = contains_subgraph(host, pattern)
            assert (found is not None) == oracles.contains(n, edges, pn, pe), (mask, name)
            if found is not None:
                for u, v in pattern.edges():
                    assert host.has_edge(found[u], found[v])


class TestTextFormat:
    def test_format_golden(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert format_graph(g) == "4 3\n1 2\n2 3\n3 4\n"
        assert format_graph(complete(1)) == "1 0\n"

    def test_round_trip(self):
        for g in (complete(4), cycle_graph(5), path_graph(3), complement(complete(3)), complete(0)):
            assert parse_graph(format_graph(g)).adj == g.adj

    def test_comments_and_blanks_ignored(self):
        text = "# a triangle\n3 3\n\n1 2\n# middle\n1 3\n2 3\n"
        assert parse_graph(text).edge_count == 3

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "3\n",
            "3 2\n1 2\n",  # fewer edges than declared
            "3 1\n1 2\n1 3\n",  # more edges than declared
            "3 1\nx 1\n",
            "3 1\n2 2\n",  # self-loop
            "3 1\n1 4\n",  # endpoint out of range
            "3 2\n1 2\n1 2\n",  # duplicate edge
            "3 1\n2 1\n",  # endpoints must come ordered
            "x y\n",
        ],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_graph(bad)


class TestCensus:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 31), (6, 102)])
    def test_counts(self, n, count):
        assert len(degree_sequence_census(n)) == count

    @pytest.mark.parametrize("n", range(1, 7))
    def test_two_independent_censuses_agree(self, n):
        assert degree_sequence_census(n) == set(oracles.census(n))

    def test_members_make_valid_sequences(self):
        for entries in degree_sequence_census(5):
            DegreeSequence(entries)  # constructor validates shape
