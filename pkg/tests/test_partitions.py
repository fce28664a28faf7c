from __future__ import annotations

import pytest
from hypothesis import given

from quograph import Graph, HomMap, Partition, is_complete, is_equitable
from quograph import partition_of_map, quotient
from quograph.partitions import is_tame

from conftest import graphs, graphs_with_partitions


@pytest.fixture
def two_arcs():
    # the running 4-vertex example: two disjoint edges, cells {1a,1b},{2},{3}
    g = Graph(["1a", "1b", "2", "3"], [("1a", "3"), ("1b", "2")])
    p = Partition([["1a", "1b"], ["2"], ["3"]], g.vertex_set)
    return g, p


class TestPartition:
    def test_cells_normalized_by_smallest_member(self):
        p = Partition([["c"], ["b", "a"]], {"a", "b", "c"})
        assert p.cells == (("a", "b"), ("c",))
        assert p.cell_containing("b") == ("a", "b")

    def test_singletons(self):
        p = Partition.singletons({"x", "y"})
        assert p.cells == (("x",), ("y",))

    def test_overlapping_cells_rejected(self):
        with pytest.raises(ValueError):
            Partition([["a", "b"], ["b"]], {"a", "b"})

    def test_missing_vertex_rejected(self):
        with pytest.raises(ValueError):
            Partition([["a"]], {"a", "b"})

    def test_foreign_vertex_rejected(self):
        with pytest.raises(ValueError):
            Partition([["a", "z"]], {"a"})

    def test_empty_cell_rejected(self):
        with pytest.raises(ValueError):
            Partition([["a"], []], {"a"})

    def test_equality_ignores_cell_order(self):
        u = {"a", "b", "c"}
        assert Partition([["a"], ["b", "c"]], u) == Partition([["c", "b"], ["a"]], u)


class TestQuotient:
    def test_two_arcs_collapse_to_path(self, two_arcs):
        g, p = two_arcs
        result = quotient(g, p)
        assert result.quotient.vertices == ("[1a]", "[2]", "[3]")
        assert result.quotient.proper_edges == frozenset(
            {frozenset({"[1a]", "[2]"}), frozenset({"[1a]", "[3]"})}
        )
        assert result.projection.mapping == {"1a": "[1a]", "1b": "[1a]", "2": "[2]", "3": "[3]"}

    def test_singleton_partition_copies_graph_shape(self):
        g = Graph(["a", "b"], [("a", "b")])
        result = quotient(g, Partition.singletons(g.vertex_set))
        assert len(result.quotient.vertices) == 2
        assert len(result.quotient.proper_edges) == 1

    def test_total_partition_collapses_to_point(self):
        g = Graph(["a", "b", "c"], [("a", "b")])
        result = quotient(g, Partition([["a", "b", "c"]], g.vertex_set))
        assert result.quotient.vertices == ("[a]",)
        assert result.quotient.proper_edges == frozenset()

    def test_universe_mismatch_rejected(self):
        g = Graph(["a", "b"], [])
        with pytest.raises(ValueError):
            quotient(g, Partition([["a"]], {"a"}))

    @given(graphs_with_partitions())
    def test_projection_is_complete(self, gp):
        g, p = gp
        assert is_complete(quotient(g, p).projection)

    @given(graphs_with_partitions())
    def test_cell_adjacency_matches_member_adjacency(self, gp):
        g, p = gp
        result = quotient(g, p)
        proj = result.projection.mapping
        for c1 in p.cells:
            for c2 in p.cells:
                if c1 >= c2:
                    continue
                expected = any(g.has_edge(u, v) for u in c1 for v in c2)
                assert result.quotient.has_edge(proj[c1[0]], proj[c2[0]]) == expected


class TestTame:
    def test_cell_across_components_is_wild(self, two_arcs):
        g, p = two_arcs
        assert not is_tame(g, p)

    def test_cells_inside_components_are_tame(self):
        g = Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        assert is_tame(g, Partition([["a", "b"], ["c"], ["d"]], g.vertex_set))

    def test_component_partition_is_tame(self):
        g = Graph(["a", "b", "c"], [("a", "b")])
        assert is_tame(g, Partition([["a", "b"], ["c"]], g.vertex_set))

    @given(graphs_with_partitions())
    def test_tame_iff_component_count_preserved(self, gp):
        g, p = gp
        same = quotient(g, p).quotient.components().count == g.components().count
        assert is_tame(g, p) == same


class TestEquitable:
    def test_antipodal_cells_of_hexagon_are_equitable(self):
        labels = [str(i) for i in range(6)]
        g = Graph(labels, [(str(i), str((i + 1) % 6)) for i in range(6)])
        p = Partition([[str(i), str(i + 3)] for i in range(3)], g.vertex_set)
        assert is_equitable(g, p)

    def test_two_arcs_cells_are_not_equitable(self, two_arcs):
        # 1a meets cell {2} zero times but 1b meets it once
        g, p = two_arcs
        assert not is_equitable(g, p)

    def test_singletons_always_equitable(self):
        g = Graph(["a", "b", "c"], [("a", "b")])
        assert is_equitable(g, Partition.singletons(g.vertex_set))

    @given(graphs())
    def test_total_partition_equitable_iff_constant_degree(self, g):
        p = Partition([list(g.vertices)], g.vertex_set)
        degrees = {len(g.neighborhood(v)) for v in g.vertices}
        assert is_equitable(g, p) == (len(degrees) == 1)


class TestPartitionOfMap:
    def test_cells_are_nonempty_fibres(self):
        src = Graph(["a", "b", "c"], [])
        tgt = Graph(["x", "y", "z"], [])
        m = HomMap(src, tgt, {"a": "x", "b": "x", "c": "y"})
        p = partition_of_map(m)
        assert p.cells == (("a", "b"), ("c",))
