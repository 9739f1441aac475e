import itertools
import json

import pytest
from hypothesis import given

from conftest import embedded_planar
from planar_ccw.errors import EmbeddingError, GraphError, InvariantBreach, NotConnectedError
from planar_ccw.generate import nested_cycles, path, wheel
from planar_ccw.graph import EmbeddedGraph, Graph
from planar_ccw.peel import LayerPartition
from planar_ccw.represent import (
    PLANAR_WIDTH_BOUND,
    RepresentationPair,
    build_g1,
    chordal_from_subtrees,
    compute_t_star,
    layer_coloring,
    planar_representation,
    universal_representation,
)
from planar_ccw.treedec import TreeDecomposition
from planar_ccw.verify import certify, intersection_equals, is_chordal


def single_bag(g):
    return TreeDecomposition(Graph.from_edges(["r"], []), {"r": frozenset(g.vertices)})


P3 = Graph.from_edges("abc", [("a", "b"), ("b", "c")])
P3_TD = TreeDecomposition(Graph.from_edges(["x", "y"], [("x", "y")]),
                          {"x": frozenset("ab"), "y": frozenset("bc")})
K3 = Graph.from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
K4 = Graph.from_edges(range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)])


class TestChordalFromSubtrees:
    def test_single_bag_gives_complete_graph(self):
        g = wheel(4).graph
        g2, model = chordal_from_subtrees(single_bag(g))
        assert g2.m == g.n * (g.n - 1) // 2
        assert all(model[v] == {"r"} for v in g.vertices)

    def test_p3(self):
        g2, _ = chordal_from_subtrees(P3_TD)
        assert g2 == P3

    def test_invalid_subtree(self):
        td = TreeDecomposition(Graph.from_edges("xyz", [("x", "y"), ("y", "z")]),
                               {"x": frozenset("a"), "y": frozenset("b"), "z": frozenset("a")})
        with pytest.raises(GraphError):
            chordal_from_subtrees(td)


class TestTStar:
    def test_one_bag_one_layer(self):
        assert compute_t_star(single_bag(K3), LayerPartition((tuple("abc"),))) == 3

    def test_singleton_layers(self):
        assert compute_t_star(single_bag(K3), LayerPartition((("a",), ("b",), ("c",)))) == 1


class TestLayerColoring:
    def test_triangle(self):
        assert layer_coloring(K3, "abc", 3) == [["a"], ["b"], ["c"]]

    def test_edgeless(self):
        g = Graph.from_edges("abc", [])
        assert layer_coloring(g, "abc", 1) == [["a", "b", "c"]]

    def test_p3(self):
        assert sorted(map(sorted, layer_coloring(P3, "abc", 2))) == [["a", "c"], ["b"]]

    def test_budget_breach(self):
        with pytest.raises(InvariantBreach):
            layer_coloring(K3, "abc", 2)


class TestBuildG1:
    def test_triangle(self):
        lp = LayerPartition((tuple("abc"),))
        g1, cover = build_g1(K3, lp, [[["a"], ["b"], ["c"]]], 3)
        assert g1 == K3
        assert cover.width == 2
        assert cover.width <= 2 * 3 - 1

    def test_p3(self):
        lp = LayerPartition((tuple("abc"),))
        g1, cover = build_g1(P3, lp, [[["a", "c"], ["b"]]], 2, g2=P3)
        assert g1 == K3
        assert [set(c) for c in cover.cliques] == [{"a", "c"}, {"b"}]
        assert cover.width == 1
        assert intersection_equals(P3, [g1, P3])

    def test_edgeless_graph(self):
        g = Graph.from_edges(range(4), [])
        lp = LayerPartition(((0, 1), (2, 3)))
        g1, cover = build_g1(g, lp, [[[0, 1]], [[2, 3]]], 1)
        assert cover.width <= 1
        assert g1.has_edge(0, 1) and g1.has_edge(2, 3) and g1.m == 2

    def test_class_not_independent(self):
        lp = LayerPartition((tuple("abc"),))
        with pytest.raises(InvariantBreach, match="independent"):
            build_g1(P3, lp, [[["a", "b"], ["c"]]], 2, g2=P3)

    def test_padding_keeps_empty_slots(self):
        lp = LayerPartition((("a",), ("b", "c")))
        g = Graph.from_edges("abc", [("a", "b")])
        _, cover = build_g1(g, lp, [[["a"]], [["b", "c"]]], 2)
        assert [len(c) for c in cover.cliques] == [1, 0, 2, 0]


class TestUniversal:
    def test_k4_single_bag(self):
        pair = universal_representation(K4, single_bag(K4), LayerPartition((tuple(range(4)),)), bound=7)
        assert pair.g2 == K4 and pair.t_star == 4
        assert pair.report["ok"] and pair.report["cover_width"] <= 7

    def test_p3(self):
        pair = universal_representation(P3, P3_TD, LayerPartition((tuple("abc"),)))
        assert pair.report["ok"]
        assert intersection_equals(P3, [pair.g1, pair.g2])

    def test_bad_decomposition(self):
        td = TreeDecomposition(Graph.from_edges(["x"], []), {"x": frozenset("ab")})
        with pytest.raises(InvariantBreach):
            universal_representation(P3, td, LayerPartition((tuple("abc"),)))


class TestPlanarPipeline:
    def test_tree(self):
        eg = path(7)
        pair = planar_representation(eg)
        assert pair.g2.edge_set() >= eg.graph.edge_set()
        assert pair.report["ok"] and pair.report["cover_width"] <= PLANAR_WIDTH_BOUND

    def test_nested_cycles(self):
        pair = planar_representation(nested_cycles(3, 4))
        assert pair.report["ok"] and pair.report["cover_width"] <= PLANAR_WIDTH_BOUND

    def test_disconnected(self):
        g = Graph.from_edges(range(4), [(0, 1), (2, 3)])
        eg = EmbeddedGraph(g, {0: (1,), 1: (0,), 2: (3,), 3: (2,)}, ((0, 1), (2, 3)))
        with pytest.raises(NotConnectedError):
            planar_representation(eg)

    def test_nonplanar_rotation(self):
        g = Graph.from_edges(range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)])
        bad = {0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)}
        with pytest.raises(EmbeddingError):
            planar_representation(EmbeddedGraph(g, bad, ((0, 1),)))

    @given(embedded_planar(max_n=45))
    def test_pipeline_properties(self, eg):
        pair = planar_representation(eg)
        g = eg.graph
        assert intersection_equals(g, [pair.g1, pair.g2])
        assert is_chordal(pair.g2)
        assert pair.t_star <= 4
        assert pair.report["cover_width"] <= min(PLANAR_WIDTH_BOUND, 2 * pair.t_star - 1) or g.n == 1
        blocks = [c for c in pair.cover.cliques if c]
        assert sorted(v for c in blocks for v in c) == sorted(g.vertices)

    @given(embedded_planar(max_n=12))
    def test_layer_cliques_of_g2_bounded_by_t_star(self, eg):
        pair = planar_representation(eg)
        for layer in pair.layers.layers:
            sub = pair.g2.subgraph(layer)
            biggest = 1
            for size in range(2, len(layer) + 1):
                if any(all(sub.has_edge(a, b) for a, b in itertools.combinations(c, 2))
                       for c in itertools.combinations(layer, size)):
                    biggest = size
                else:
                    break
            assert biggest <= pair.t_star

    def test_pair_round_trip(self):
        eg = wheel(6)
        pair = planar_representation(eg)
        doc = json.loads(json.dumps(pair.to_dict()))
        back = RepresentationPair.from_dict(doc, eg.graph)
        report = certify(back, eg.graph, back.layers)
        assert report["ok"] and report["cover_width"] == pair.report["cover_width"]
        assert doc["clique_cover"]["width"] == pair.report["cover_width"]
