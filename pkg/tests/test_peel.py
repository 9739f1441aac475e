import pytest
from hypothesis import given

from conftest import embedded_planar
from planar_ccw.errors import EmbeddingError
from planar_ccw.generate import complete, cycle, grid, nested_cycles, path, wheel
from planar_ccw.graph import EmbeddedGraph, Graph, expand_vertices, restrict_embedding
from planar_ccw.peel import (
    LayerPartition,
    boundary_edge_peel,
    is_forest,
    outer_boundary,
    peel_layers,
    validate_layering,
)


class TestOuterBoundary:
    def test_cycle(self):
        verts, edges = outer_boundary(cycle(5))
        assert verts == set(range(5)) and len(edges) == 5

    def test_wheel_excludes_hub(self):
        verts, edges = outer_boundary(wheel(5))
        assert verts == set(range(5))
        assert edges == {frozenset((i, (i + 1) % 5)) for i in range(5)}

    def test_k4_outer_triangle(self):
        eg = complete(4)
        verts, edges = outer_boundary(eg)
        assert len(verts) == 3 and len(edges) == 3
        assert 3 not in verts  # the inner point of the straight-line drawing

    def test_missing_designation(self):
        eg = cycle(4)
        bare = EmbeddedGraph(eg.graph, eg.rotation)
        with pytest.raises(EmbeddingError, match="outer-face"):
            outer_boundary(bare)


class TestPeelLayers:
    @pytest.mark.parametrize("eg", [cycle(7), path(5), complete(3), grid(2, 6)])
    def test_outerplanar_depth_one(self, eg):
        assert peel_layers(eg)[0].k == 1

    def test_nested_cycles_3_4(self):
        lp, _ = peel_layers(nested_cycles(3, 4))
        assert lp.k == 3
        assert [set(layer) for layer in lp.layers] == [set(range(4 * r, 4 * r + 4)) for r in range(3)]

    def test_wheel_hub_is_second_layer(self):
        lp, _ = peel_layers(wheel(6))
        assert lp.k == 2 and lp.layers[1] == (6,)

    @pytest.mark.parametrize("k", [1, 2, 4, 5])
    def test_nested_depth_equals_k(self, k):
        assert peel_layers(nested_cycles(k, 5))[0].k == k

    def test_residuals_start_with_input(self):
        eg = nested_cycles(2, 4)
        _, residuals = peel_layers(eg)
        assert residuals[0] is eg and len(residuals) == 2

    @given(embedded_planar())
    def test_output_is_valid_layering(self, eg):
        lp, _ = peel_layers(eg)
        assert validate_layering(eg.graph, lp)

    @given(embedded_planar())
    def test_deleting_first_layer_drops_depth_by_one(self, eg):
        lp, _ = peel_layers(eg)
        rest = restrict_embedding(eg, removed_vertices=lp.layers[0])
        assert peel_layers(rest)[0].k == lp.k - 1

    def test_layer_partition_round_trip(self):
        lp = peel_layers(wheel(5))[0]
        assert LayerPartition.from_dict(lp.to_dict()) == lp


class TestBoundaryEdgePeel:
    def test_cycle_one_step(self):
        states = boundary_edge_peel(cycle(6))
        assert len(states) == 2 and states[1].graph.m == 0

    def test_tree_needs_no_step(self):
        states = boundary_edge_peel(path(6))
        assert len(states) == 1

    def test_nested_cycles_2_3_expanded(self):
        expanded, _ = expand_vertices(nested_cycles(2, 3))
        states = boundary_edge_peel(expanded)
        assert len(states) == 3
        assert is_forest(states[-1].graph)
        assert not is_forest(states[-2].graph)

    def test_rejects_high_degree(self):
        with pytest.raises(ValueError):
            boundary_edge_peel(wheel(5))

    @given(embedded_planar())
    def test_vertices_kept_and_edges_shrink(self, eg):
        expanded, _ = expand_vertices(eg)
        states = boundary_edge_peel(expanded)
        for a, b in zip(states, states[1:]):
            assert a.graph.vertices == b.graph.vertices
            assert b.graph.edge_set() < a.graph.edge_set()
        assert is_forest(states[-1].graph)


class TestValidateLayering:
    def test_c4_bad_layering(self):
        g = Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        verdict = validate_layering(g, LayerPartition((("a",), ("c",), ("b", "d"))))
        assert not verdict
        assert set(verdict.witness) in ({"a", "b"}, {"a", "d"})

    def test_single_layer_always_passes(self):
        g = wheel(6).graph
        assert validate_layering(g, LayerPartition((g.vertices,)))

    def test_missing_vertex(self):
        g = cycle(3).graph
        assert not validate_layering(g, LayerPartition(((0, 1),)))

    def test_repeated_vertex(self):
        g = cycle(3).graph
        assert not validate_layering(g, LayerPartition(((0, 1, 2), (0,))))
