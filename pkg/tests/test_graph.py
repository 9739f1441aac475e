import pytest
from hypothesis import given

from conftest import embedded_planar
from planar_ccw.errors import EmbeddingError, GraphError, NotConnectedError
from planar_ccw.generate import complete, cycle, path, wheel
from planar_ccw.graph import (
    EmbeddedGraph,
    ExpansionMap,
    Graph,
    contract_paths,
    euler_certify,
    expand_vertex,
    expand_vertices,
    restrict_embedding,
    trace_faces,
)


def star(leaves):
    """Star with centre 0; leaves are listed counter-clockwise."""
    g = Graph.from_edges(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])
    rotation = {0: tuple(range(1, leaves + 1))}
    rotation.update({i: (0,) for i in range(1, leaves + 1)})
    return EmbeddedGraph(g, rotation, ((1, 0),))


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            Graph.from_edges([0, 1], [(0, 0)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(GraphError):
            Graph.from_edges([0, 1], [(0, 1), (1, 0)])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(GraphError):
            Graph.from_edges([0, 1], [(0, 2)])

    def test_adjacency_is_symmetric(self):
        g = Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        for u in g.vertices:
            for w in g.neighbors(u):
                assert u in g.neighbors(w)
        assert g.m == 4 and g.max_degree == 3

    def test_equality_ignores_edge_order(self):
        a = Graph.from_edges(range(3), [(0, 1), (1, 2)])
        b = Graph.from_edges(range(3), [(2, 1), (1, 0)])
        assert a == b

    def test_components(self):
        g = Graph.from_edges(range(5), [(0, 1), (2, 3)])
        assert sorted(map(len, g.components())) == [1, 2, 2]
        assert not g.is_connected()


class TestFaces:
    def test_triangle_has_two_faces(self):
        faces = trace_faces(complete(3))
        assert len(faces) == 2 and all(len(f) == 3 for f in faces)

    def test_single_edge_is_one_two_walk(self):
        faces = trace_faces(path(2))
        assert len(faces) == 1 and sorted(faces[0]) == [(0, 1), (1, 0)]

    def test_k4_has_four_triangles(self):
        faces = trace_faces(complete(4))
        assert len(faces) == 4 and all(len(f) == 3 for f in faces)

    def test_dart_convention(self):
        eg = wheel(5)
        for u, v in eg.darts():
            assert eg.next_dart((u, v)) == (v, eg.succ(v, u))

    def test_missing_dart_is_named(self):
        g = Graph.from_edges(range(3), [(0, 1), (1, 2)])
        with pytest.raises(EmbeddingError, match=r"\(1, 2\)"):
            EmbeddedGraph(g, {0: (1,), 1: (0,), 2: (1,)})

    def test_duplicate_dart_is_named(self):
        g = Graph.from_edges(range(2), [(0, 1)])
        with pytest.raises(EmbeddingError, match="twice"):
            EmbeddedGraph(g, {0: (1, 1), 1: (0,)})

    @given(embedded_planar())
    def test_every_dart_in_exactly_one_face(self, eg):
        darts = [d for walk in trace_faces(eg) for d in walk]
        assert len(darts) == len(set(darts)) == 2 * eg.graph.m


class TestEuler:
    def test_c5(self):
        cert = euler_certify(cycle(5))
        assert cert and (cert.n, cert.m, cert.f) == (5, 5, 2)

    def test_k4(self):
        cert = euler_certify(complete(4))
        assert cert and cert.f == 4

    def test_k5_fails_for_any_rotation(self):
        g = Graph.from_edges(range(5), [(i, j) for i in range(5) for j in range(i + 1, 5)])
        # cyclic order by index, and a few shuffled alternatives; no rotation can be planar
        for shift in range(4):
            rotation = {}
            for v in range(5):
                others = [w for w in range(5) if w != v]
                k = (shift * v) % 4
                rotation[v] = tuple(others[k:] + others[:k])
            assert not euler_certify(EmbeddedGraph(g, rotation))

    def test_disconnected_raises(self):
        g = Graph.from_edges(range(4), [(0, 1), (2, 3)])
        eg = EmbeddedGraph(g, {0: (1,), 1: (0,), 2: (3,), 3: (2,)})
        with pytest.raises(NotConnectedError):
            euler_certify(eg)

    @given(embedded_planar())
    def test_generated_graphs_certify(self, eg):
        assert euler_certify(eg)


class TestExpansion:
    def test_star_k14_centre(self):
        expanded, m = expand_vertex(star(4), 0)
        assert len(m.forward[0]) == 2
        assert all(expanded.graph.degree(x) == 3 for x in m.forward[0])
        assert euler_certify(expanded)

    def test_degree_three_is_identity(self):
        eg = star(3)
        expanded, m = expand_vertex(eg, 0)
        assert m.is_identity()
        assert expanded.graph == eg.graph

    def test_wheel_hub(self):
        eg = wheel(5)
        hub = 5
        expanded, m = expand_vertex(eg, hub)
        assert len(m.forward[hub]) == 3
        assert euler_certify(expanded)
        assert all(expanded.graph.degree(x) == 3 for x in m.forward[hub])

    def test_contract_after_expand(self):
        eg = wheel(7)
        expanded, m = expand_vertices(eg)
        assert contract_paths(expanded.graph, m) == eg.graph

    def test_contract_identity(self):
        g = cycle(6).graph
        assert contract_paths(g, ExpansionMap.identity(g.vertices)) == g

    def test_contract_rejects_unknown(self):
        g = cycle(4).graph
        m = ExpansionMap({0: (0, "ghost")}, {0: 0, "ghost": 0})
        with pytest.raises(GraphError):
            contract_paths(g, m)

    def test_expansion_follows_chosen_cut(self):
        # the corner between the last and the first edge of the cut runs along the whole path
        expanded, m = expand_vertex(star(5), 0, first=3)
        xs = m.forward[0]
        assert expanded.rotation[xs[0]][1:] == (3, 4)
        assert set(expanded.rotation[xs[-1]]) >= {1, 2}

    @given(embedded_planar())
    def test_expand_all_then_contract(self, eg):
        expanded, m = expand_vertices(eg)
        assert expanded.graph.max_degree <= 3
        assert euler_certify(expanded)
        assert contract_paths(expanded.graph, m) == eg.graph
        for v, xs in m.forward.items():
            assert len(xs) == max(1, eg.graph.degree(v) - 2)
            assert all(m.backward[x] == v for x in xs)


class TestRestrict:
    def test_removing_rim_of_wheel_leaves_hub(self):
        eg = wheel(5)
        rest = restrict_embedding(eg, removed_vertices=range(5))
        assert rest.graph.vertices == (5,)

    def test_removing_outer_triangle_edges(self):
        eg = complete(4)
        outer = {frozenset(d) for d in eg.faces[eg.face_of[eg.outer_face]]}
        rest = restrict_embedding(eg, removed_edges=[tuple(e) for e in outer])
        assert rest.graph.m == 3
        assert rest.outer_face is not None
