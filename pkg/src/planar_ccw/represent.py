"""Chordal-times-bounded-cover-width representations.

Given a layering ``L`` and a tree decomposition, ``G2`` is the intersection
graph of the vertices' bag subtrees (chordal) and ``G1`` adds, inside every
layer, a clique on each colour class of ``G2[L_i]``. Then ``G = G1 ∩ G2`` and
listing the colour classes layer by layer gives a clique cover of ``G1`` of
width at most ``2t* - 1``, where ``t*`` is the largest bag-layer overlap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .cover import OrderedCliqueCover, cover_width
from .errors import EmbeddingError, GraphError, InvariantBreach
from .graph import EmbeddedGraph, Graph, euler_certify, expand_vertices, outer_walks, require_connected
from .io import graph_from_dict, graph_to_dict
from .peel import LayerPartition, peel_layers, validate_layering
from .treedec import (
    TreeDecomposition,
    contract_decomposition,
    layer_bag_counts,
    layered_decomposition,
    validate_treedec,
)
from .verify import certify, maximum_cardinality_search

PLANAR_WIDTH_BOUND = 7


@dataclass(frozen=True)
class SubtreeModel:
    """For each vertex, the decomposition-tree nodes whose bag contains it."""

    nodes: Mapping

    def __getitem__(self, v):
        return self.nodes[v]


@dataclass(frozen=True, eq=False)
class RepresentationPair:
    graph: Graph
    g1: Graph
    cover: OrderedCliqueCover
    g2: Graph
    model: SubtreeModel = field(repr=False)
    t_star: int
    td: TreeDecomposition = field(repr=False)
    layers: LayerPartition = field(repr=False)
    report: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "g1": graph_to_dict(self.g1),
            "clique_cover": {
                "order": [sorted(c, key=self.graph.rank) for c in self.cover.cliques],
                "width": cover_width(self.cover),
            },
            "g2": graph_to_dict(self.g2),
            "tree_decomposition": self.td.to_dict(),
            "layers": self.layers.to_dict(),
            "t_star": self.t_star,
            "report": self.report,
        }

    @classmethod
    def from_dict(cls, doc, graph: Graph) -> "RepresentationPair":
        """Rebuild a pair (without re-verifying it) for the graph it claims to represent."""
        lookup = {v: v for v in graph.vertices}
        g1 = graph_from_dict(doc["g1"])
        g2 = graph_from_dict(doc["g2"])
        cover = OrderedCliqueCover(tuple(frozenset(lookup[v] for v in c) for c in doc["clique_cover"]["order"]), g1)
        td = TreeDecomposition.from_dict(doc["tree_decomposition"], lookup)
        model = SubtreeModel({v: frozenset(n for n in td.tree.vertices if v in td.bags[n]) for v in graph.vertices})
        return cls(graph, g1, cover, g2, model, doc["t_star"], td, LayerPartition.from_dict(doc["layers"], lookup),
                   doc.get("report", {}))


def chordal_from_subtrees(td: TreeDecomposition, vertices=None):
    """Intersection graph of the bag subtrees, plus the subtree model itself."""
    occ = td.occurrences
    if vertices is None:
        vertices = list(occ)
    for v in vertices:
        nodes = occ.get(v, set())
        if not nodes or not td.tree.subgraph(nodes).is_connected():
            raise GraphError(f"bags holding {v!r} do not form a subtree; decomposition is invalid")
    edges = set()
    for node in td.tree.vertices:
        for a, b in itertools.combinations(td.bags[node], 2):
            edges.add(frozenset((a, b)))
    g2 = Graph.from_edges(vertices, [tuple(e) for e in edges])
    model = SubtreeModel({v: frozenset(occ[v]) for v in vertices})
    return g2, model


def compute_t_star(td: TreeDecomposition, lp: LayerPartition) -> int:
    return layer_bag_counts(td, lp)[0]


def layer_coloring(g2: Graph, layer, budget: int) -> list:
    """Greedy colouring of ``g2[layer]`` in maximum-cardinality-search order.

    The MCS order reverses a perfect elimination ordering, so every vertex's
    already-coloured neighbours form a clique and at most ``omega`` colours
    are used. Classes come back sorted, ordered by their lowest vertex.
    """
    sub = g2.subgraph(layer)
    order = maximum_cardinality_search(sub)
    colour = {}
    for v in order:
        used = {colour[w] for w in sub.adjacency[v] if w in colour}
        colour[v] = next(c for c in itertools.count() if c not in used)
    classes: dict = {}
    for v in sub.vertices:
        classes.setdefault(colour[v], []).append(v)
    result = sorted(classes.values(), key=lambda cls_: g2.rank(cls_[0]))
    if len(result) > budget:
        raise InvariantBreach("layer_coloring", f"{len(result)} colour classes exceed budget {budget}", tuple(layer))
    return result


def build_g1(g: Graph, lp: LayerPartition, colorings, t_star: int, g2: Graph | None = None):
    """Add a clique on every colour class; cover = layer blocks padded to ``t_star`` slots."""
    verdict = validate_layering(g, lp)
    if not verdict:
        raise InvariantBreach("build_g1", verdict.reason, verdict.witness)
    extra = []
    cliques = []
    for layer, classes in zip(lp.layers, colorings):
        flat = [v for c in classes for v in c]
        if len(flat) != len(set(flat)) or set(flat) != set(layer):
            raise InvariantBreach("build_g1", "colour classes do not partition the layer", tuple(layer))
        if len(classes) > t_star:
            raise InvariantBreach("build_g1", f"layer uses {len(classes)} > t* = {t_star} classes", tuple(layer))
        for c in classes:
            for a, b in itertools.combinations(c, 2):
                if g2 is not None and g2.has_edge(a, b):
                    raise InvariantBreach("build_g1", "colour class is not independent in G2", (a, b))
                extra.append((a, b))
        cliques.extend(frozenset(c) for c in classes)
        cliques.extend(frozenset() for _ in range(t_star - len(classes)))
    g1 = g.with_edges(extra)
    return g1, OrderedCliqueCover(tuple(cliques), g1)


def universal_representation(g: Graph, td: TreeDecomposition, lp: LayerPartition, bound: int | None = None):
    """``G = G1 ∩ G2`` with ``G2`` chordal and ``W(cover) <= 2t* - 1``; all claims are re-certified."""
    verdict = validate_treedec(g, td)
    if not verdict:
        raise InvariantBreach("universal_representation", f"invalid tree decomposition: {verdict.reason}", verdict.witness)
    g2, model = chordal_from_subtrees(td, g.vertices)
    t_star = compute_t_star(td, lp)
    colorings = [layer_coloring(g2, layer, t_star) for layer in lp.layers]
    g1, cover = build_g1(g, lp, colorings, t_star, g2)
    if bound is None:
        bound = 2 * t_star - 1
    pair = RepresentationPair(g, g1, cover, g2, model, t_star, td, lp)
    report = certify(pair, g, lp, bound)
    pair.report.update(report)
    if report["violations"]:
        raise InvariantBreach("universal_representation", "; ".join(report["violations"]), report)
    return pair


def outer_corner_starts(eg: EmbeddedGraph, residuals) -> dict:
    """For each vertex of degree >= 4, the rotation entry at which to start its expansion path.

    The cut is placed at a corner where the vertex meets the outer face of the
    residual graph it is peeled from, so the whole replacement path lands on
    that same outer face.
    """
    starts = {}
    for state in residuals:
        for walk in outer_walks(state):
            for w, v in walk:
                if v not in starts and eg.graph.degree(v) >= 4:
                    starts[v] = eg.succ(v, w)
    return starts


def planar_representation(eg: EmbeddedGraph) -> RepresentationPair:
    """Full planar pipeline; the resulting cover of ``G1`` has width at most 7."""
    g = eg.graph
    require_connected(g, "input graph")
    cert = euler_certify(eg)
    if not cert:
        raise EmbeddingError(f"rotation system is not planar: {cert.n} - {cert.m} + {cert.f} != 2")

    lp, residuals = peel_layers(eg)
    expanded, mapping = expand_vertices(eg, first=outer_corner_starts(eg, residuals))
    lp_expanded, _ = peel_layers(expanded)
    if lp_expanded.k != lp.k:
        raise InvariantBreach("expand", f"expansion changed peel depth {lp.k} -> {lp_expanded.k}")
    for i, layer in enumerate(lp.layers):
        image = {x for v in layer for x in mapping.forward[v]}
        if image != set(lp_expanded.layers[i]):
            stray = next(iter(image ^ set(lp_expanded.layers[i])))
            raise InvariantBreach("expand", f"replacement paths of layer {i + 1} left that layer", stray)

    td_expanded = layered_decomposition(expanded, lp_expanded)
    td = contract_decomposition(td_expanded, mapping)
    verdict = validate_treedec(g, td)
    if not verdict:
        raise InvariantBreach("contract_decomposition", verdict.reason, verdict.witness)
    return universal_representation(g, td, lp, bound=PLANAR_WIDTH_BOUND)


__all__ = [
    "SubtreeModel", "RepresentationPair", "chordal_from_subtrees", "compute_t_star", "layer_coloring",
    "build_g1", "universal_representation", "planar_representation", "outer_corner_starts",
    "PLANAR_WIDTH_BOUND",
]
