"""Outerplanar layering (vertex peel) and the boundary-edge peel."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import EmbeddingError, InvariantBreach
from .graph import PASS, EmbeddedGraph, Graph, Verdict, outer_walks, restrict_embedding


@dataclass(frozen=True)
class LayerPartition:
    """Ordered vertex layers ``O_1 .. O_k`` (stored 0-based)."""

    layers: tuple

    @property
    def k(self) -> int:
        return len(self.layers)

    @cached_property
    def layer_of(self) -> dict:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def to_dict(self) -> dict:
        return {"layers": [list(layer) for layer in self.layers]}

    @classmethod
    def from_dict(cls, doc, lookup=None) -> "LayerPartition":
        conv = (lambda x: x) if lookup is None else lookup.__getitem__
        return cls(tuple(tuple(conv(v) for v in layer) for layer in doc["layers"]))


def _check_outer(eg: EmbeddedGraph) -> None:
    tails = {d[0] for d in eg.outer_darts}
    for comp in eg.graph.components():
        if len(comp) > 1 and tails.isdisjoint(comp):
            raise EmbeddingError(f"missing outer-face designation for the component of {comp[0]!r}")


def outer_boundary(eg: EmbeddedGraph):
    """Vertices and edges on the outer face walk(s) of ``eg``.

    Isolated vertices count as lying on their own outer boundary.
    """
    _check_outer(eg)
    verts, edges = set(), set()
    for walk in outer_walks(eg):
        for u, w in walk:
            verts.add(u)
            edges.add(frozenset((u, w)))
    verts.update(v for v in eg.graph.vertices if not eg.graph.adjacency[v])
    return verts, edges


def peel_layers(eg: EmbeddedGraph):
    """Repeatedly delete the outer-boundary vertices.

    Returns ``(LayerPartition, residuals)`` where ``residuals[i]`` is the
    embedded graph whose outer boundary is layer ``i``. When a deletion
    disconnects the graph each component keeps its own outer face and the
    layer index stays global.
    """
    state = eg
    layers, residuals = [], []
    while state.graph.n:
        verts, _ = outer_boundary(state)
        residuals.append(state)
        layers.append(tuple(v for v in state.graph.vertices if v in verts))
        state = restrict_embedding(state, removed_vertices=verts)
    return LayerPartition(tuple(layers)), residuals


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(g.components())


def boundary_edge_peel(eg: EmbeddedGraph) -> list:
    """Strip outer-boundary edges until the graph is acyclic.

    Returns ``[G'_1, G'_2, ..., G'_{s+1}]`` with ``G'_1 = eg`` and only the
    last entry acyclic; vertices are never removed.
    """
    if eg.graph.max_degree > 3:
        raise ValueError(f"boundary_edge_peel expects maximum degree <= 3, got {eg.graph.max_degree}")
    states = [eg]
    for _ in range(eg.graph.m + 1):
        state = states[-1]
        if is_forest(state.graph):
            return states
        _, edges = outer_boundary(state)
        states.append(restrict_embedding(state, removed_edges=edges))
    raise InvariantBreach("boundary_edge_peel", "edge peel did not reach an acyclic graph", states[-1].graph.m)


def validate_layering(g: Graph, lp: LayerPartition) -> Verdict:
    """Every edge must be inside one layer or join consecutive layers."""
    seen = set()
    for i, layer in enumerate(lp.layers):
        for v in layer:
            if v in seen:
                return Verdict(False, "vertex in more than one layer", v)
            if v not in g:
                return Verdict(False, "layer contains unknown vertex", v)
            seen.add(v)
    if len(seen) != g.n:
        missing = next(v for v in g.vertices if v not in seen)
        return Verdict(False, "vertex not covered by any layer", missing)
    where = lp.layer_of
    for u, v in g.edges():
        if abs(where[u] - where[v]) > 1:
            return Verdict(False, "edge skips a layer", (u, v))
    return PASS
