"""Simple graphs, rotation-system embeddings and embedding-aware surgery.

Dart convention, used everywhere in the package: a dart is an ordered pair
``(u, v)``; the dart following ``(u, v)`` on its face is ``(v, w)`` where ``w``
is the successor of ``u`` in the cyclic rotation of ``v``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import EmbeddingError, GraphError, NotConnectedError

Vertex = Hashable
Dart = tuple


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with an ordered vertex set.

    The vertex order doubles as the id order used for every deterministic
    tie-break in the package (``rank``).
    """

    vertices: tuple
    adjacency: Mapping[Vertex, tuple] = field(repr=False)

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]]) -> "Graph":
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            seen = set()
            dup = next(v for v in verts if v in seen or seen.add(v))
            raise GraphError(f"duplicate vertex id {dup!r}")
        nbrs: dict = {v: set() for v in verts}
        for e in edges:
            u, v = e
            if u not in index or v not in index:
                raise GraphError(f"edge {(u, v)!r} references an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {(u, v)!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = {v: tuple(sorted(nbrs[v], key=index.__getitem__)) for v in verts}
        return cls(verts, adjacency)

    @cached_property
    def _index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def rank(self, v: Vertex) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.edge_set())))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency.values()) // 2

    def neighbors(self, v: Vertex) -> tuple:
        return self.adjacency[v]

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency.values()), default=0)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._index and v in self._adjsets[u]

    @cached_property
    def _adjsets(self) -> dict:
        return {v: frozenset(a) for v, a in self.adjacency.items()}

    def edges(self) -> list:
        """Edges as ``(u, v)`` with ``rank(u) < rank(v)``, in lexicographic rank order."""
        idx = self._index
        return [(u, v) for u in self.vertices for v in self.adjacency[u] if idx[u] < idx[v]]

    def edge_set(self) -> set:
        return {frozenset(e) for e in self.edges()}

    def components(self) -> list:
        """Connected components as lists of vertices, ordered by their smallest vertex."""
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        adjacency = {v: tuple(w for w in self.adjacency[v] if w in keep) for v in verts}
        return Graph(verts, adjacency)

    def without_edges(self, removed: Iterable[Sequence[Vertex]]) -> "Graph":
        gone = {frozenset(e) for e in removed}
        adjacency = {
            v: tuple(w for w in self.adjacency[v] if frozenset((v, w)) not in gone) for v in self.vertices
        }
        return Graph(self.vertices, adjacency)

    def with_edges(self, added: Iterable[Sequence[Vertex]]) -> "Graph":
        """Return the graph with extra edges; edges already present are ignored."""
        es = self.edges()
        present = self.edge_set()
        for u, v in added:
            if frozenset((u, v)) not in present:
                present.add(frozenset((u, v)))
                es.append((u, v))
        return Graph.from_edges(self.vertices, es)


@dataclass(frozen=True)
class Verdict:
    """Pass/fail outcome of a validator; ``reason`` and ``witness`` explain a failure."""

    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def require_connected(g: Graph, what: str = "graph") -> None:
    comps = g.components()
    if len(comps) > 1:
        raise NotConnectedError(
            f"{what} must be connected; found {len(comps)} components "
            f"(e.g. {comps[0][0]!r} and {comps[1][0]!r} are not joined)"
        )


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    """A graph together with a rotation system and outer-face designation.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic order. ``outer_darts``
    holds one dart per component that should be treated as lying on the
    unbounded face; for the usual connected input this is a single dart,
    exposed as ``outer_face``.
    """

    graph: Graph
    rotation: Mapping[Vertex, tuple] = field(repr=False)
    outer_darts: tuple = ()

    def __post_init__(self):
        g = self.graph
        for v in g.vertices:
            rot = self.rotation.get(v)
            if rot is None:
                raise EmbeddingError(f"rotation missing for vertex {v!r}")
            if len(set(rot)) != len(rot):
                dup = next(w for w in rot if rot.count(w) > 1)
                raise EmbeddingError(f"dart {(v, dup)!r} appears twice in rotation of {v!r}")
            if set(rot) != set(g.adjacency[v]):
                missing = set(g.adjacency[v]) - set(rot)
                if missing:
                    raise EmbeddingError(f"dart {(v, next(iter(missing)))!r} missing from rotation of {v!r}")
                extra = next(iter(set(rot) - set(g.adjacency[v])))
                raise EmbeddingError(f"rotation of {v!r} lists non-edge dart {(v, extra)!r}")
        extra_keys = set(self.rotation) - set(g.vertices)
        if extra_keys:
            raise EmbeddingError(f"rotation given for unknown vertex {next(iter(extra_keys))!r}")
        for d in self.outer_darts:
            u, v = d
            if not g.has_edge(u, v):
                raise EmbeddingError(f"outer-face dart {tuple(d)!r} is not an edge")

    @property
    def outer_face(self):
        return self.outer_darts[0] if self.outer_darts else None

    @cached_property
    def _succ(self) -> dict:
        succ = {}
        for v, rot in self.rotation.items():
            k = len(rot)
            succ[v] = {rot[i]: rot[(i + 1) % k] for i in range(k)}
        return succ

    def succ(self, v: Vertex, u: Vertex) -> Vertex:
        """Successor of neighbour ``u`` in the rotation of ``v``."""
        return self._succ[v][u]

    def pred(self, v: Vertex, u: Vertex) -> Vertex:
        rot = self.rotation[v]
        return rot[rot.index(u) - 1]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        return (v, self._succ[v][u])

    def darts(self) -> list:
        return [(v, w) for v in self.graph.vertices for w in self.rotation[v]]

    @cached_property
    def faces(self) -> list:
        return trace_faces(self)

    @cached_property
    def face_of(self) -> dict:
        """Map dart -> index into ``faces``."""
        return {d: i for i, walk in enumerate(self.faces) for d in walk}


def trace_faces(eg: EmbeddedGraph) -> list:
    """Partition all darts of ``eg`` into closed face walks.

    Walks are lists of darts, discovered in vertex order then rotation order,
    so the output is deterministic.
    """
    seen = set()
    walks = []
    for start in eg.darts():
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = eg.next_dart(d)
        if d != start:
            raise EmbeddingError(f"face walk from {start!r} re-entered at dart {d!r}; rotation is not a permutation")
        walks.append(walk)
    return walks


@dataclass(frozen=True)
class EulerCertificate:
    ok: bool
    n: int
    m: int
    f: int

    def __bool__(self) -> bool:
        return self.ok


def euler_certify(eg: EmbeddedGraph) -> EulerCertificate:
    """Certify genus 0 via ``|V| - |E| + |F| = 2``."""
    g = eg.graph
    require_connected(g, "graph for euler_certify")
    f = len(eg.faces) if g.m else 1
    return EulerCertificate(g.n - g.m + f == 2, g.n, g.m, f)


@dataclass(frozen=True)
class ExpansionMap:
    """Correspondence between original vertices and their replacement paths."""

    forward: Mapping[Vertex, tuple]
    backward: Mapping[Vertex, Vertex]

    @classmethod
    def identity(cls, vertices: Iterable[Vertex]) -> "ExpansionMap":
        vs = list(vertices)
        return cls({v: (v,) for v in vs}, {v: v for v in vs})

    def is_identity(self) -> bool:
        return all(len(p) == 1 and p[0] == v for v, p in self.forward.items())


def path_vertex_id(v: Vertex, j: int) -> str:
    return f"{v}~{j}"


def expand_vertices(eg: EmbeddedGraph, targets=None, first: Mapping | None = None):
    """Replace every target vertex of degree d >= 4 by a path of d - 2 degree-3 vertices.

    The rotation of ``v`` is read linearly starting at ``first[v]`` (default:
    its lowest-ranked neighbour). With that order ``e1..ed`` the first path
    vertex takes ``e1, e2``, the last takes ``e(d-1), ed`` and the inner ones one
    edge each; the face at the corner ``(ed, e1)`` then runs along the whole path.
    Targets of degree <= 3 are left alone. Returns ``(expanded, ExpansionMap)``.
    """
    g = eg.graph
    first = first or {}
    if targets is None:
        targets = [v for v in g.vertices if g.degree(v) >= 4]
    targets = {v for v in targets if g.degree(v) >= 4}
    existing = set(g.vertices)

    port = {}  # port[v][u]: vertex on v's side that carries the original edge vu
    paths = {}
    for v in g.vertices:
        rot = eg.rotation[v]
        if v not in targets:
            port[v] = {u: v for u in rot}
            paths[v] = (v,)
            continue
        d = len(rot)
        start = first.get(v, min(rot, key=g.rank))
        i0 = rot.index(start)
        order = rot[i0:] + rot[:i0]
        xs = tuple(path_vertex_id(v, j) for j in range(d - 2))
        clash = existing.intersection(xs)
        if clash:
            raise GraphError(f"path vertex id {next(iter(clash))!r} collides with an existing vertex")
        paths[v] = xs
        p = {order[0]: xs[0], order[1]: xs[0], order[-2]: xs[-1], order[-1]: xs[-1]}
        for j in range(1, d - 3):
            p[order[j + 1]] = xs[j]
        port[v] = p

    vertices = [x for v in g.vertices for x in paths[v]]
    rotation = {}
    for v in g.vertices:
        xs = paths[v]
        if len(xs) == 1:
            rotation[v] = tuple(port[u][v] for u in eg.rotation[v])
            continue
        rot = eg.rotation[v]
        start = first.get(v, min(rot, key=g.rank))
        i0 = rot.index(start)
        order = rot[i0:] + rot[:i0]
        ext = [port[u][v] for u in order]
        d = len(order)
        rotation[xs[0]] = (xs[1], ext[0], ext[1])
        for j in range(1, d - 3):
            rotation[xs[j]] = (xs[j + 1], xs[j - 1], ext[j + 1])
        rotation[xs[-1]] = (ext[-1], xs[-2], ext[-2])

    edges = [(port[u][v], port[v][u]) for u, v in g.edges()]
    for xs in paths.values():
        edges.extend(zip(xs, xs[1:]))
    new_graph = Graph.from_edges(vertices, edges)
    outer = tuple((port[a][b], port[b][a]) for a, b in eg.outer_darts)
    backward = {x: v for v, xs in paths.items() for x in xs}
    return EmbeddedGraph(new_graph, rotation, outer), ExpansionMap(paths, backward)


def expand_vertex(eg: EmbeddedGraph, v: Vertex, first: Vertex | None = None):
    """Expand a single vertex; degree <= 3 yields the unchanged graph and an identity map."""
    if v not in eg.graph:
        raise GraphError(f"unknown vertex {v!r}")
    return expand_vertices(eg, [v], None if first is None else {v: first})


def contract_paths(g: Graph, m: ExpansionMap) -> Graph:
    """Identify each replacement path back to its original vertex.

    Loops and parallel edges produced by the identification are dropped.
    """
    for x in g.vertices:
        if x not in m.backward:
            raise GraphError(f"vertex {x!r} is not covered by the expansion map")
    for v, xs in m.forward.items():
        for x in xs:
            if x not in g:
                raise GraphError(f"expansion map references unknown vertex {x!r}")
        if len(xs) > 1 and not g.subgraph(xs).is_connected():
            raise GraphError(f"replacement path of {v!r} does not induce a connected subgraph")
    order = []
    seen = set()
    for x in g.vertices:
        v = m.backward[x]
        if v not in seen:
            seen.add(v)
            order.append(v)
    edges = set()
    for a, b in g.edges():
        u, v = m.backward[a], m.backward[b]
        if u != v:
            edges.add(frozenset((u, v)))
    return Graph.from_edges(order, [tuple(e) for e in edges])


def restrict_embedding(eg: EmbeddedGraph, removed_vertices=(), removed_edges=()) -> EmbeddedGraph:
    """Delete vertices/edges that touch the outer region and re-derive outer darts.

    Every deleted element is assumed to lie on, or be incident to, the outer
    face region of its component. All old faces that contain a deleted dart
    (or were outer) then merge into one region, and for each remaining
    component the new outer face is the face holding a dart whose old face
    belonged to that region.
    """
    g = eg.graph
    gone_v = set(removed_vertices)
    gone_e = {frozenset(e) for e in removed_edges}
    for v in gone_v:
        for w in g.adjacency[v]:
            gone_e.add(frozenset((v, w)))

    touched = {eg.face_of[d] for d in eg.outer_darts}
    for e in gone_e:
        a, b = tuple(e)
        touched.add(eg.face_of[(a, b)])
        touched.add(eg.face_of[(b, a)])

    keep = [v for v in g.vertices if v not in gone_v]
    rotation = {v: tuple(w for w in eg.rotation[v] if w not in gone_v and frozenset((v, w)) not in gone_e) for v in keep}
    adjacency = {v: tuple(w for w in g.adjacency[v] if w in set(rotation[v])) for v in keep}
    sub = Graph(tuple(keep), adjacency)
    partial = EmbeddedGraph(sub, rotation)

    outer = []
    for comp in sub.components():
        if len(comp) == 1 and not sub.adjacency[comp[0]]:
            continue
        cset = set(comp)
        chosen = None
        for walk in partial.faces:
            if walk[0][0] not in cset:
                continue
            if any(eg.face_of[d] in touched for d in walk):
                chosen = walk[0]
                break
        if chosen is None:
            raise EmbeddingError(f"component containing {comp[0]!r} is not adjacent to the deleted outer region")
        outer.append(chosen)
    return EmbeddedGraph(sub, rotation, tuple(outer))


def outer_walks(eg: EmbeddedGraph) -> list:
    """Outer face walks, one per component (isolated vertices yield ``[]``)."""
    return [eg.faces[eg.face_of[d]] for d in eg.outer_darts]
