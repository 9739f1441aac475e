"""Spanning forests with remember numbers and tree decompositions built from them.

A decomposition relative to a spanning forest ``T`` has one node per vertex,
``("v", x)``, and one subdivision node per tree edge, ``("e", a, b)`` with
``rank(a) < rank(b)``. For every non-tree edge ``ab`` the lower-ranked
endpoint ``a`` is added to every node on the detour of ``ab``.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .errors import GraphError, InvariantBreach
from .graph import PASS, EmbeddedGraph, Graph, Verdict
from .peel import LayerPartition, boundary_edge_peel, outer_boundary


def vnode(x):
    return ("v", x)


def enode(g: Graph, a, b):
    return ("e", a, b) if g.rank(a) < g.rank(b) else ("e", b, a)


@dataclass(frozen=True, eq=False)
class SpanningForestAnnotated:
    """A maximal spanning forest of ``host`` with edge/vertex remember numbers.

    ``er`` is keyed by ``frozenset`` edges and holds 0 for non-tree edges.
    """

    host: Graph
    forest: Graph
    er: Mapping = field(repr=False)
    vr: Mapping = field(repr=False)
    parent: Mapping = field(repr=False)
    depth: Mapping = field(repr=False)
    non_tree: tuple = field(repr=False)

    @property
    def er_max(self) -> int:
        return max((self.er[frozenset(e)] for e in self.forest.edges()), default=0)

    @property
    def vr_max(self) -> int:
        return max(self.vr.values(), default=0)

    def path(self, a, b) -> list:
        """Vertices of the unique forest path from ``a`` to ``b``."""
        left, right = [a], [b]
        x, y = a, b
        while self.depth[x] > self.depth[y]:
            x = self.parent[x]
            left.append(x)
        while self.depth[y] > self.depth[x]:
            y = self.parent[y]
            right.append(y)
        while x != y:
            if self.parent[x] is None:
                raise GraphError(f"{a!r} and {b!r} lie in different components of the forest")
            x, y = self.parent[x], self.parent[y]
            left.append(x)
            right.append(y)
        return left + right[-2::-1]


def annotate_forest(host: Graph, forest: Graph, roots=()) -> SpanningForestAnnotated:
    """Attach parent pointers and remember numbers to a given spanning forest."""
    if set(forest.vertices) != set(host.vertices):
        raise GraphError("forest must span every host vertex")
    for u, v in forest.edges():
        if not host.has_edge(u, v):
            raise GraphError(f"forest edge {(u, v)!r} is not a host edge")
    parent, depth = {}, {}
    order = list(roots) + [v for v in host.vertices if v not in set(roots)]
    for r in order:
        if r in parent:
            continue
        parent[r], depth[r] = None, 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in forest.adjacency[u]:
                if w in parent:
                    if parent[u] != w:
                        raise GraphError(f"forest contains a cycle through edge {(u, w)!r}")
                    continue
                parent[w], depth[w] = u, depth[u] + 1
                queue.append(w)
    host_comps = len(host.components())
    if forest.n - forest.m != host_comps:
        raise GraphError("forest is not maximal: it misses a spanning tree of some component")

    er = {frozenset(e): 0 for e in host.edges()}
    vr = {v: 0 for v in host.vertices}
    non_tree = tuple(e for e in host.edges() if not forest.has_edge(*e))
    partial = SpanningForestAnnotated(host, forest, er, vr, parent, depth, non_tree)
    for a, b in non_tree:
        p = partial.path(a, b)
        for x in p:
            vr[x] += 1
        for x, y in zip(p, p[1:]):
            er[frozenset((x, y))] += 1
    return partial


def maximal_spanning_forest(g: Graph, roots=()) -> SpanningForestAnnotated:
    """BFS spanning forest, started from ``roots`` first and then in vertex order."""
    seen = set()
    edges = []
    order = list(roots) + list(g.vertices)
    for r in order:
        if r in seen:
            continue
        seen.add(r)
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    edges.append((u, w))
                    queue.append(w)
    return annotate_forest(g, Graph.from_edges(g.vertices, edges), roots)


def detour(f: SpanningForestAnnotated, e) -> list:
    a, b = e
    return f.path(a, b)


@dataclass(frozen=True, eq=False)
class TreeDecomposition:
    """Bags hung on the nodes of a forest.

    ``counts`` optionally records, per node, the bag size counted with
    multiplicity (one entry per fundamental cycle through the node).
    """

    tree: Graph
    bags: Mapping = field(repr=False)
    counts: Mapping | None = field(default=None, repr=False)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @cached_property
    def occurrences(self) -> dict:
        """Vertex -> set of nodes whose bag holds it."""
        occ: dict = {}
        for node in self.tree.vertices:
            for x in self.bags[node]:
                occ.setdefault(x, set()).add(node)
        return occ

    def to_dict(self) -> dict:
        ids = {node: i for i, node in enumerate(self.tree.vertices)}
        nodes = []
        for node in self.tree.vertices:
            entry = {"id": ids[node], "bag": sorted(self.bags[node], key=_vertex_key)}
            if isinstance(node, tuple) and node and node[0] in ("v", "e"):
                entry["kind"] = "vertex" if node[0] == "v" else "edge"
                entry["of"] = list(node[1:])
            nodes.append(entry)
        return {
            "nodes": nodes,
            "tree_edges": [[ids[a], ids[b]] for a, b in self.tree.edges()],
            "width": self.width,
        }

    @classmethod
    def from_dict(cls, doc, lookup=None) -> "TreeDecomposition":
        conv = (lambda x: x) if lookup is None else lookup.__getitem__
        nodes = [n["id"] for n in doc["nodes"]]
        bags = {n["id"]: frozenset(conv(x) for x in n["bag"]) for n in doc["nodes"]}
        tree = Graph.from_edges(nodes, [tuple(e) for e in doc["tree_edges"]])
        return cls(tree, bags)


def _vertex_key(x):
    return (0, x, "") if isinstance(x, int) else (1, 0, str(x))


def validate_treedec(g: Graph, td: TreeDecomposition) -> Verdict:
    """Check the tree shape and the three decomposition axioms."""
    t = td.tree
    if t.m != t.n - len(t.components()):
        return Verdict(False, "tree: decomposition tree contains a cycle")
    union = set()
    for node in t.vertices:
        union |= td.bags[node]
    stray = union - set(g.vertices)
    if stray:
        return Verdict(False, "coverage: bag holds a vertex outside the graph", next(iter(stray)))
    missing = [v for v in g.vertices if v not in union]
    if missing:
        return Verdict(False, "coverage: vertex in no bag (axiom 1)", missing[0])
    occ = td.occurrences
    for u, v in g.edges():
        if occ[u].isdisjoint(occ[v]):
            return Verdict(False, "edge: no bag holds both endpoints (axiom 2)", (u, v))
    for v in g.vertices:
        nodes = occ[v]
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in t.adjacency[a]:
                if b in nodes and b not in seen:
                    seen.add(b)
                    queue.append(b)
        if len(seen) != len(nodes):
            return Verdict(False, "subtree: nodes holding vertex are disconnected (axiom 3)", v)
    return PASS


def _skeleton(g: Graph, forest: Graph):
    nodes = [vnode(x) for x in g.vertices] + [enode(g, a, b) for a, b in forest.edges()]
    tree_edges = []
    for a, b in forest.edges():
        e = enode(g, a, b)
        tree_edges += [(vnode(a), e), (e, vnode(b))]
    return nodes, tree_edges


def _detour_nodes(g: Graph, f: SpanningForestAnnotated, a, b) -> list:
    p = f.path(a, b)
    return [vnode(x) for x in p] + [enode(g, x, y) for x, y in zip(p, p[1:])]


def _low_end(g: Graph, a, b):
    return a if g.rank(a) < g.rank(b) else b


def bodlaender_decomposition(g: Graph, f: SpanningForestAnnotated) -> TreeDecomposition:
    """Decomposition of ``g`` relative to the spanning forest ``f``.

    Width is at most ``max(vr(G,T), er(G,T) + 1)``.
    """
    if f.host != g:
        raise GraphError("spanning forest was built for a different graph")
    nodes, tree_edges = _skeleton(g, f.forest)
    bags = {vnode(x): {x} for x in g.vertices}
    for a, b in f.forest.edges():
        bags[enode(g, a, b)] = {a, b}
    counts = Counter({node: len(bag) for node, bag in bags.items()})
    for a, b in f.non_tree:
        keep = _low_end(g, a, b)
        for node in _detour_nodes(g, f, a, b):
            bags[node].add(keep)
            counts[node] += 1
    tree = Graph.from_edges(nodes, tree_edges)
    return TreeDecomposition(tree, {k: frozenset(v) for k, v in bags.items()}, dict(counts))


def _boundary_split(g: EmbeddedGraph):
    verts, edges = outer_boundary(g)
    h = g.graph.without_edges(tuple(e) for e in edges)
    return verts, edges, h


def extend_forest(g: EmbeddedGraph, h_forest: SpanningForestAnnotated) -> SpanningForestAnnotated:
    """Grow a spanning forest of ``H = g - outer boundary edges`` into one of ``g``.

    Only outer-boundary edges are added. Remember numbers are recomputed from
    scratch and checked against the allowed growth: at most +2 per tree edge
    and at most ``+max_degree(g)`` per vertex.
    """
    _, boundary, h = _boundary_split(g)
    host = g.graph
    if h_forest.host != h:
        raise GraphError("h_forest must be a spanning forest of g minus its outer boundary edges")
    comp = {v: v for v in host.vertices}

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a, b in h_forest.forest.edges():
        comp[find(a)] = find(b)
    edges = list(h_forest.forest.edges())
    for a, b in host.edges():
        if frozenset((a, b)) in boundary and find(a) != find(b):
            comp[find(a)] = find(b)
            edges.append((a, b))
    roots = [r for r, p in h_forest.parent.items() if p is None]
    t = annotate_forest(host, Graph.from_edges(host.vertices, edges), roots)

    delta = host.max_degree
    for a, b in t.forest.edges():
        e = frozenset((a, b))
        before = h_forest.er.get(e, 0)
        if t.er[e] > before + 2:
            raise InvariantBreach("extend_forest", f"edge remember number grew {before} -> {t.er[e]}", (a, b))
    for v in host.vertices:
        if t.vr[v] > h_forest.vr[v] + delta:
            raise InvariantBreach(
                "extend_forest", f"vertex remember number grew {h_forest.vr[v]} -> {t.vr[v]} (max degree {delta})", v
            )
    return t


def extend_decomposition(g: EmbeddedGraph, t: SpanningForestAnnotated, prior: TreeDecomposition) -> TreeDecomposition:
    """Extend the decomposition of ``H`` (relative to ``T'``) to one of ``g`` relative to ``t``.

    New edge nodes get ``{a, b}``; every bag then receives the low endpoint of
    each fundamental edge that lies on the outer boundary, along its detour.
    """
    host = g.graph
    outer, boundary, _ = _boundary_split(g)
    nodes, tree_edges = _skeleton(host, t.forest)
    bags = {}
    counts = Counter()
    prior_counts = prior.counts or {}
    for node in nodes:
        if node in prior.bags:
            bags[node] = set(prior.bags[node])
            counts[node] = prior_counts.get(node, len(prior.bags[node]))
        elif node[0] == "e":
            bags[node] = {node[1], node[2]}
            counts[node] = 2
        else:
            raise InvariantBreach("extend_decomposition", "prior decomposition lacks a vertex node", node)
    growth = Counter()
    for a, b in t.non_tree:
        if frozenset((a, b)) not in boundary:
            continue
        keep = _low_end(host, a, b)
        for node in _detour_nodes(host, t, a, b):
            bags[node].add(keep)
            counts[node] += 1
            growth[node] += 1

    delta = host.max_degree
    for node, extra in growth.items():
        limit = delta if node[0] == "v" else 2
        if extra > limit:
            raise InvariantBreach("extend_decomposition", f"bag grew by {extra} > {limit}", node)
        old = prior.bags.get(node, frozenset(node[1:]))
        if not (bags[node] - old) <= outer:
            raise InvariantBreach("extend_decomposition", "bag grew by a vertex off the outer boundary", node)
    td = TreeDecomposition(Graph.from_edges(nodes, tree_edges), {k: frozenset(v) for k, v in bags.items()}, dict(counts))
    verdict = validate_treedec(host, td)
    if not verdict:
        raise InvariantBreach("extend_decomposition", verdict.reason, verdict.witness)
    return td


@dataclass(frozen=True)
class LayerStep:
    """One outward step of the layered construction."""

    graph: EmbeddedGraph
    forest: SpanningForestAnnotated
    decomposition: TreeDecomposition
    er_growth: int
    vr_growth: int


def layered_steps(eg_expanded: EmbeddedGraph):
    """Yield the construction from the acyclic core outward (core first)."""
    states = boundary_edge_peel(eg_expanded)
    core = states[-1]
    forest = annotate_forest(core.graph, core.graph)
    td = bodlaender_decomposition(core.graph, forest)
    yield LayerStep(core, forest, td, 0, 0)
    for state in reversed(states[:-1]):
        grown = extend_forest(state, forest)
        er_growth = max((grown.er[frozenset(e)] - forest.er.get(frozenset(e), 0) for e in grown.forest.edges()), default=0)
        vr_growth = max((grown.vr[v] - forest.vr[v] for v in grown.host.vertices), default=0)
        td = extend_decomposition(state, grown, td)
        forest = grown
        yield LayerStep(state, forest, td, er_growth, vr_growth)


def layer_bag_counts(td: TreeDecomposition, lp: LayerPartition):
    """Largest ``|bag ∩ layer|`` together with a witnessing ``(node, layer index)``."""
    where = lp.layer_of
    best, witness = 0, None
    for node in td.tree.vertices:
        c = Counter(where[x] for x in td.bags[node])
        if c:
            i, k = max(c.items(), key=lambda kv: (kv[1], -kv[0]))
            if k > best:
                best, witness = k, (node, i)
    return best, witness


LAYER_BAG_BOUND = 4


def layered_decomposition(eg_expanded: EmbeddedGraph, layers: LayerPartition) -> TreeDecomposition:
    """Decomposition of a max-degree-3 plane graph meeting every layer in at most 4 vertices per bag."""
    if eg_expanded.graph.max_degree > 3:
        raise ValueError("layered_decomposition expects maximum degree <= 3")
    step = None
    for step in layered_steps(eg_expanded):
        pass
    td = step.decomposition
    best, witness = layer_bag_counts(td, layers)
    if best > LAYER_BAG_BOUND:
        raise InvariantBreach("layered_decomposition", f"bag meets a layer in {best} > {LAYER_BAG_BOUND} vertices", witness)
    return td


def contract_decomposition(td: TreeDecomposition, m) -> TreeDecomposition:
    """Replace every path vertex in every bag by the original vertex it came from."""
    bags = {node: frozenset(m.backward[x] for x in bag) for node, bag in td.bags.items()}
    return TreeDecomposition(td.tree, bags)


def elimination_decomposition(g: Graph, order) -> TreeDecomposition:
    """Decomposition read off an elimination ordering.

    Node ``v`` gets bag ``{v} ∪`` (its later neighbours in the fill-in graph)
    and hangs below its earliest later neighbour.
    """
    pos = {v: i for i, v in enumerate(order)}
    if set(pos) != set(g.vertices):
        raise GraphError("elimination order must list every vertex exactly once")
    nbrs = {v: set(g.adjacency[v]) for v in g.vertices}
    bags, tree_edges = {}, []
    for v in order:
        later = {w for w in nbrs[v] if pos[w] > pos[v]}
        for a in later:
            nbrs[a] |= later - {a}
        bags[("x", v)] = frozenset(later | {v})
        if later:
            tree_edges.append((("x", v), ("x", min(later, key=pos.__getitem__))))
    tree = Graph.from_edges([("x", v) for v in order], tree_edges)
    return TreeDecomposition(tree, bags)
