"""JSON graph documents and DOT export.

Document layout::

    {"n": 4, "ids": ["a", ...]?, "edges": [[u, v], ...],
     "rotation": {"u": [w, ...], ...}?, "outer_face": [u, v]?}

Without ``ids`` the vertices are the integers ``0..n-1``.
"""
from __future__ import annotations

import json

from .errors import EmbeddingError, SchemaError
from .graph import EmbeddedGraph, Graph, euler_certify

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _uses_implicit_ids(g: Graph) -> bool:
    return all(type(v) is int and v == i for i, v in enumerate(g.vertices))


def graph_to_dict(g) -> dict:
    eg = g if isinstance(g, EmbeddedGraph) else None
    g = eg.graph if eg is not None else g
    doc: dict = {"n": g.n}
    if not _uses_implicit_ids(g):
        if not all(isinstance(v, str) for v in g.vertices):
            raise SchemaError("explicit ids must be strings", "$.ids")
        doc["ids"] = list(g.vertices)
    doc["edges"] = [[u, v] for u, v in g.edges()]
    if eg is not None:
        doc["rotation"] = {str(v): list(eg.rotation[v]) for v in g.vertices}
        if eg.outer_face is not None:
            doc["outer_face"] = list(eg.outer_face)
    return doc


def serialize_graph(g) -> str:
    return json.dumps(graph_to_dict(g))


def _expect(cond, message, path):
    if not cond:
        raise SchemaError(message, path)


def graph_from_dict(doc, *, certify: bool = True):
    """Build a ``Graph`` (or ``EmbeddedGraph`` when a rotation is present)."""
    _expect(isinstance(doc, dict), "document must be an object", "$")
    unknown = set(doc) - {"n", "ids", "edges", "rotation", "outer_face"}
    if unknown:
        raise SchemaError(f"unknown field {sorted(unknown)[0]!r}", "$")
    n = doc.get("n")
    _expect(type(n) is int and n >= 0, "n must be a non-negative integer", "$.n")

    if "ids" in doc:
        ids = doc["ids"]
        _expect(isinstance(ids, list) and len(ids) == n, f"ids must be a list of length n={n}", "$.ids")
        for i, v in enumerate(ids):
            _expect(isinstance(v, str), "id must be a string", f"$.ids[{i}]")
        _expect(len(set(ids)) == n, "ids must be unique", "$.ids")
        vertices = list(ids)
        lookup = {v: v for v in ids}
    else:
        vertices = list(range(n))
        lookup = {i: i for i in vertices}

    def vertex(x, path):
        _expect(type(x) is not bool and x in lookup, f"unknown vertex {x!r}", path)
        return lookup[x]

    edges_raw = doc.get("edges")
    _expect(isinstance(edges_raw, list), "edges must be a list", "$.edges")
    edges = []
    seen = set()
    for i, e in enumerate(edges_raw):
        path = f"$.edges[{i}]"
        _expect(isinstance(e, list) and len(e) == 2, "edge must be a pair", path)
        u, v = vertex(e[0], path + "[0]"), vertex(e[1], path + "[1]")
        _expect(u != v, f"self-loop at {u!r}", path)
        key = frozenset((u, v))
        _expect(key not in seen, f"duplicate edge [{u!r}, {v!r}]", path)
        seen.add(key)
        edges.append((u, v))
    g = Graph.from_edges(vertices, edges)
    if "rotation" not in doc:
        _expect("outer_face" not in doc, "outer_face requires a rotation", "$.outer_face")
        return g

    rot_raw = doc["rotation"]
    _expect(isinstance(rot_raw, dict), "rotation must be an object", "$.rotation")
    key_lookup = {str(v): v for v in vertices}
    rotation = {}
    for k, nbrs in rot_raw.items():
        path = f"$.rotation[{k!r}]"
        _expect(k in key_lookup, f"unknown vertex key {k!r}", path)
        _expect(isinstance(nbrs, list), "rotation entry must be a list", path)
        rotation[key_lookup[k]] = tuple(vertex(x, f"{path}[{j}]") for j, x in enumerate(nbrs))
    for v in vertices:
        if v not in rotation and not g.adjacency[v]:
            rotation[v] = ()
    outer = ()
    if "outer_face" in doc:
        of = doc["outer_face"]
        _expect(isinstance(of, list) and len(of) == 2, "outer_face must be a dart [u, v]", "$.outer_face")
        outer = ((vertex(of[0], "$.outer_face[0]"), vertex(of[1], "$.outer_face[1]")),)
    try:
        eg = EmbeddedGraph(g, rotation, outer)
    except EmbeddingError as exc:
        raise SchemaError(str(exc), "$.rotation") from exc
    if certify and g.is_connected():
        cert = euler_certify(eg)
        if not cert:
            raise EmbeddingError(
                f"rotation is not planar: V - E + F = {cert.n} - {cert.m} + {cert.f} != 2"
            )
    return eg


def parse_graph(text: str, *, certify: bool = True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(doc, certify=certify)


def to_dot(g: Graph, name: str = "G", cover=None) -> str:
    """Render ``g`` in DOT; ``cover`` (ordered list of vertex sets) colours vertices by block."""
    block = {}
    if cover is not None:
        for i, c in enumerate(cover):
            for v in c:
                block[v] = i
    lines = [f"graph {json.dumps(name)} {{"]
    for v in g.vertices:
        attrs = ""
        if v in block:
            i = block[v]
            attrs = f' [cover={i}, style=filled, fillcolor="{_PALETTE[i % len(_PALETTE)]}"]'
        lines.append(f"  {json.dumps(str(v))}{attrs};")
    for u, v in g.edges():
        lines.append(f"  {json.dumps(str(u))} -- {json.dumps(str(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
