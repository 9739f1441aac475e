"""Seeded embedded planar graphs and named fixtures."""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import EmbeddedGraph, Graph


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    edge_keep_ratio: float | Fraction = 1.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not 0 < self.edge_keep_ratio <= 1:
            raise ValueError(f"edge_keep_ratio must lie in (0, 1], got {self.edge_keep_ratio!r}")


def _embedded(n, rotation, outer) -> EmbeddedGraph:
    edges = [(u, w) for u in range(n) for w in rotation[u] if u < w]
    g = Graph.from_edges(range(n), edges)
    rot = {v: tuple(rotation[v]) for v in range(n)}
    return EmbeddedGraph(g, rot, (tuple(outer),) if outer is not None else ())


def _is_bridge(rotation, u, v) -> bool:
    seen = {u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in rotation[a]:
            if (a, b) in ((u, v), (v, u)) or b in seen:
                continue
            if b == v:
                return False
            seen.add(b)
            queue.append(b)
    return True


def random_planar(spec: GenSpec) -> EmbeddedGraph:
    """Grow a random triangulation by face insertion, then thin it out.

    Each new vertex goes into a uniformly chosen face (outer face included)
    and is joined to its three corners. Edges are then visited in a seeded
    random order and deleted, skipping bridges, until about
    ``edge_keep_ratio`` of them remain.
    """
    n = spec.n
    rng = random.Random(spec.seed)
    if n == 1:
        return _embedded(1, {0: []}, None)
    if n == 2:
        return _embedded(2, {0: [1], 1: [0]}, (0, 1))

    rotation = {0: [1, 2], 1: [0, 2], 2: [0, 1]}
    faces = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        for at, after in ((b, a), (c, b), (a, c)):
            rot = rotation[at]
            rot.insert(rot.index(after) + 1, x)
        rotation[x] = [a, c, b]
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))

    outer = (0, 1)
    edges = [(u, w) for u in range(n) for w in sorted(rotation[u]) if u < w]
    m = len(edges)
    keep = max(n - 1, math.ceil(spec.edge_keep_ratio * m))
    if keep < m:
        rng.shuffle(edges)
        for u, w in edges:
            if m <= keep:
                break
            if _is_bridge(rotation, u, w):
                continue
            if outer in ((u, w), (w, u)):
                a, b = outer
                ra = rotation[a]
                outer = (ra[ra.index(b) - 1], a)
            rotation[u].remove(w)
            rotation[w].remove(u)
            m -= 1
    return _embedded(n, rotation, outer)


def straight_line_embedding(coords, edges) -> EmbeddedGraph:
    """Embed a planar straight-line drawing; vertices are ``0..len(coords)-1``.

    Rotations are counter-clockwise angle orders. The outer face is the one
    whose walk has the largest signed area (inner faces come out clockwise
    under the dart convention).
    """
    n = len(coords)
    nbrs = {v: [] for v in range(n)}
    for u, w in edges:
        nbrs[u].append(w)
        nbrs[w].append(u)

    def angle(v, w):
        (x0, y0), (x1, y1) = coords[v], coords[w]
        return math.atan2(y1 - y0, x1 - x0)

    rotation = {v: sorted(nbrs[v], key=lambda w: angle(v, w)) for v in range(n)}
    eg = _embedded(n, rotation, None)
    if not edges:
        return eg

    def area(walk):
        return sum(
            coords[u][0] * coords[w][1] - coords[w][0] * coords[u][1] for u, w in walk
        ) / 2

    outer_walk = max(eg.faces, key=area)
    return EmbeddedGraph(eg.graph, eg.rotation, (outer_walk[0],))


def _circle(m, r=1.0, phase=0.0):
    return [(r * math.cos(phase + 2 * math.pi * j / m), r * math.sin(phase + 2 * math.pi * j / m)) for j in range(m)]


def cycle(m: int) -> EmbeddedGraph:
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    return straight_line_embedding(_circle(m), [(j, (j + 1) % m) for j in range(m)])


def path(m: int) -> EmbeddedGraph:
    if m < 1:
        raise ValueError("path needs m >= 1")
    return straight_line_embedding([(float(j), 0.0) for j in range(m)], [(j, j + 1) for j in range(m - 1)])


def wheel(m: int) -> EmbeddedGraph:
    """Rim vertices ``0..m-1`` and hub ``m``."""
    if m < 3:
        raise ValueError("wheel needs m >= 3 rim vertices")
    coords = _circle(m) + [(0.0, 0.0)]
    edges = [(j, (j + 1) % m) for j in range(m)] + [(j, m) for j in range(m)]
    return straight_line_embedding(coords, edges)


def grid(a: int, b: int) -> EmbeddedGraph:
    if a < 1 or b < 1:
        raise ValueError("grid needs positive dimensions")
    coords = [(float(c), float(r)) for r in range(a) for c in range(b)]
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return straight_line_embedding(coords, edges)


def nested_cycles(k: int, m: int) -> EmbeddedGraph:
    """``k`` concentric ``m``-cycles joined by radial spokes; ring 0 is outermost."""
    if k < 1 or m < 3:
        raise ValueError("nested_cycles needs k >= 1 and m >= 3")
    coords = []
    for i in range(k):
        coords.extend(_circle(m, r=float(k - i)))
    edges = []
    for i in range(k):
        for j in range(m):
            edges.append((i * m + j, i * m + (j + 1) % m))
            if i + 1 < k:
                edges.append((i * m + j, (i + 1) * m + j))
    return straight_line_embedding(coords, edges)


def complete(m: int) -> EmbeddedGraph:
    if not 1 <= m <= 4:
        raise ValueError("complete graphs are planar only for m <= 4")
    coords = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, 0.4)][:m]
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return straight_line_embedding(coords, edges)


FIXTURES = {
    "grid": (grid, 2),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "nested_cycles": (nested_cycles, 2),
    "path": (path, 1),
    "complete": (complete, 1),
}


def fixture(name: str, *params: int) -> EmbeddedGraph:
    try:
        builder, arity = FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    if len(params) != arity:
        raise ValueError(f"fixture {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def parse_fixture(text: str) -> EmbeddedGraph:
    """Build a fixture from ``"name:p1,p2"`` (``x`` is accepted as separator too)."""
    name, _, args = text.partition(":")
    params = [int(p) for p in args.replace("x", ",").split(",") if p] if args else []
    return fixture(name, *params)


def fixture_catalog() -> dict:
    """The named fixtures exercised by the acceptance corpus."""
    specs = [
        ("path", 1), ("path", 2), ("path", 7),
        ("cycle", 3), ("cycle", 5), ("cycle", 8),
        ("wheel", 3), ("wheel", 5), ("wheel", 6), ("wheel", 9),
        ("grid", 1, 4), ("grid", 2, 2), ("grid", 3, 3), ("grid", 4, 6), ("grid", 7, 7),
        ("nested_cycles", 1, 5), ("nested_cycles", 2, 3), ("nested_cycles", 3, 4),
        ("nested_cycles", 4, 6), ("nested_cycles", 5, 3),
        ("complete", 1), ("complete", 2), ("complete", 3), ("complete", 4),
    ]
    return {f"{s[0]}:{','.join(map(str, s[1:]))}": fixture(*s) for s in specs}
