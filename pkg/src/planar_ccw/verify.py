"""Recognizers and brute-force oracles that check the pipeline's claims independently."""
from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass

from .cover import CoverError, OrderedCliqueCover, cover_width
from .errors import GraphError, OracleLimitError
from .graph import PASS, Graph, Verdict

DEFAULT_ORACLE_LIMIT = int(os.environ.get("PLANAR_CCW_ORACLE_LIMIT", "8"))

__all__ = [
    "ChordalityResult", "is_chordal", "maximum_cardinality_search", "find_chordless_cycle",
    "naive_chordless_cycle", "intersection_equals", "cover_width", "brute_ccw",
    "brute_bandwidth", "certify", "DEFAULT_ORACLE_LIMIT",
]


@dataclass(frozen=True)
class ChordalityResult:
    ok: bool
    ordering: tuple = ()
    cycle: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def maximum_cardinality_search(g: Graph) -> list:
    """Visit order of MCS; ties go to the lowest-ranked vertex. Its reverse is a PEO iff g is chordal."""
    weight = {v: 0 for v in g.vertices}
    visited = set()
    order = []
    for _ in range(g.n):
        v = max((u for u in g.vertices if u not in visited), key=lambda u: (weight[u], -g.rank(u)))
        visited.add(v)
        order.append(v)
        for w in g.adjacency[v]:
            if w not in visited:
                weight[w] += 1
    return order


def _is_peo(g: Graph, peo) -> tuple:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and not g.has_edge(u, w):
                return v, (u, w)
    return None


def find_chordless_cycle(g: Graph) -> tuple:
    """A chordless cycle of length >= 4, or ``()``.

    Every chordless cycle passes through some ``v`` with non-adjacent
    neighbours ``x, y`` joined by a path avoiding the rest of ``N[v]``;
    a shortest such path closes an induced cycle.
    """
    for v in g.vertices:
        nbrs = g.adjacency[v]
        for x, y in itertools.combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            blocked = (set(nbrs) | {v}) - {x, y}
            prev = {x: None}
            queue = deque([x])
            while queue and y not in prev:
                a = queue.popleft()
                for b in g.adjacency[a]:
                    if b not in prev and b not in blocked:
                        prev[b] = a
                        queue.append(b)
            if y in prev:
                path = [y]
                while path[-1] != x:
                    path.append(prev[path[-1]])
                return (v,) + tuple(reversed(path))
    return ()


def is_chordal(g: Graph) -> ChordalityResult:
    order = maximum_cardinality_search(g)
    peo = tuple(reversed(order))
    if _is_peo(g, peo) is None:
        return ChordalityResult(True, ordering=peo)
    return ChordalityResult(False, cycle=find_chordless_cycle(g))


def naive_chordless_cycle(g: Graph, limit: int = 10) -> tuple:
    """Exhaustive search over vertex subsets for an induced cycle of length >= 4."""
    if g.n > limit:
        raise OracleLimitError(f"naive chordless-cycle search limited to n <= {limit}")
    for size in range(4, g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            h = g.subgraph(subset)
            if all(h.degree(v) == 2 for v in subset) and h.is_connected():
                return subset
    return ()


def intersection_equals(g: Graph, factors) -> Verdict:
    """Pass iff ``E(g)`` equals the intersection of the factors' edge sets."""
    for i, h in enumerate(factors):
        if set(h.vertices) != set(g.vertices):
            raise GraphError(f"factor {i} has a different vertex set")
    for u, v in g.edges():
        for i, h in enumerate(factors):
            if not h.has_edge(u, v):
                return Verdict(False, f"edge of G missing from factor {i}", (u, v))
    if factors:
        base = min(factors, key=lambda h: h.m)
        for u, v in base.edges():
            if not g.has_edge(u, v) and all(h.has_edge(u, v) for h in factors):
                return Verdict(False, "edge common to all factors is not an edge of G", (u, v))
    return PASS


def _check_limit(g: Graph, limit):
    limit = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"oracle limited to n <= {limit}, got n = {g.n}")


def brute_bandwidth(g: Graph, limit: int | None = None) -> int:
    """Exact bandwidth by trying every vertex ordering."""
    _check_limit(g, limit)
    edges = g.edges()
    best = max(g.n - 1, 0)
    for perm in itertools.permutations(range(g.n)):
        pos = dict(zip(g.vertices, perm))
        w = 0
        for u, v in edges:
            d = abs(pos[u] - pos[v])
            if d > w:
                w = d
                if w >= best:
                    break
        if w < best:
            best = w
            if best <= 1:
                break
    return best


def _clique_partitions(g: Graph):
    verts = g.vertices
    blocks: list = []

    def rec(i):
        if i == len(verts):
            yield [tuple(b) for b in blocks]
            return
        v = verts[i]
        for b in blocks:
            if all(g.has_edge(v, u) for u in b):
                b.append(v)
                yield from rec(i + 1)
                b.pop()
        blocks.append([v])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _min_order_width(adj, best: int) -> int:
    """Smallest linear-arrangement width of the block graph if below ``best``, else ``best``."""
    k = len(adj)
    pos = [-1] * k

    def rec(p):
        nonlocal best
        if p == k:
            w = max((abs(pos[a] - pos[b]) for a in range(k) for b in adj[a]), default=0)
            best = min(best, w)
            return
        for a in range(k):
            if pos[a] >= 0 and p - pos[a] >= best and any(pos[b] < 0 for b in adj[a]):
                return
        for a in range(k):
            if pos[a] >= 0:
                continue
            if any(pos[b] >= 0 and p - pos[b] >= best for b in adj[a]):
                continue
            pos[a] = p
            rec(p + 1)
            pos[a] = -1
            if best == 0:
                return

    rec(0)
    return best


def brute_ccw(g: Graph, limit: int | None = None) -> int:
    """Exact clique cover width: every partition into cliques, every block order.

    Block orders are searched depth-first and cut as soon as a placed block
    would sit ``best`` or more positions after one of its neighbours.
    """
    _check_limit(g, limit)
    if g.n == 0:
        return 0
    best = g.n
    for blocks in _clique_partitions(g):
        where = {v: i for i, b in enumerate(blocks) for v in b}
        adj = [set() for _ in blocks]
        for u, v in g.edges():
            a, b = where[u], where[v]
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        best = _min_order_width([sorted(s) for s in adj], best)
        if best == 0:
            break
    return best


def certify(pair, g: Graph, lp, bound: int = 7) -> dict:
    """Re-check every claim of a representation pair; failures become verdicts, never exceptions."""
    from .peel import validate_layering
    from .treedec import layer_bag_counts, validate_treedec

    violations = []
    report = {"intersection": False, "chordal": False, "cover_width": None, "bound": bound,
              "t_star": None, "treedec_valid": False, "violations": violations}
    try:
        v = intersection_equals(g, [pair.g1, pair.g2])
        report["intersection"] = v.ok
        if not v:
            violations.append(f"intersection: {v.reason} {v.witness!r}")
    except GraphError as exc:
        violations.append(f"intersection: {exc}")

    ch = is_chordal(pair.g2)
    report["chordal"] = ch.ok
    if not ch:
        violations.append(f"chordal: G2 has chordless cycle {list(ch.cycle)!r}")

    try:
        if set(pair.cover.host.vertices) != set(pair.g1.vertices) or pair.cover.host != pair.g1:
            raise CoverError("cover host is not G1")
        w = cover_width(pair.cover)
        report["cover_width"] = w
        if w > bound:
            violations.append(f"cover_width: {w} exceeds bound {bound}")
    except CoverError as exc:
        violations.append(f"cover: {exc}")

    lv = validate_layering(g, lp)
    report["layering_valid"] = lv.ok
    if not lv:
        violations.append(f"layering: {lv.reason} {lv.witness!r}")

    tv = validate_treedec(g, pair.td)
    report["treedec_valid"] = tv.ok
    if not tv:
        violations.append(f"treedec: {tv.reason} {tv.witness!r}")

    if lv:
        t_star, witness = layer_bag_counts(pair.td, lp)
        report["t_star"] = t_star
        if t_star != pair.t_star:
            violations.append(f"t_star: recorded {pair.t_star}, recomputed {t_star}")
        if 2 * t_star - 1 > bound:
            violations.append(f"t_star: bag {witness!r} meets a layer in {t_star} vertices, 2t*-1 > {bound}")
        if report["cover_width"] is not None and report["cover_width"] > max(2 * t_star - 1, 0):
            violations.append(f"cover_width: {report['cover_width']} exceeds 2t*-1 = {2 * t_star - 1}")
    report["ok"] = not violations
    return report
