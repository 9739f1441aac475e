"""Ordered clique covers and their width."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph


class CoverError(GraphError):
    """A cover block is not a clique, or blocks do not partition the host."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}: {witness!r}")
        self.witness = witness


@dataclass(frozen=True)
class OrderedCliqueCover:
    """Cliques ``C_0 .. C_t`` of ``host`` in order; empty blocks are allowed."""

    cliques: tuple
    host: Graph

    def block_of(self) -> dict:
        return {v: i for i, c in enumerate(self.cliques) for v in c}

    def check(self) -> None:
        seen = {}
        for i, c in enumerate(self.cliques):
            for v in c:
                if v in seen:
                    raise CoverError(f"vertex appears in blocks {seen[v]} and {i}", v)
                if v not in self.host:
                    raise CoverError("block holds a vertex outside the host", v)
                seen[v] = i
            members = sorted(c, key=self.host.rank)
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    if not self.host.has_edge(members[a], members[b]):
                        raise CoverError(f"block {i} is not a clique", (members[a], members[b]))
        if len(seen) != self.host.n:
            raise CoverError("cover misses a vertex", next(v for v in self.host.vertices if v not in seen))

    @property
    def width(self) -> int:
        return cover_width(self)


def cover_width(cover: OrderedCliqueCover) -> int:
    """``max |j - i|`` over host edges joining ``C_i`` and ``C_j`` (0 without edges)."""
    cover.check()
    block = cover.block_of()
    return max((abs(block[u] - block[v]) for u, v in cover.host.edges()), default=0)
