"""Vertex/edge removal and vertex/edge contraction.

Every transform returns a fresh :class:`Graph` together with the map from
old vertex ids to new ones. Deleting vertex ``x`` decrements every id above
``x``; edge contraction keeps the merged vertex in the smaller endpoint's
slot and deletes the larger one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidQueryError
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class TransformResult:
    graph: Graph
    mapping: tuple[int | None, ...]  # old id -> new id, None when removed
    merged_into: int | None = None

    def forward(self, vertices: Iterable[int]) -> frozenset[int]:
        """Image of an old-label vertex set; removed vertices are dropped."""
        return frozenset(m for m in (self.mapping[v] for v in vertices) if m is not None)

    def preimage(self, new: int) -> list[int]:
        return [old for old, m in enumerate(self.mapping) if m == new]

    def backward(self, vertices: Iterable[int]) -> frozenset[int]:
        """All old ids whose image lies in ``vertices``."""
        wanted = set(vertices)
        return frozenset(old for old, m in enumerate(self.mapping) if m in wanted)


def _drop_bit(row: int, x: int) -> int:
    low = (1 << x) - 1
    return (row & low) | (row >> (x + 1) << x)


def _delete(rows: list[int], x: int) -> tuple[int, ...]:
    return tuple(_drop_bit(row, x) for i, row in enumerate(rows) if i != x)


def _deletion_mapping(n: int, x: int) -> tuple[int | None, ...]:
    return tuple(None if i == x else (i if i < x else i - 1) for i in range(n))


def remove_vertex(g: Graph, v: int) -> TransformResult:
    g.check_vertex(v)
    return TransformResult(Graph._trusted(g.n - 1, _delete(list(g.adj), v)), _deletion_mapping(g.n, v))


def remove_edge(g: Graph, e: Iterable[int]) -> TransformResult:
    u, v = g.check_edge(e)
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return TransformResult(Graph._trusted(g.n, tuple(rows)), tuple(range(g.n)))


def contract_vertex(g: Graph, v: int) -> TransformResult:
    """Delete ``v`` and join every pair of its former neighbours."""
    g.check_vertex(v)
    nbrs = g.adj[v]
    rows = list(g.adj)
    for a in iter_bits(nbrs):
        rows[a] |= nbrs & ~(1 << a)
    return TransformResult(Graph._trusted(g.n - 1, _delete(rows, v)), _deletion_mapping(g.n, v))


def contract_edge(g: Graph, e: Iterable[int]) -> TransformResult:
    """Merge the endpoints of ``e`` into one vertex; loops dropped, parallels merged."""
    u, v = g.check_edge(e)  # u < v; the merged vertex takes u's slot
    rows = list(g.adj)
    both = (1 << u) | (1 << v)
    rows[u] = (g.adj[u] | g.adj[v]) & ~both
    for x in iter_bits(g.adj[v] & ~(1 << u)):
        rows[x] |= 1 << u
    mapping = tuple(u if i == v else (i if i < v else i - 1) for i in range(g.n))
    return TransformResult(Graph._trusted(g.n - 1, _delete(rows, v)), mapping, merged_into=u)


OPERATIONS = {
    "vertex-removal": remove_vertex,
    "edge-removal": remove_edge,
    "vertex-contraction": contract_vertex,
    "edge-contraction": contract_edge,
}


def apply(g: Graph, operation: str, element) -> TransformResult:
    try:
        fn = OPERATIONS[operation]
    except KeyError:
        raise InvalidQueryError(f"unknown operation {operation!r}") from None
    return fn(g, element)
