"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
exact solvers cheap and makes graphs hashable for memoisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidVertexError, NotAnEdgeError

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair {i, j} in the upper-triangle key.

    Pairs are ordered (0,1), (0,2), (1,2), (0,3), ... so the key of a graph
    on ``n`` vertices is a prefix of the key of any graph that extends it.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidVertexError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    # -- construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; only for rows produced by code in this package.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        rows = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_key(cls, n: int, key: int) -> Graph:
        """Inverse of :meth:`key`."""
        rows = [0] * n
        bit = 0
        for j in range(1, n):
            for i in range(j):
                if key >> bit & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                bit += 1
        if key >> bit:
            raise ValueError(f"key {key} has bits beyond n={n}")
        return cls._trusted(n, tuple(rows))

    # -- queries ----------------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} not in [0, {self.n})")
        return v

    def check_edge(self, e: Iterable[int]) -> Edge:
        u, v = e
        self.check_vertex(u)
        self.check_vertex(v)
        if not self.adj[u] >> v & 1:
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        return normalize_edge(u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self.check_vertex(u)] >> self.check_vertex(v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[self.check_vertex(v)].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        row = self.adj[self.check_vertex(v)]
        if closed:
            row |= 1 << v
        return frozenset(iter_bits(row))

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def key(self) -> int:
        """Upper-triangle bitmask with x(0,1) as the least significant bit."""
        key = 0
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                key |= 1 << pair_index(u, v)
        return key

    def connected_components(self) -> list[frozenset[int]]:
        """Maximal connected vertex sets, ordered by smallest member."""
        return [frozenset(iter_bits(m)) for m in self.component_masks()]

    def component_masks(self) -> list[int]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in ascending order) and the old ids."""
        keep = sorted(set(vertices))
        for v in keep:
            self.check_vertex(v)
        index = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            row = 0
            for u in iter_bits(self.adj[old]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), tuple(rows)), keep

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))
