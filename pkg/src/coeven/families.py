"""Small named graphs, including the extremal shapes used as sharpness witnesses."""

from __future__ import annotations

from .graph import Graph, disjoint_union


def empty(n: int) -> Graph:
    return Graph.empty(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres 0 and 1 carrying ``a`` and ``b`` pendant leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def triangle_bridge() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by edges 0-3 and 1-4.

    Deleting 0-3 leaves the two triangles hanging off the single bridge 1-4;
    that drop takes the co-even domination number from 4 to 2.
    """
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4)])


def pendant_triangle_hub() -> Graph:
    """Vertex 0 adjacent to 1..4; 2 sits in triangle {2,5,6}; 1, 3, 4 share neighbour 7.

    Deleting vertex 0 moves the co-even domination number from 2 to 5.
    """
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (2, 5), (2, 6), (5, 6), (1, 7), (3, 7), (4, 7)]
    return Graph.from_edges(8, edges)


def cherry_hub() -> Graph:
    """Vertex 0 joined to hubs 1, 2, 3; each hub has two private neighbours,
    and all six of those are joined to both 10 and 11.

    Deleting vertex 0 takes the value from 10 to 6.
    """
    edges = [(0, 1), (0, 2), (0, 3)]
    for h in range(3):
        a, b = 4 + 2 * h, 5 + 2 * h
        edges += [(1 + h, a), (1 + h, b), (a, 10), (b, 10), (a, 11), (b, 11)]
    return Graph.from_edges(12, edges)


def fan_apex(k: int = 5) -> Graph:
    """Vertices 0 and 1 both adjacent to each of ``k`` further vertices (K_{2,k}).

    With k = 5, contracting vertex 0 yields K6 and the value goes from 2 to 6.
    """
    return Graph.from_edges(k + 2, [(c, 2 + i) for c in (0, 1) for i in range(k)])


def spider_of_cherries() -> Graph:
    """Vertex 0 joined to 1, 2, 3; each of those carries two pendant leaves.

    Contracting vertex 0 takes the value from 10 to 6.
    """
    edges = [(0, 1), (0, 2), (0, 3)]
    for h in range(3):
        edges += [(1 + h, 4 + 2 * h), (1 + h, 5 + 2 * h)]
    return Graph.from_edges(10, edges)


def kite_with_tail() -> Graph:
    """Degree-5 vertex 1 with pendant 6, inside a dense block on 0..5.

    Edges: 0-1, 1-2, 2-3, 3-0, 1-4, 4-3, 3-5, 5-1, 2-4, 1-6. Deleting vertex 3
    leaves the value at 4.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 3), (3, 5), (5, 1), (2, 4), (1, 6)]
    return Graph.from_edges(7, edges)


def leaf_triangle_edge() -> Graph:
    """Edge 0-1 where 0 has leaves 2, 3 and 1 has leaf 4 and triangle {1, 5, 6}.

    Contracting 0-1 lowers the value by exactly one (5 to 4).
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (5, 6)]
    return Graph.from_edges(7, edges)


def edge_removal_upper() -> Graph:
    """Edge 0-1 joining two degree-4 vertices of odd-degree cycles.

    0 is adjacent to 2, 3 and pendant 4 with 2-3 an edge; 1 is adjacent to
    5, 6, 7 with path 5-6-7; cross edges 2-5 and 3-7. Deleting 0-1 makes
    both endpoints odd and raises the value from 6 to 8.
    """
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (1, 5), (1, 6), (1, 7), (5, 6), (6, 7), (2, 5), (3, 7)]
    return Graph.from_edges(8, edges)


NAMED = {
    "triangle-bridge": triangle_bridge,
    "double-star-2-2": lambda: double_star(2, 2),
    "double-star-3-3": lambda: double_star(3, 3),
    "pendant-triangle-hub": pendant_triangle_hub,
    "cherry-hub": cherry_hub,
    "fan-apex": fan_apex,
    "spider-of-cherries": spider_of_cherries,
    "kite-with-tail": kite_with_tail,
    "leaf-triangle-edge": leaf_triangle_edge,
    "edge-removal-upper": edge_removal_upper,
}

__all__ = [
    "empty", "path", "cycle", "complete", "star", "double_star", "disjoint_union",
    "triangle_bridge", "pendant_triangle_hub", "cherry_hub", "fan_apex",
    "spider_of_cherries", "kite_with_tail", "leaf_triangle_edge", "edge_removal_upper", "NAMED",
]
