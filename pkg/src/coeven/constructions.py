"""Certificate lifting across the four graph modifications.

Each lift takes a co-even dominating set on one side of a modification and
builds the candidate set that the corresponding bound argument uses on the
other side. The candidate is always re-checked against the target graph:
``valid`` is computed, never assumed, and the edge-contraction lifts can
and do come back invalid when the endpoints share neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .domination import is_coeven_dominating_set
from .errors import InvalidCertificateError, InvalidQueryError
from .graph import Graph
from .transforms import (
    TransformResult,
    contract_edge,
    contract_vertex,
    remove_edge,
    remove_vertex,
)

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class CandidateCert:
    operation: str
    direction: str
    vertex_set: frozenset[int]
    valid: bool
    claimed_bound: int
    proof_case: str

    @property
    def within_bound(self) -> bool:
        return len(self.vertex_set) <= self.claimed_bound

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "direction": self.direction,
            "vertex_set": sorted(self.vertex_set),
            "size": len(self.vertex_set),
            "valid": self.valid,
            "claimed_bound": self.claimed_bound,
            "within_bound": self.within_bound,
            "proof_case": self.proof_case,
        }


def _require(g: Graph, d: frozenset[int], where: str) -> None:
    if not is_coeven_dominating_set(g, d):
        raise InvalidCertificateError(f"{sorted(d)} is not co-even dominating in {where}")


def _check_direction(direction: str) -> None:
    if direction not in (FORWARD, BACKWARD):
        raise InvalidQueryError(f"direction must be 'forward' or 'backward', got {direction!r}")


def _finish(op, direction, res_graph, cand, bound, case) -> CandidateCert:
    cand = frozenset(cand)
    return CandidateCert(op, direction, cand, is_coeven_dominating_set(res_graph, cand), bound, case)


def _vertex_lift(
    op: str, res: TransformResult, g: Graph, v: int, d: frozenset[int], direction: str, cases: dict
) -> CandidateCert:
    deg = g.degree(v)
    nbrs = g.neighborhood(v)
    if direction == FORWARD:
        _require(g, d, "G")
        if v in d:
            case = cases["odd"] if deg % 2 else cases["even-in"]
            cand = (d - {v}) | nbrs
        else:
            case = cases["even-out"]
            cand = d | nbrs
        return _finish(op, direction, res.graph, res.forward(cand), len(d) + deg - 1, case)
    _require(res.graph, d, "the modified graph")
    cand = res.backward(d) | nbrs | {v}
    return _finish(op, direction, g, cand, len(d) + deg + 1, "lower")


def vertex_removal_lift(g: Graph, v: int, d: Iterable[int], direction: str = FORWARD) -> CandidateCert:
    _check_direction(direction)
    res = remove_vertex(g, v)
    cases = {"even-out": "i", "even-in": "ii", "odd": "iii"}
    return _vertex_lift("vertex-removal", res, g, v, frozenset(d), direction, cases)


def vertex_contraction_lift(g: Graph, v: int, d: Iterable[int], direction: str = FORWARD) -> CandidateCert:
    _check_direction(direction)
    res = contract_vertex(g, v)
    cases = {"odd": "i", "even-in": "ii", "even-out": "iii"}
    return _vertex_lift("vertex-contraction", res, g, v, frozenset(d), direction, cases)


def _edge_case(d: frozenset[int], u: int, v: int) -> str:
    inside = (u in d) + (v in d)
    return ("i", "ii", "iii")[inside]


def edge_removal_lift(g: Graph, e: Iterable[int], d: Iterable[int], direction: str = FORWARD) -> CandidateCert:
    _check_direction(direction)
    d = frozenset(d)
    res = remove_edge(g, e)
    u, v = g.check_edge(e)
    if direction == FORWARD:
        _require(g, d, "G")
        missing = {u, v} - d
        return _finish("edge-removal", direction, res.graph, d | missing, len(d) + len(missing), _edge_case(d, u, v))
    _require(res.graph, d, "G-e")
    return _finish("edge-removal", direction, g, d | {u, v}, len(d) + 2, "lower")


def edge_contraction_lift(
    g: Graph, e: Iterable[int], d: Iterable[int], direction: str = FORWARD
) -> CandidateCert:
    _check_direction(direction)
    d = frozenset(d)
    res = contract_edge(g, e)
    u, v = g.check_edge(e)
    w = res.merged_into
    if direction == FORWARD:
        _require(g, d, "G")
        case = _edge_case(d, u, v)
        cand = set(res.forward(d - {u, v}))
        if case != "i":
            cand.add(w)
        bound = len(d) - 1 if case == "iii" else len(d)
        return _finish("edge-contraction", direction, res.graph, cand, bound, case)
    _require(res.graph, d, "G/e")
    cand = res.backward(d - {w}) | {u, v}
    return _finish("edge-contraction", direction, g, cand, len(d) + 2, "lower")


LIFTS = {
    "vertex-removal": vertex_removal_lift,
    "edge-removal": edge_removal_lift,
    "vertex-contraction": vertex_contraction_lift,
    "edge-contraction": edge_contraction_lift,
}


def lift(g: Graph, operation: str, element, d: Iterable[int], direction: str = FORWARD) -> CandidateCert:
    try:
        fn = LIFTS[operation]
    except KeyError:
        raise InvalidQueryError(f"unknown operation {operation!r}") from None
    return fn(g, element, d, direction)
