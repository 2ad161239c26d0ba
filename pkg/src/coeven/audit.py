"""Evaluate the co-even domination bounds on concrete graphs.

Violations are ordinary results: a :class:`BoundCheck` with a false flag,
collected into :class:`WitnessRecord` lists by :func:`audit_corpus`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .corpus import emit_graph6
from .domination import coeven_value
from .errors import CoevenError, InvalidQueryError
from .graph import Graph
from .transforms import contract_edge, contract_vertex, remove_edge, remove_vertex

VERTEX_OPS = ("vertex-removal", "vertex-contraction", "vertex-corollary")
EDGE_OPS = ("edge-removal", "edge-contraction", "edge-corollary")
OPERATIONS = VERTEX_OPS + EDGE_OPS + ("additivity",)
TRANSFORM_OPS = ("vertex-removal", "edge-removal", "vertex-contraction", "edge-contraction")
RELATIONS = ("upper-equality", "lower-equality", "mid-equality", "upper-violation", "lower-violation", "base-equality")

_TRANSFORMS = {
    "vertex-removal": remove_vertex,
    "vertex-contraction": contract_vertex,
    "edge-removal": remove_edge,
    "edge-contraction": contract_edge,
}

Element = int | tuple[int, int] | None


@dataclass(frozen=True)
class BoundCheck:
    operation: str
    element: Element
    base_value: int
    transformed_value: int | None
    lower: Fraction
    upper: Fraction
    holds_lower: bool
    holds_upper: bool
    degree: int | None = None
    common_neighbors: int | None = None
    removal_value: int | None = None
    contraction_value: int | None = None

    @property
    def holds(self) -> bool:
        return self.holds_lower and self.holds_upper

    @property
    def compared(self) -> int:
        """The value the window is tested against."""
        if self.operation in TRANSFORM_OPS:
            return self.transformed_value
        return self.base_value

    def to_dict(self) -> dict:
        out = {
            "operation": self.operation,
            "element": list(self.element) if isinstance(self.element, tuple) else self.element,
            "base_value": self.base_value,
            "transformed_value": self.transformed_value,
            "lower": _num(self.lower),
            "upper": _num(self.upper),
            "holds_lower": self.holds_lower,
            "holds_upper": self.holds_upper,
        }
        for name in ("degree", "common_neighbors", "removal_value", "contraction_value"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out


def _num(x: Fraction) -> int | float:
    # halves are exact in binary floating point
    return int(x) if x.denominator == 1 else float(x)


@dataclass(frozen=True)
class WitnessRecord:
    graph: Graph
    element: Element
    operation: str
    relation: str
    values: dict

    def sort_key(self) -> tuple:
        return (self.graph.n, emit_graph6(self.graph), _element_key(self.element), self.operation, self.relation)

    def to_dict(self) -> dict:
        return {
            "graph6": emit_graph6(self.graph),
            "n": self.graph.n,
            "element": list(self.element) if isinstance(self.element, tuple) else self.element,
            "operation": self.operation,
            "relation": self.relation,
            "values": self.values,
        }


def _element_key(element: Element) -> tuple:
    if element is None:
        return (2,)
    if isinstance(element, tuple):
        return (1, *element)
    return (0, element)


def _window(operation: str, base: int, deg: int | None) -> tuple[int, int]:
    if operation in ("vertex-removal", "vertex-contraction"):
        return base - deg - 1, base + deg - 1
    if operation == "edge-removal":
        return base - 2, base + 2
    if operation == "edge-contraction":
        return base - 2, base
    raise InvalidQueryError(f"{operation!r} is not a single-transform bound")


def check_operation_bounds(g: Graph, element, operation: str) -> BoundCheck:
    if operation not in _TRANSFORMS:
        raise InvalidQueryError(f"unknown operation {operation!r}")
    res = _TRANSFORMS[operation](g, element)
    base = coeven_value(g)
    after = coeven_value(res.graph)
    if operation.startswith("vertex"):
        element = g.check_vertex(element)
        deg, common = g.degree(element), None
    else:
        element = g.check_edge(element)
        u, v = element
        deg, common = None, (g.adj[u] & g.adj[v]).bit_count()
    lo, hi = _window(operation, base, deg)
    return BoundCheck(
        operation, element, base, after, Fraction(lo), Fraction(hi), lo <= after, after <= hi,
        degree=deg, common_neighbors=common,
    )


def check_corollaries(g: Graph, element, kind: str) -> BoundCheck:
    base = coeven_value(g)
    if kind == "vertex":
        v = g.check_vertex(element)
        a = coeven_value(remove_vertex(g, v).graph)
        b = coeven_value(contract_vertex(g, v).graph)
        deg = g.degree(v)
        mid = Fraction(a + b, 2)
        lo, hi = mid - deg + 1, mid + deg + 1
        element, common, op = v, None, "vertex-corollary"
    elif kind == "edge":
        element = g.check_edge(element)
        u, v = element
        a = coeven_value(remove_edge(g, element).graph)
        b = coeven_value(contract_edge(g, element).graph)
        mid = Fraction(a + b, 2)
        lo, hi = mid - 1, mid + 2
        deg, common, op = None, (g.adj[u] & g.adj[v]).bit_count(), "edge-corollary"
    else:
        raise InvalidQueryError(f"corollary kind must be 'vertex' or 'edge', got {kind!r}")
    return BoundCheck(
        op, element, base, None, lo, hi, lo <= base, base <= hi,
        degree=deg, common_neighbors=common, removal_value=a, contraction_value=b,
    )


def check_additivity(g: Graph) -> BoundCheck:
    base = coeven_value(g)
    total = sum(coeven_value(g.induced(comp)[0]) for comp in g.connected_components())
    return BoundCheck("additivity", None, base, total, Fraction(total), Fraction(total), total <= base, base <= total)


def audit_graph(g: Graph, operations: Sequence[str] | None = None) -> list[BoundCheck]:
    """Every applicable check on ``g``: vertices ascending, then edges, then additivity."""
    ops = set(OPERATIONS if operations is None else operations)
    unknown = ops - set(OPERATIONS)
    if unknown:
        raise InvalidQueryError(f"unknown operations {sorted(unknown)}")
    out = []
    for v in range(g.n):
        for op in VERTEX_OPS:
            if op in ops:
                out.append(check_corollaries(g, v, "vertex") if op == "vertex-corollary" else check_operation_bounds(g, v, op))
    for e in g.edges():
        for op in EDGE_OPS:
            if op in ops:
                out.append(check_corollaries(g, e, "edge") if op == "edge-corollary" else check_operation_bounds(g, e, op))
    if "additivity" in ops:
        out.append(check_additivity(g))
    return out


def _values(check: BoundCheck) -> dict:
    values = {"base": check.base_value}
    if check.transformed_value is not None:
        values["transformed"] = check.transformed_value
    for name in ("degree", "common_neighbors", "removal_value", "contraction_value"):
        value = getattr(check, name)
        if value is not None:
            values[name] = value
    values["lower"] = _num(check.lower)
    values["upper"] = _num(check.upper)
    return values


def violations_of(g: Graph, checks: Iterable[BoundCheck]) -> list[WitnessRecord]:
    out = []
    for c in checks:
        if not c.holds_lower:
            out.append(WitnessRecord(g, c.element, c.operation, "lower-violation", _values(c)))
        if not c.holds_upper:
            out.append(WitnessRecord(g, c.element, c.operation, "upper-violation", _values(c)))
    return out


@dataclass
class AuditSummary:
    """Counts keyed by ``"<operation>/<side>"``; merge is associative and commutative."""

    checked: Counter = field(default_factory=Counter)
    held: Counter = field(default_factory=Counter)
    violated: Counter = field(default_factory=Counter)
    violations: list[WitnessRecord] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    graphs: int = 0
    # edge contraction: largest gamma(G/e) - gamma(G) seen per common-neighbour count
    contraction_gap: dict[int, int] = field(default_factory=dict)

    def add(self, g: Graph, checks: Sequence[BoundCheck]) -> None:
        self.graphs += 1
        for c in checks:
            for side, ok in (("lower", c.holds_lower), ("upper", c.holds_upper)):
                key = f"{c.operation}/{side}"
                self.checked[key] += 1
                if ok:
                    self.held[key] += 1
                else:
                    self.violated[key] += 1
            if c.operation == "edge-contraction":
                gap = c.transformed_value - c.base_value
                k = c.common_neighbors
                self.contraction_gap[k] = max(gap, self.contraction_gap.get(k, gap))
        self.violations.extend(violations_of(g, checks))

    def merge(self, other: AuditSummary) -> AuditSummary:
        self.checked.update(other.checked)
        self.held.update(other.held)
        self.violated.update(other.violated)
        self.violations.extend(other.violations)
        self.errors.extend(other.errors)
        self.graphs += other.graphs
        for k, gap in other.contraction_gap.items():
            self.contraction_gap[k] = max(gap, self.contraction_gap.get(k, gap))
        return self

    def finalize(self) -> AuditSummary:
        self.violations.sort(key=WitnessRecord.sort_key)
        self.errors.sort()
        return self

    @property
    def total_violations(self) -> int:
        return sum(self.violated.values())

    def to_dict(self) -> dict:
        keys = sorted(self.checked)
        return {
            "graphs": self.graphs,
            "counts": {k: {"checked": self.checked[k], "held": self.held[k], "violated": self.violated[k]} for k in keys},
            "violations": len(self.violations),
            "errors": [{"index": i, "error": msg} for i, msg in self.errors],
            "edge_contraction_max_gap_by_common_neighbors": {str(k): v for k, v in sorted(self.contraction_gap.items())},
        }


def audit_corpus(
    graphs: Iterable[Graph | Exception], operations: Sequence[str] | None = None
) -> AuditSummary:
    """Audit a stream; entries that are exceptions (or fail) are logged and skipped."""
    summary = AuditSummary()
    for index, g in enumerate(graphs):
        if isinstance(g, Exception):
            summary.errors.append((index, str(g)))
            continue
        try:
            checks = audit_graph(g, operations)
        except CoevenError as exc:
            summary.errors.append((index, str(exc)))
            continue
        summary.add(g, checks)
    return summary.finalize()


_EQUALITY = {
    "upper-equality": lambda c: c.compared == c.upper,
    "lower-equality": lambda c: c.compared == c.lower,
    "base-equality": lambda c: c.transformed_value == c.base_value,
    "mid-equality": lambda c: c.transformed_value == c.base_value - 1,
    "upper-violation": lambda c: not c.holds_upper,
    "lower-violation": lambda c: not c.holds_lower,
}


def _validate_query(operation: str, relation: str) -> None:
    if operation not in OPERATIONS or operation == "additivity":
        raise InvalidQueryError(f"no witnesses for operation {operation!r}")
    if relation not in _EQUALITY:
        raise InvalidQueryError(f"unknown relation {relation!r}")
    if relation == "mid-equality" and operation != "edge-contraction":
        raise InvalidQueryError("mid-equality is only defined for edge-contraction")
    if relation == "base-equality" and operation not in TRANSFORM_OPS:
        raise InvalidQueryError("base-equality needs a graph modification, not a corollary")


def witness_search(
    graphs: Iterable[Graph], operation: str, relation: str, limit: int | None = None
) -> Iterator[WitnessRecord]:
    """Yield (graph, element) pairs where ``relation`` holds exactly, in stream order."""
    _validate_query(operation, relation)
    test = _EQUALITY[relation]
    found = 0
    if limit is not None and limit <= 0:
        return
    for g in graphs:
        for check in audit_graph(g, [operation]):
            if test(check):
                yield WitnessRecord(g, check.element, operation, relation, _values(check))
                found += 1
                if limit is not None and found >= limit:
                    return
