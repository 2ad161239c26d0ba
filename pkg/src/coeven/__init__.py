"""Exact co-even domination numbers and audits of how they move under
vertex/edge removal and contraction."""

from .audit import (
    AuditSummary,
    BoundCheck,
    WitnessRecord,
    audit_corpus,
    audit_graph,
    check_additivity,
    check_corollaries,
    check_operation_bounds,
    witness_search,
)
from .constructions import (
    CandidateCert,
    edge_contraction_lift,
    edge_removal_lift,
    lift,
    vertex_contraction_lift,
    vertex_removal_lift,
)
from .corpus import emit_graph6, enumerate_labeled, gnp, parse_graph6, read_graph6
from .domination import (
    DominationResult,
    coeven_brute_force,
    coeven_domination_number,
    domination_number,
    forced_vertices,
    is_coeven_dominating_set,
    is_dominating_set,
)
from .errors import (
    CoevenError,
    Graph6ParseError,
    InvalidCertificateError,
    InvalidQueryError,
    InvalidVertexError,
    NotAnEdgeError,
    TooLargeError,
)
from .graph import Graph, disjoint_union
from .transforms import TransformResult, contract_edge, contract_vertex, remove_edge, remove_vertex

__version__ = "0.1.0"
