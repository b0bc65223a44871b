"""pack2dom: exact domination vs edge 2-packing toolkit for small graphs.

Builds around four exact invariants of simple graphs — domination number
(gamma), vertex cover number (beta), independence number (alpha), and the
edge 2-packing number (nu2, the largest edge subset meeting every vertex at
most twice) — plus the extremal tree family where gamma = nu2 - 1, a
connected-graph enumerator, and a survey harness that machine-checks the
relationships between these invariants over every small graph.
"""
from .canon import are_isomorphic, canonical_form, canonical_g6, canonical_graph
from .domination import (
    AlphaResult,
    BetaResult,
    DominatingSet,
    GammaResult,
    IndependentSet,
    VertexCover,
    alpha_exact,
    beta_exact,
    gamma_bruteforce,
    gamma_exact,
    is_dominating_set,
    is_independent_set,
    is_vertex_cover,
)
from .enumeration import GraphStream, enumerate_connected, ingest_graph6
from .errors import BoundExceededError, Graph6Error, GraphError
from .family import (
    FamilyParams,
    FamilyRejection,
    family_invariants,
    generate_family,
    recognize,
)
from .graph import (
    ComponentKind,
    DegreeProfile,
    Edge,
    EdgeSubgraph,
    Graph,
    classify_components,
    degree_profile,
    edge,
    edge_subgraph,
    from_edge_list,
    is_connected,
)
from .graph6 import format_edgelist, parse_edgelist, parse_graph6, to_graph6
from .matching import maximum_matching
from .packing import (
    PackingResult,
    TwoPacking,
    enumerate_max_2packings,
    is_2packing,
    nu2_bruteforce,
    nu2_matching,
)
from .verification import (
    CLAIMS,
    Invariants,
    SurveyOptions,
    SurveyReport,
    check_inequalities,
    check_lemma_connected_packing,
    check_lemma_forest,
    check_small_nu2,
    check_theorem_equality,
    compute_invariants,
    graph_report,
    run_survey,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaResult",
    "BetaResult",
    "BoundExceededError",
    "CLAIMS",
    "ComponentKind",
    "DegreeProfile",
    "DominatingSet",
    "Edge",
    "EdgeSubgraph",
    "FamilyParams",
    "FamilyRejection",
    "GammaResult",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphStream",
    "IndependentSet",
    "Invariants",
    "PackingResult",
    "SurveyOptions",
    "SurveyReport",
    "TwoPacking",
    "VertexCover",
    "alpha_exact",
    "are_isomorphic",
    "beta_exact",
    "canonical_form",
    "canonical_g6",
    "canonical_graph",
    "check_inequalities",
    "check_lemma_connected_packing",
    "check_lemma_forest",
    "check_small_nu2",
    "check_theorem_equality",
    "classify_components",
    "compute_invariants",
    "degree_profile",
    "edge",
    "edge_subgraph",
    "enumerate_connected",
    "enumerate_max_2packings",
    "family_invariants",
    "format_edgelist",
    "from_edge_list",
    "gamma_bruteforce",
    "gamma_exact",
    "generate_family",
    "graph_report",
    "ingest_graph6",
    "is_2packing",
    "is_connected",
    "is_dominating_set",
    "is_independent_set",
    "is_vertex_cover",
    "maximum_matching",
    "nu2_bruteforce",
    "nu2_matching",
    "parse_edgelist",
    "parse_graph6",
    "recognize",
    "run_survey",
    "to_graph6",
]
