"""Minimum-size maximal K-antichains on [n] via saturated graphs.

A K-antichain is a family of subsets of {1, ..., n}, none containing
another, with all member sizes in a set K of admissible levels (K always
contains 2, never 1).  Its 2-sets are the non-edges of a graph in which
every other member induces a clique; maximal K-antichains correspond
exactly to the K-saturated graphs.  This package provides the set-family
and graph machinery, the correspondence, explicit constructions, exact
exhaustive search for small n, and the asymptotic bound calculators.
"""

from .bounds import (
    antichain_coeff,
    antichain_lower_coeff,
    critical_density,
    first_bound,
    objective_coeff,
    second_bound,
    triangle_cap,
    triangle_lower,
    upper_bound_constant,
)
from .construct import (
    conjectured_max_objective,
    conjectured_min_antichain,
    construction_objective,
    general_graph,
    l4_graph,
)
from .duality import (
    AdmissibleAntichain,
    canonical_antichain,
    enumerate_admissible,
    graph_of,
    is_k_saturated,
    is_k_sparse,
    is_maximal_k_antichain,
    is_strongly_maximal,
    min_antichain_for_graph,
    objective,
    strong_maximality_criterion,
    unsaturated_cliques,
)
from .graph import (
    Graph,
    count_k_cliques,
    edge_count,
    from_edges,
    graph_from_json,
    graph_to_json,
    is_clique,
    k_cliques,
    nonedges,
    to_dot,
    triangle_count,
)
from .search import (
    SearchResult,
    WitnessReport,
    decode_graph,
    encode_graph,
    search_exact,
    table_reproduce,
    table_rows,
    verify_witness,
)
from .setfam import (
    DuplicateMemberError,
    KSpec,
    PointSet,
    SetFamily,
    dual,
    family_from_json,
    family_to_json,
    format_family,
    is_antichain,
    is_css,
    is_k_antichain,
    parse_family,
    profile,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleAntichain",
    "DuplicateMemberError",
    "Graph",
    "KSpec",
    "PointSet",
    "SearchResult",
    "SetFamily",
    "WitnessReport",
    "antichain_coeff",
    "antichain_lower_coeff",
    "canonical_antichain",
    "conjectured_max_objective",
    "conjectured_min_antichain",
    "construction_objective",
    "count_k_cliques",
    "critical_density",
    "decode_graph",
    "dual",
    "edge_count",
    "encode_graph",
    "enumerate_admissible",
    "family_from_json",
    "family_to_json",
    "first_bound",
    "format_family",
    "from_edges",
    "general_graph",
    "graph_from_json",
    "graph_of",
    "graph_to_json",
    "is_antichain",
    "is_clique",
    "is_css",
    "is_k_antichain",
    "is_k_saturated",
    "is_k_sparse",
    "is_maximal_k_antichain",
    "is_strongly_maximal",
    "k_cliques",
    "l4_graph",
    "min_antichain_for_graph",
    "nonedges",
    "objective",
    "objective_coeff",
    "parse_family",
    "profile",
    "search_exact",
    "second_bound",
    "strong_maximality_criterion",
    "table_reproduce",
    "table_rows",
    "to_dot",
    "triangle_cap",
    "triangle_count",
    "triangle_lower",
    "unsaturated_cliques",
    "upper_bound_constant",
    "verify_witness",
]
