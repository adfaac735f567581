"""Walk-based centralities and neighbour-average paradox diagnostics.

The package answers one family of questions: for a node measure x on a
graph, does the edge-weighted neighbour average of x dominate the plain
node average, and when can that be certified in advance?  Everything
else here (graph container, power iteration, walk counting, random
families, the CLI) exists to make those answers exact where possible
and reproducible everywhere.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    GraphError,
    ParameterError,
    TheoremViolationError,
    WalkParadoxError,
)
from .graph import (
    Graph,
    NodeVector,
    build,
    degree_vector,
    in_degree_vector,
    is_connected,
    is_regular,
    is_strongly_connected,
    out_degree_vector,
    transpose,
    validate_graph,
)
from .spectral import (
    EigenResult,
    SeriesCoefficients,
    apply,
    dominant_eigenpair,
    even_action,
    exp_action,
    katz_action,
    mixed_walk_count,
    odd_action,
    series_action,
    spectral_radius_estimate,
    walk_count,
    walk_counts_through,
)
from .centrality import (
    CentralitySpec,
    KatzDegreeDiagnostic,
    KatzEigenvectorDiagnostic,
    compute as compute_centrality,
    katz_degree_limit_check,
    katz_eigenvector_limit_check,
)
from .paradox import (
    DirectedDegreeReport,
    ParadoxReport,
    classic_friendship_paradox,
    directed_degree_report,
    neighbour_average,
    node_average,
    paradox_report,
)
from .conditions import (
    ConditionReport,
    check_lagarias,
    check_mixed_walk_growth,
    check_spectral_directed,
    check_walk_growth,
    first_order_in_degree_term,
    lagarias_scan,
)
from .generators import (
    FamilySpec,
    barabasi_albert,
    complete,
    cycle,
    directed_cycle,
    enumerate_connected,
    erdos_renyi,
    erdos_renyi_directed,
    figure1,
    hub_cycle,
    k_regular_random,
    make,
    make_connected,
    path,
    star_in,
    star_out,
    star_undirected,
    three_node,
)
from .explore import (
    SearchOutcome,
    SuiteSummary,
    SweepResult,
    ViolationRecord,
    build_power_series_counterexample,
    exhaustive_lagarias_search,
    katz_alpha_sweep,
    random_theorem_suite,
    replay_violation,
    search_lagarias_violation,
)
from .edgelist import format_edge_list, parse_edge_list
from .reports import (
    SCHEMA_VERSION,
    canonical_json,
    document,
    graph_summary,
    parse_document,
    payload,
    search_csv,
    sweep_csv,
)
from .rng import CounterRng, derive_seed

__all__ = [
    "__version__",
    # errors
    "WalkParadoxError", "GraphError", "ParameterError",
    "ConvergenceError", "TheoremViolationError",
    # graphs
    "Graph", "NodeVector", "build", "transpose", "validate_graph",
    "degree_vector", "out_degree_vector", "in_degree_vector",
    "is_connected", "is_strongly_connected", "is_regular",
    # spectral actions and walk counts
    "EigenResult", "SeriesCoefficients", "apply", "dominant_eigenpair",
    "spectral_radius_estimate", "katz_action", "exp_action", "odd_action",
    "even_action", "series_action", "walk_count", "walk_counts_through",
    "mixed_walk_count",
    # measures
    "CentralitySpec", "compute_centrality", "katz_degree_limit_check",
    "katz_eigenvector_limit_check", "KatzDegreeDiagnostic",
    "KatzEigenvectorDiagnostic",
    # paradox reports
    "ParadoxReport", "DirectedDegreeReport", "paradox_report",
    "classic_friendship_paradox", "directed_degree_report",
    "node_average", "neighbour_average",
    # conditions
    "ConditionReport", "check_walk_growth", "check_lagarias",
    "check_mixed_walk_growth", "check_spectral_directed",
    "first_order_in_degree_term", "lagarias_scan",
    # families
    "FamilySpec", "make", "make_connected", "enumerate_connected",
    "figure1", "path", "cycle", "complete", "star_undirected",
    "star_out", "star_in", "hub_cycle", "three_node", "directed_cycle",
    "k_regular_random", "erdos_renyi", "erdos_renyi_directed",
    "barabasi_albert",
    # exploration
    "SweepResult", "katz_alpha_sweep", "ViolationRecord", "SearchOutcome",
    "search_lagarias_violation", "exhaustive_lagarias_search",
    "replay_violation", "build_power_series_counterexample",
    "SuiteSummary", "random_theorem_suite",
    # serialization
    "parse_edge_list", "format_edge_list", "SCHEMA_VERSION",
    "canonical_json", "document", "payload", "graph_summary",
    "parse_document", "sweep_csv", "search_csv",
    # randomness
    "CounterRng", "derive_seed",
]
