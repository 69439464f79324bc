"""cubicmatch: exact perfect-matching structure analysis of small cubic
bridgeless multigraphs.

The package provides exact matching counting under edge constraints,
tight-cut (brick and brace) decomposition with polytope dimensions,
cyclic edge-connectivity, the klee-graph triangle calculus, exhaustive
catalogs of small cubic bridgeless multigraphs, and a verification
harness that checks every per-instance bound over those catalogs.
"""

from .brick_brace import (
    BRACE,
    BRICK,
    Decomposition,
    decompose,
    find_nontrivial_tight_cut,
    is_bicritical,
    is_brick,
    is_tight,
    pm_affine_dimension,
    polytope_dimension,
    polytope_membership,
)
from .connectivity import (
    NO_CYCLIC_CUT,
    ConnectivityReport,
    bridges,
    connectivity_report,
    cyclic_edge_connectivity,
    cyclically_edge_connected_at_least,
    edge_connectivity,
    enumerate_cuts,
    is_cyclic_cut,
    vertex_connectivity,
    vertex_connectivity_at_most,
)
from .formats import EDGE_LIST, GRAPH6, SPARSE6, ParseError, parse, write
from .harness import (
    BipartiteBoundTable,
    BoundReport,
    bipartite_companion_check,
    bound_table,
    bridgeless_cubic_catalog,
    brute_force_cubic_multigraphs,
    generate_catalog,
    scarce_matching_graphs,
    verify_catalog,
    verify_graph,
)
from .klee import (
    KleeStats,
    KleeVertexType,
    core,
    enumerate_klee,
    expand_and_check,
    is_klee,
    is_nice_cut,
    klee_stats,
    vertex_type,
)
from .matching import (
    BoundaryProfile,
    MatchingCertificate,
    MatchingProfile,
    TutteBarrier,
    boundary_profile,
    count_avoiding,
    count_perfect_matchings,
    count_perfect_matchings_oracle,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
    matching_profile,
)
from .multigraph import (
    Cut,
    MultiGraph,
    canonical_form,
    contract,
    four_cut_completion_edges,
    four_cut_completion_vertices,
    from_canonical,
    from_edge_list,
    glue,
    make_cut,
    replace_vertex_with_triangle,
)

__version__ = "0.1.0"
