"""Strong edge colorings and induced matchings of tree-cographs and
permutation graphs, with exact brute-force oracles for cross-verification.

The linear fast paths (`sci`, `im`, `im_value`) work on decomposition
trees; `strong_coloring` and `strong_color_permutation` produce optimal
certificates; everything in `oracle` exists to falsify the rest.
"""

from .chordal import (
    PerfectEliminationError,
    chordal_coloring,
    is_chordal,
    is_perfect_elimination_ordering,
    lexbfs_order,
)
from .decomposition import (
    CotreeLeaf,
    DecompositionError,
    DecompositionTree,
    JoinNode,
    NodeSummary,
    TreeLeaf,
    UnionNode,
    parse_decomposition,
    random_labeled_tree,
    random_tree_cograph,
    realize,
    serialize_decomposition,
    tree_from_prufer,
)
from .graph import (
    Graph,
    GraphError,
    SquaredLinegraph,
    StrongEdgeColoring,
    build_graph,
    complement,
    graph_from_text,
    graph_to_text,
    is_induced_matching,
    is_strong_edge_coloring,
    is_tree,
    square_of_linegraph,
)
from .induced_matching import (
    InducedMatchingResult,
    im,
    im_tree,
    im_tree_value,
    im_value,
)
from .oracle import (
    BudgetExceededError,
    OracleReport,
    chromatic_number_exhaustive,
    exact_chromatic_number,
    exact_max_clique,
    exact_max_independent_set,
    has_induced_cycle_at_least,
    is_clique,
    is_ptolemaic,
    max_clique_exhaustive,
    max_independent_set_exhaustive,
)
from .permutation import (
    PermutationDiagram,
    PermutationError,
    Trapezoid,
    greedy_trapezoid_coloring,
    parse_permutation,
    permutation_graph,
    strong_color_permutation,
    trapezoid_model,
    trapezoids_intersect,
)
from .strong_chromatic import SChiResult, sci, sci_cotree, sci_tree, strong_coloring

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CotreeLeaf",
    "DecompositionError",
    "DecompositionTree",
    "Graph",
    "GraphError",
    "InducedMatchingResult",
    "JoinNode",
    "NodeSummary",
    "OracleReport",
    "PerfectEliminationError",
    "PermutationDiagram",
    "PermutationError",
    "SChiResult",
    "SquaredLinegraph",
    "StrongEdgeColoring",
    "Trapezoid",
    "TreeLeaf",
    "UnionNode",
    "build_graph",
    "chordal_coloring",
    "chromatic_number_exhaustive",
    "complement",
    "exact_chromatic_number",
    "exact_max_clique",
    "exact_max_independent_set",
    "graph_from_text",
    "graph_to_text",
    "greedy_trapezoid_coloring",
    "has_induced_cycle_at_least",
    "im",
    "im_tree",
    "im_tree_value",
    "im_value",
    "is_chordal",
    "is_clique",
    "is_induced_matching",
    "is_perfect_elimination_ordering",
    "is_ptolemaic",
    "is_strong_edge_coloring",
    "is_tree",
    "lexbfs_order",
    "max_clique_exhaustive",
    "max_independent_set_exhaustive",
    "parse_decomposition",
    "parse_permutation",
    "permutation_graph",
    "random_labeled_tree",
    "random_tree_cograph",
    "realize",
    "sci",
    "sci_cotree",
    "sci_tree",
    "serialize_decomposition",
    "square_of_linegraph",
    "strong_color_permutation",
    "strong_coloring",
    "trapezoid_model",
    "trapezoids_intersect",
    "tree_from_prufer",
]
