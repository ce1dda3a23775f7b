"""Exact permanental polynomials of graphs, oriented graphs and skew-symmetric matrices."""

from .graph import (
    Cycle,
    Graph,
    GraphError,
    OrientedGraph,
    SkewMatrix,
    WeightedOrientedGraph,
    bipartition,
    blocks,
    count_matchings,
    enumerate_cycles,
    from_skew_matrix,
    generalized_skew_adjacency,
    has_even_cycle,
    is_forest,
    orient,
    skew_adjacency,
)
from .formats import FormatError, parse_edge_list, parse_graph6, write_graph6
from .permanent import (
    perm_poly_direct,
    permanent_cycle_cover,
    permanent_naive,
    permanent_ryser,
    permanent_skew_even,
)
from .poly import Poly, bipartite_by_odd_coeffs, char_poly, check_i_relation, matching_polynomial
from .sachs import (
    CycleParity,
    SachsSubgraph,
    cycle_parity,
    enumerate_sachs,
    perm_poly_adjacency_sachs,
    perm_poly_skew_sachs,
    perm_poly_weighted_skew_sachs,
    perm_poly_weighted_undirected_sachs,
)
from .spectra import RootMultiset, multiset_equal, roots, scale_spectrum_by_i

__version__ = "0.1.0"
