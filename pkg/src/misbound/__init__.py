"""Maximal independent sets and the Moon-Moser bound g(n)."""
from .bound import branch_bound, g, g_is_nondecreasing, max_product_partition, sandwich_check
from .enumeration import (
    EnumAlgorithm,
    EnumStats,
    MisReport,
    count_mis,
    enumerate_branching,
    enumerate_mis,
    enumerate_oracle,
    enumerate_pivot,
    is_independent,
    is_maximal_independent,
)
from .errors import BoundViolation, CapacityError, Graph6Error, GraphValidationError, MisboundError
from .formats import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .graph import (
    Graph,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    delete_closed_neighborhood,
    disjoint_union,
    empty_graph,
    from_edges,
    lift,
    min_degree_vertex,
    moon_moser,
    path_graph,
)
from .verification import BoundCertificate, extremal_census, spot_check_random, sweep_all_graphs

__version__ = "0.1.0"
