"""Exact fixing numbers, fractional fixing numbers and related symmetry
invariants of finite simple graphs."""

from .autgroup import automorphisms, brute_force_automorphisms
from .errors import CapExceeded, GraphError
from .fixing import (
    active_and_core,
    edge_bound_check,
    f_min,
    fixed_graph,
    fixed_neighborhood,
    fixed_number,
    fixing_neighborhood,
    fixing_number,
    is_fixing_set,
    resolving_neighborhood,
    upper_fixing_number,
)
from .graph import Graph, are_twins, delete_vertex, distance_matrix, from_edge_list, twin_partition
from .lp import (
    CoverLp,
    fractional_fixing_number,
    fractional_metric_dimension,
    integral_cover_optimum,
    solve_cover_lp,
)

__version__ = "0.1.0"
