"""cagekit: exhaustive search for small regular graphs with a prescribed
girth and no cycles one longer, plus the voltage-lift and double-cover
machinery used to build and certify them."""

from .graph import (
    Graph,
    CycleQueryResult,
    girth,
    odd_girth,
    distance,
    has_cycle_of_length,
    cycles_of_length,
    shortest_cycle,
    is_bipartite,
    is_connected,
    is_regular,
)
from .graph6 import Graph6Error, decode, encode, iter_decode, write_lines
from .canon import (
    DedupStore,
    automorphism_group_order,
    canonical_form,
    canonical_graph,
    is_isomorphic,
    vertex_orbits,
)
from .bounds import (
    BoundsReport,
    moore_bound,
    prop1_lower_bound,
    prop2_divisibility_holds,
    refined_lower_bound,
)
from .generator import GenerationReport, build_moore_tree, generate_all, is_valid_target
from .groups import Group, cyclic_group, dihedral_group, direct_product, load_cayley_table
from .covers import (
    DartGraph,
    K13Loop,
    VoltageAssignment,
    canonical_double_cover,
    k13loop_assignment,
    k13loop_triples,
    lift_cycle_check,
    odd_girth_via_cover,
    search_k13loop_lifts,
    voltage_lift,
)
from .excision import iter_reductions, reduce_by_cycle

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "CycleQueryResult",
    "girth",
    "odd_girth",
    "distance",
    "has_cycle_of_length",
    "cycles_of_length",
    "shortest_cycle",
    "is_bipartite",
    "is_connected",
    "is_regular",
    "Graph6Error",
    "decode",
    "encode",
    "iter_decode",
    "write_lines",
    "DedupStore",
    "automorphism_group_order",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "vertex_orbits",
    "BoundsReport",
    "moore_bound",
    "prop1_lower_bound",
    "prop2_divisibility_holds",
    "refined_lower_bound",
    "GenerationReport",
    "build_moore_tree",
    "generate_all",
    "is_valid_target",
    "Group",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "load_cayley_table",
    "DartGraph",
    "K13Loop",
    "VoltageAssignment",
    "canonical_double_cover",
    "k13loop_assignment",
    "k13loop_triples",
    "lift_cycle_check",
    "odd_girth_via_cover",
    "search_k13loop_lifts",
    "voltage_lift",
    "iter_reductions",
    "reduce_by_cycle",
    "__version__",
]
