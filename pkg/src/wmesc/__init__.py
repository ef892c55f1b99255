"""Exact solver for the weighted mutually exclusive maximum set cover problem.

Pick pairwise-disjoint subsets of a weighted set family so that they
cover as many ground-set elements as possible and, among all such
selections, weigh as little as possible.
"""

from .analysis import (
    CSV_HEADER,
    LEAF_GROWTH_ROOT,
    BoundReport,
    Recurrence,
    bench_corpus,
    branching_root,
    check_bound,
)
from .generators import (
    GenConfig,
    SplitMix64,
    gen_degree_bounded,
    gen_path,
    gen_planted,
    gen_random,
    gen_ring,
)
from .graph import (
    IntersectionGraph,
    SubProblem,
    build_graph,
    components,
    max_degree_node,
    neighbor_closure,
    select_pivot_deg2,
    select_pivot_deg3,
)
from .instance import (
    DEFAULT_WEIGHT_TOL,
    FormatError,
    Instance,
    OverlapError,
    PackingInstance,
    Solution,
    better,
    evaluate,
    parse_instance,
    reduce_3set_packing,
    serialize_instance,
)
from .oracle import brute_force, brute_force_packing
from .solver import SolveStats, SolveTimeout, solve, solve_deg2, solve_deg3

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CSV_HEADER",
    "DEFAULT_WEIGHT_TOL",
    "FormatError",
    "GenConfig",
    "Instance",
    "IntersectionGraph",
    "LEAF_GROWTH_ROOT",
    "OverlapError",
    "PackingInstance",
    "Recurrence",
    "SolveStats",
    "SolveTimeout",
    "Solution",
    "SplitMix64",
    "SubProblem",
    "bench_corpus",
    "better",
    "branching_root",
    "brute_force",
    "brute_force_packing",
    "build_graph",
    "check_bound",
    "components",
    "evaluate",
    "gen_degree_bounded",
    "gen_path",
    "gen_planted",
    "gen_random",
    "gen_ring",
    "max_degree_node",
    "neighbor_closure",
    "parse_instance",
    "reduce_3set_packing",
    "select_pivot_deg2",
    "select_pivot_deg3",
    "serialize_instance",
    "solve",
    "solve_deg2",
    "solve_deg3",
]
