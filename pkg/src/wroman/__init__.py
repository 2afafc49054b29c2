"""Weighted Roman domination: exact solvers, closed forms, bounds and checks."""

from .bounds import (
    BoundsReport,
    bounds_report,
    degree_lower_bound,
    is_thp_extremal,
    nordhaus_gaddum,
    sandwich_check,
    weight_upper_bound,
)
from .differential import (
    DifferentialResult,
    boundary,
    check_duality,
    differential_of_graph,
    differential_of_set,
)
from .errors import (
    ArityMismatchError,
    DuplicateEdgeError,
    GraphError,
    InapplicableError,
    LoopEdgeError,
    NonPositiveWeightError,
    ParseError,
    SizeGuardError,
    TheoremViolation,
    VertexRangeError,
)
from .families import (
    CycleConstruction,
    cycle_constructions,
    cycle_upper_bound,
    gamma_wR_complete,
    gamma_wR_complete_bipartite,
    gamma_wR_equal_cycle,
    gamma_wR_star,
)
from .generators import generate
from .graph import (
    WeightedGraph,
    build_graph,
    complement,
    induced_subgraph,
    is_normed,
    max_weighted_degree,
    min_weighted_degree,
    total_weight,
    weighted_degree,
)
from .roman import RomanLabeling, is_dominating, is_wrdf, labeling_weight
from .solvers import (
    SolveOptions,
    SolveResult,
    enumerate_all_optima,
    gamma_w_bruteforce,
    gamma_wR_branch_and_bound,
    gamma_wR_bruteforce,
    gamma_wR_dp,
    gamma_wR_via_differential,
    solve,
)
from .verify import VerificationReport, verify_corpus, verify_cycle_theorems, verify_graph

__version__ = "0.1.0"
