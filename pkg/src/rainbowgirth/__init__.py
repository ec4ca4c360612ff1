"""Short rainbow cycles in edge-colored graphs whose color classes are size-2
matchings, triangles or single edges: finders, exact oracle, extremal
instances and experiment harness."""

from .bounds import (
    GammaParams,
    ParameterSet,
    alpha_upper_reference,
    appendix_gamma_ok,
    eq1_lhs,
    feasible_params,
    gamma_threshold,
)
from .core import (
    ColorClass,
    ColoredGraph,
    CycleResult,
    build_colored_graph,
    classify_class,
    is_rainbow_cycle,
    parse_instance,
    serialize_instance,
)
from .finders import (
    TrialRecord,
    find_matching_edge_sampled,
    find_matchings_appendix,
    find_mixed,
    find_simplified,
    find_triangle_edge,
    heavy_vertices,
    repair_swap,
)
from .generators import InstanceSpec, gen_half_matchings_gadget, gen_rainbow_ncycle, gen_random_mixed
from .harness import ExperimentSpec, run_lemma_empirics, run_scaling
from .oracle import girth_bfs, rainbow_girth_exact
from .sparse_cycle import bs_bound, find_short_cycle

__version__ = "0.1.0"
