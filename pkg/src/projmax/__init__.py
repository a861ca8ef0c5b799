"""Randomized projection toolkit for Euclidean maximization and diversity
problems: seeded Gaussian maps, exact small-instance oracles, scalable
heuristics, a doubling-dimension estimator, and an experiment harness."""

from .dataset import (
    PointSet,
    diameter,
    discrete_center,
    distance,
    generate,
    load,
    store,
)
from .diversity import (
    KCenterResult,
    gonzalez,
    k_center_exact,
    remote_select,
    remote_value,
)
from .doubling import DoublingEstimate, estimate_doubling_dim, greedy_net
from .harness import (
    DatasetSpec,
    ProblemSpec,
    SweepConfig,
    run_speedup,
    run_sweep,
    run_threshold,
)
from .matching import (
    HyperMatching,
    Matching,
    matching_value,
    max_hypermatching,
    max_matching_bipartite,
    max_matching_exact,
    max_matching_greedy,
    max_matching_line,
)
from .median import geometric_median, median_cost
from .projection import ProjectionMap, apply_map, derive_seed, make_jl_map, make_line_map
from .spanning_coverage import (
    EdgeSet,
    FSpec,
    Selection,
    k_coverage_select,
    k_coverage_value,
    large_opt_select,
    large_opt_value,
    max_spanning_tree,
)
from .tours import Tour, decompose_tour, max_tsp_exact, max_tsp_greedy, random_tour_best, tour_value

__version__ = "0.1.0"
