"""Solvers and bound evaluators for mean-of-part-sizes set cover problems.

Functional core: :mod:`pmeancover.instance`, :mod:`pmeancover.objectives`,
:mod:`pmeancover.greedy`, :mod:`pmeancover.exact`, :mod:`pmeancover.graphs`,
:mod:`pmeancover.intervals`, :mod:`pmeancover.analysis`.  The estimator
classes in :mod:`pmeancover.estimators` wrap the solvers in the
scikit-learn ``fit`` / ``labels_`` convention.
"""

from .analysis import (
    BoundReport,
    dominates,
    harmonic_number,
    inapprox_gap,
    power_sum_lower_margin,
    ratio_asymptotic,
    ratio_exact,
    ratio_general_cost,
    ratio_negative,
    zeta,
)
from .exact import ExactResult, ExactSolver, SizeCapError, exact_cover, exact_maxmin
from .graphs import (
    ColoringResult,
    Graph,
    complement_graph,
    exact_mis,
    gen_random_graph,
    graph_to_setsystem,
    greedy_mis,
    is_proper_coloring,
    load_graph,
    maxis_coloring,
)
from .greedy import GreedyResult, greedy_cover, greedy_value
from .instance import (
    Cover,
    CoverError,
    ExpandedInstance,
    InstanceError,
    ParseError,
    SetSystem,
    cover_report,
    element_part_sizes,
    expand_weighted,
    gen_random,
    load_instance,
    part_sizes,
    save_instance,
    validate_cover,
)
from .intervals import (
    IntervalPartition,
    IntervalSet,
    gen_random_intervals,
    interval_clique_partition,
    load_intervals,
    partition_value,
)
from .objectives import (
    ConcaveTable,
    CostModel,
    Entropy,
    MAX_MIN,
    MAX_PART,
    ObjectiveValue,
    PMean,
    RentOrBuy,
    Unit,
    eval_concave,
    eval_entropy,
    eval_geometric,
    eval_max,
    eval_maxmin,
    eval_pmean,
    eval_rob,
    eval_unit,
    evaluate_cover,
    evaluate_sizes,
    parse_model,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
