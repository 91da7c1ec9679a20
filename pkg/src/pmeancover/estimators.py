"""scikit-learn style estimators wrapping the partition solvers.

Each estimator follows the clustering convention: ``fit(X)`` solves the
instance and exposes the partition through ``labels_`` (plus solver
specific attributes), ``fit_predict`` returns the labels directly, and
``get_params`` / ``set_params`` / ``clone`` work as usual.  ``X`` may be a
domain object (:class:`SetSystem`, :class:`Graph`, :class:`IntervalSet`),
its dict form, or a plain array (incidence matrix, adjacency matrix, or
(n, 2) endpoint array respectively).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .exact import DEFAULT_LIMIT_K, DEFAULT_LIMIT_N, ExactSolver
from .greedy import greedy_cover
from .instance import part_sizes
from .intervals import interval_clique_partition
from .graphs import maxis_coloring
from .objectives import CostModel, evaluate_cover, parse_model
from .validation import as_graph, as_interval_set, as_set_system


def _resolve_model(model) -> CostModel:
    if isinstance(model, CostModel):
        return model
    return parse_model(model)


class GreedySetCover(ClusterMixin, BaseEstimator):
    """Greedy cover of a set system.

    Parameters
    ----------
    model : str or CostModel, default="pmean:1"
        Objective used only for reporting ``objective_``; the greedy
        choices themselves are model-independent.

    Attributes
    ----------
    labels_ : ndarray of shape (n,)
        Index of the subset each element is assigned to.
    part_sizes_ : ndarray of shape (k,)
        Weighted part sizes; zeros for unused subsets.
    trace_ : tuple of (round, subset, gain)
        Greedy iteration trace.
    objective_ : float
        Objective of the greedy cover under ``model``.
    """

    def __init__(self, model="pmean:1"):
        self.model = model

    def fit(self, X, y=None, sample_weight=None):
        system = as_set_system(X, weights=sample_weight)
        model = _resolve_model(self.model)
        result = greedy_cover(system)
        self.set_system_ = system
        self.labels_ = np.asarray(result.cover.assignment, dtype=int)
        self.part_sizes_ = np.asarray(
            [float(c) for c in part_sizes(system, result.cover)])
        self.trace_ = result.trace
        self.n_rounds_ = len(result.trace)
        self.objective_ = evaluate_cover(system, result.cover, model).value
        return self


class ExactSetCover(ClusterMixin, BaseEstimator):
    """Model-optimal cover by exhaustive search (desk-scale instances).

    Parameters
    ----------
    model : str or CostModel, default="pmean:1"
    limit_n, limit_k : int or None
        Size caps; instances beyond them are refused.
    prune : bool, default=True
        Admissible-bound pruning; disabling it never changes the result.
    """

    def __init__(self, model="pmean:1", limit_n=DEFAULT_LIMIT_N,
                 limit_k=DEFAULT_LIMIT_K, prune=True):
        self.model = model
        self.limit_n = limit_n
        self.limit_k = limit_k
        self.prune = prune

    def fit(self, X, y=None, sample_weight=None):
        system = as_set_system(X, weights=sample_weight)
        model = _resolve_model(self.model)
        result = ExactSolver(system, limit_n=self.limit_n,
                             limit_k=self.limit_k).solve(model, prune=self.prune)
        self.set_system_ = system
        self.labels_ = np.asarray(result.cover.assignment, dtype=int)
        self.part_sizes_ = np.asarray(
            [float(c) for c in part_sizes(system, result.cover)])
        self.objective_ = result.objective.value
        self.n_nodes_ = result.nodes
        self.optimal_ = result.optimal
        return self


class MaxISColoring(ClusterMixin, BaseEstimator):
    """Proper coloring by iterated independent-set removal.

    Parameters
    ----------
    is_solver : {"exact", "greedy"}, default="exact"
        Exact maximum independent sets (capped at 40 vertices) or the
        minimum-degree greedy heuristic.
    """

    def __init__(self, is_solver="exact"):
        self.is_solver = is_solver

    def fit(self, X, y=None):
        graph = as_graph(X)
        result = maxis_coloring(graph, is_solver=self.is_solver)
        self.graph_ = graph
        self.labels_ = np.asarray(result.labels, dtype=int)
        self.classes_ = result.classes
        self.n_colors_ = len(result.classes)
        return self


class IntervalCliquePartition(ClusterMixin, BaseEstimator):
    """Exact clique partition of intervals maximizing the power sum.

    Parameters
    ----------
    p : float, default=1.0
        Exponent; parts of size c score c**(p + 1).  Must be >= 0
        (p = 0 scores c*ln(c)).
    """

    def __init__(self, p=1.0):
        self.p = p

    def fit(self, X, y=None):
        intervals = as_interval_set(X)
        result = interval_clique_partition(intervals, self.p)
        self.interval_set_ = intervals
        self.labels_ = np.asarray(result.labels, dtype=int)
        self.classes_ = result.classes
        self.part_sizes_ = np.asarray(result.sizes, dtype=int)
        self.objective_ = result.value
        return self
