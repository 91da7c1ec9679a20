"""Input validation helpers for the estimator layer.

Coerce array-likes into the package's domain types: a binary incidence
matrix (elements x subsets) into a :class:`SetSystem`, a symmetric binary
adjacency matrix into a :class:`Graph`, and an (n, 2) array of endpoints
into an :class:`IntervalSet`.  Domain objects and their dict forms pass
through unchanged.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph
from .instance import InstanceError, SetSystem
from .intervals import IntervalSet


def incidence_to_setsystem(matrix, weights=None) -> SetSystem:
    """Build a set system from an (n elements, k subsets) 0/1 matrix."""
    m = np.asarray(matrix)
    if m.ndim != 2:
        raise InstanceError(f"incidence matrix must be 2d, got shape {m.shape}")
    values = np.unique(m)
    if not np.isin(values, (0, 1, False, True)).all():
        raise InstanceError("incidence matrix entries must be 0/1")
    n, k = m.shape
    sets = tuple(tuple(int(v) for v in np.flatnonzero(m[:, j])) for j in range(k))
    return SetSystem(n=n, sets=sets, weights=weights)


def as_set_system(X, weights=None) -> SetSystem:
    """Coerce an estimator input into a validated :class:`SetSystem`."""
    if isinstance(X, SetSystem):
        if weights is None:
            return X
        return SetSystem(n=X.n, sets=X.sets, weights=tuple(weights), names=X.names)
    if isinstance(X, dict):
        system = SetSystem.from_dict(X)
        if weights is not None:
            system = SetSystem(n=system.n, sets=system.sets, weights=tuple(weights),
                               names=system.names)
        return system
    return incidence_to_setsystem(X, weights=tuple(weights) if weights is not None else None)


def adjacency_to_graph(matrix) -> Graph:
    """Build a graph from a symmetric 0/1 adjacency matrix."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {m.shape}")
    values = np.unique(m)
    if not np.isin(values, (0, 1, False, True)).all():
        raise ValueError("adjacency matrix entries must be 0/1")
    if (m != m.T).any():
        raise ValueError("adjacency matrix must be symmetric")
    n = m.shape[0]
    edges = [(int(u), int(v)) for u in range(n) for v in range(u + 1, n) if m[u, v]]
    return Graph.from_edges(n, edges)


def as_graph(X) -> Graph:
    if isinstance(X, Graph):
        return X
    if isinstance(X, dict):
        return Graph.from_edges(X["n"], X["edges"])
    return adjacency_to_graph(X)


def as_interval_set(X) -> IntervalSet:
    if isinstance(X, IntervalSet):
        return X
    if isinstance(X, dict):
        return IntervalSet(tuple(tuple(pair) for pair in X["intervals"]))
    m = np.asarray(X, dtype=float)
    if m.ndim != 2 or m.shape[1] != 2:
        raise ValueError(f"intervals must be an (n, 2) array, got shape {m.shape}")
    return IntervalSet(tuple((float(lo), float(hi)) for lo, hi in m))
