"""Seeded evaluation corpora used by the verify command and the test suite.

Everything is a pure function of the master seed, so repeated runs see
identical instances.
"""

from __future__ import annotations

from random import Random

from .graphs import Graph, gen_random_graph
from .instance import SetSystem, gen_random
from .intervals import IntervalSet, gen_random_intervals

DEFAULT_SEED = 20240811

_DENSITIES = (0.2, 0.4, 0.7)


def _sub_seed(seed: int, tag: str, idx: int) -> int:
    return Random(f"{seed}:{tag}:{idx}").getrandbits(48)


def setcover_corpus(seed: int = DEFAULT_SEED, count: int = 200) -> list[SetSystem]:
    """Random unweighted instances with n <= 10, k <= 6, cycling densities."""
    out = []
    for idx in range(count):
        rng = Random(f"{seed}:cover-shape:{idx}")
        n = rng.randint(4, 10)
        k = rng.randint(2, 6)
        density = _DENSITIES[idx % len(_DENSITIES)]
        out.append(gen_random(n, k, density, seed=_sub_seed(seed, "cover", idx)))
    return out


def weighted_corpus(seed: int = DEFAULT_SEED, count: int = 100) -> list[SetSystem]:
    """Integer-weighted instances (weights 1..3) for reduction checks."""
    out = []
    for idx in range(count):
        rng = Random(f"{seed}:weighted-shape:{idx}")
        n = rng.randint(3, 8)
        k = rng.randint(2, 5)
        density = _DENSITIES[idx % len(_DENSITIES)]
        base = gen_random(n, k, density, seed=_sub_seed(seed, "weighted", idx))
        weights = tuple(rng.randint(1, 3) for _ in range(base.n))
        out.append(SetSystem(n=base.n, sets=base.sets, weights=weights))
    return out


def graph_corpus(seed: int = DEFAULT_SEED, count: int = 100,
                 edge_prob: float = 0.3) -> list[Graph]:
    """Random graphs with n <= 10 for the coloring checks."""
    out = []
    for idx in range(count):
        rng = Random(f"{seed}:graph-shape:{idx}")
        n = rng.randint(4, 10)
        out.append(gen_random_graph(n, edge_prob, seed=_sub_seed(seed, "graph", idx)))
    return out


def interval_corpus(seed: int = DEFAULT_SEED, count: int = 100) -> list[IntervalSet]:
    """Random interval instances with n <= 10 for the partition checks."""
    out = []
    for idx in range(count):
        rng = Random(f"{seed}:interval-shape:{idx}")
        n = rng.randint(3, 10)
        out.append(gen_random_intervals(n, seed=_sub_seed(seed, "interval", idx)))
    return out
