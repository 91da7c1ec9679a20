"""Exponential-time exact cover oracles for desk-scale verification.

The solver searches over partitions of the uncovered-element bitmask: the
part containing the lowest uncovered element is chosen first, as a subset
of one of the sets containing that element, and the remainder is solved
recursively with memoization.  Two parts assigned to the same subset merge
into one, which never hurts any objective in this package (part scores are
superadditive for the maximized sums and subadditive for the minimized
ones), so the optimum over such partitions equals the optimum over covers.

Admissible bounds allow skipping candidate parts that provably cannot beat
the best alternative already found; with strict improvement updates the
returned cover is identical with pruning on or off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .instance import Cover, SetSystem
from .objectives import (
    ConcaveTable,
    CostModel,
    Entropy,
    ObjectiveValue,
    PMean,
    RentOrBuy,
    Unit,
    evaluate_cover,
)

DEFAULT_LIMIT_N = 12
DEFAULT_LIMIT_K = 10


class SizeCapError(RuntimeError):
    """Instance exceeds the configured exact-search size caps."""


@dataclass(frozen=True)
class ExactResult:
    cover: Cover
    objective: ObjectiveValue
    nodes: int
    transitions: int
    optimal: bool = True


class _SearchSpec:
    """Per-part score, combiner and orientation for one cost model."""

    __slots__ = ("score", "score_bound", "combiner", "maximize")

    def __init__(self, score, combiner, maximize, score_bound=None):
        self.score = score
        self.score_bound = score_bound or score
        self.combiner = combiner  # 'sum' | 'min' | 'max'
        self.maximize = maximize


def _search_spec(model: CostModel, total_weight: float) -> _SearchSpec:
    if isinstance(model, PMean):
        p = model.p
        if p == math.inf:
            return _SearchSpec(lambda w: w, "max", True)
        if p == -math.inf:
            return _SearchSpec(lambda w: w, "min", True)
        if p == 0:
            # geometric mean: maximize sum of w ln w
            return _SearchSpec(lambda w: w * math.log(w), "sum", True)
        if p > 0:
            return _SearchSpec(lambda w: w ** (p + 1), "sum", True)
        # maximizing the mean for p < 0 minimizes the power sum
        return _SearchSpec(lambda w: w ** (p + 1), "sum", False)
    if isinstance(model, Entropy):
        # entropy is log n minus the log geometric mean
        return _SearchSpec(lambda w: w * math.log(w), "sum", True)
    if isinstance(model, Unit):
        return _SearchSpec(lambda w: 1.0, "sum", False)
    if isinstance(model, RentOrBuy):
        threshold = model.beta * total_weight
        return _SearchSpec(lambda w: min(1.0, w / threshold), "sum", False)
    if isinstance(model, ConcaveTable):
        table = model.values
        m = len(table)

        def score(w):
            c = int(w)
            if c != w:
                raise ValueError(f"part weight {w} is not integral; expand the instance first")
            if c > m:
                raise ValueError(f"part size {c} exceeds table domain 1..{m}")
            return table[c - 1]

        # linear continuation keeps the single-part value a lower bound
        last_diff = table[-1] - (table[-2] if m > 1 else 0.0)

        def score_bound(w):
            c = int(w)
            if c != w:
                raise ValueError(f"part weight {w} is not integral; expand the instance first")
            if c <= m:
                return table[c - 1]
            return table[-1] + (c - m) * last_diff

        return _SearchSpec(score, "sum", False, score_bound=score_bound)
    raise TypeError(f"unsupported cost model {model!r}")


class ExactSolver:
    """Reusable exact solver for one instance.

    The candidate-part enumeration is cached per uncovered mask, so
    solving the same instance under several models shares that work.
    """

    def __init__(self, system: SetSystem,
                 limit_n: int | None = DEFAULT_LIMIT_N,
                 limit_k: int | None = DEFAULT_LIMIT_K):
        if limit_n is not None and system.n > limit_n:
            raise SizeCapError(f"n={system.n} exceeds exact-search cap {limit_n}")
        if limit_k is not None and system.k > limit_k:
            raise SizeCapError(f"k={system.k} exceeds exact-search cap {limit_k}")
        self.system = system
        if system.weights is None:
            self._elem_weight = [1.0] * system.n
        else:
            self._elem_weight = [float(w) for w in system.weights]
        self._sets_containing = [system.sets_containing(v) for v in range(system.n)]
        self._weight_cache: dict[int, float] = {0: 0.0}
        self._moves_cache: dict[int, tuple] = {}

    def _weight(self, mask: int) -> float:
        cached = self._weight_cache.get(mask)
        if cached is None:
            low = mask & -mask
            cached = self._elem_weight[low.bit_length() - 1] + self._weight(mask ^ low)
            self._weight_cache[mask] = cached
        return cached

    def _moves(self, mask: int) -> tuple:
        """Candidate parts for the lowest uncovered element of ``mask``.

        Each move is ``(set index, part mask, remainder mask, part weight)``;
        the order (ascending set index, then decreasing part mask) fixes
        the tie-break between equally good covers.
        """
        cached = self._moves_cache.get(mask)
        if cached is not None:
            return cached
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        moves = []
        for i in self._sets_containing[v]:
            rest_members = self.system.set_masks[i] & mask & ~vbit
            sub = rest_members
            while True:
                block = sub | vbit
                moves.append((i, block, mask ^ block, self._weight(block)))
                if sub == 0:
                    break
                sub = (sub - 1) & rest_members
        cached = tuple(moves)
        self._moves_cache[mask] = cached
        return cached

    def solve(self, model: CostModel, prune: bool = True) -> ExactResult:
        spec = _search_spec(model, float(self.system.total_weight))
        memo: dict[int, tuple[float, tuple[int, int] | None]] = {}
        transitions = 0

        if spec.combiner == "sum":
            identity = 0.0
            combine = lambda a, b: a + b
        elif spec.combiner == "min":
            identity = math.inf
            combine = min
        else:
            identity = -math.inf
            combine = max
        memo[0] = (identity, None)
        better = (lambda a, b: a > b) if spec.maximize else (lambda a, b: a < b)
        score = spec.score
        score_bound = spec.score_bound

        def search(mask: int) -> float:
            hit = memo.get(mask)
            if hit is not None:
                return hit[0]
            nonlocal transitions
            best = None
            best_choice = None
            for i, block, rest, w in self._moves(mask):
                transitions += 1
                s = score(w)
                if prune and best is not None:
                    optimistic = combine(s, score_bound(self._weight(rest))
                                         if rest else identity)
                    if not better(optimistic, best):
                        continue
                value = combine(s, search(rest))
                if best is None or better(value, best):
                    best = value
                    best_choice = (i, block)
            memo[mask] = (best, best_choice)
            return best

        full = (1 << self.system.n) - 1
        search(full)

        assignment = [-1] * self.system.n
        mask = full
        while mask:
            _, choice = memo[mask]
            i, block = choice
            m = block
            while m:
                v = (m & -m).bit_length() - 1
                assignment[v] = i
                m &= m - 1
            mask ^= block
        cover = Cover(tuple(assignment))
        if _wants_local_optimality(model):
            cover = _push_to_larger_parts(self.system, cover)
        return ExactResult(
            cover=cover,
            objective=evaluate_cover(self.system, cover, model),
            nodes=len(memo) - 1,
            transitions=transitions,
        )


def _wants_local_optimality(model: CostModel) -> bool:
    if isinstance(model, PMean):
        return model.p >= 0 or model.p == math.inf
    return isinstance(model, Entropy)


def _push_to_larger_parts(system: SetSystem, cover: Cover) -> Cover:
    """Move elements into strictly larger containing parts until stable.

    For the maximized means with p >= 0 every such move keeps the cover
    optimal (the size profile only becomes more unbalanced), so the result
    is an optimal cover that is also locally unimprovable.
    """
    assignment = list(cover.assignment)
    if system.weights is None:
        weights = [Fraction(1)] * system.n
    else:
        weights = list(system.weights)
    sizes = [Fraction(0)] * system.k
    for v, i in enumerate(assignment):
        sizes[i] += weights[v]
    moved = True
    while moved:
        moved = False
        for v in range(system.n):
            cur = assignment[v]
            for i in system.sets_containing(v):
                if i != cur and sizes[i] > sizes[cur]:
                    sizes[cur] -= weights[v]
                    sizes[i] += weights[v]
                    assignment[v] = i
                    moved = True
                    break
    return Cover(tuple(assignment))


def exact_cover(system: SetSystem, model: CostModel,
                limit_n: int | None = DEFAULT_LIMIT_N,
                limit_k: int | None = DEFAULT_LIMIT_K,
                prune: bool = True) -> ExactResult:
    """Model-optimal cover over all valid assignments (desk scale only).

    Refuses instances beyond the size caps rather than truncating the
    search.  The report carries the node and transition counts of the
    search and ``optimal=True``.
    """
    return ExactSolver(system, limit_n=limit_n, limit_k=limit_k).solve(model, prune=prune)


def exact_maxmin(system: SetSystem,
                 limit_n: int | None = DEFAULT_LIMIT_N,
                 limit_k: int | None = DEFAULT_LIMIT_K) -> ExactResult:
    """Cover maximizing the smallest nonempty part size (p -> -inf)."""
    return exact_cover(system, PMean(-math.inf), limit_n=limit_n, limit_k=limit_k)
