"""The greedy cover: repeatedly grab all uncovered elements of a best subset.

At every round the subset with maximum uncovered weight is chosen (ties go
to the lowest subset index) and all of its still-uncovered elements are
assigned to it.  The algorithm never consults the objective, so one run
serves every cost model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .instance import Cover, SetSystem
from .objectives import CostModel, ObjectiveValue, evaluate_cover


@dataclass(frozen=True)
class GreedyResult:
    """A greedy cover plus its iteration trace.

    ``trace`` rows are ``(round, subset index, gained weight)`` with
    0-based rounds; gained weights are non-increasing and equal the final
    part sizes of the used subsets.
    """

    cover: Cover
    trace: tuple[tuple[int, int, float], ...]


def greedy_cover(system: SetSystem) -> GreedyResult:
    """Run the greedy algorithm on a validated set system.

    Terminates in at most k rounds because the subset union is the whole
    ground set.  Elements are assigned exactly once, in the round they are
    first covered.
    """
    uncovered = (1 << system.n) - 1
    weights = system.weights
    assignment = [-1] * system.n
    trace = []
    round_idx = 0
    while uncovered:
        best_i = -1
        best_gain = None
        for i, mask in enumerate(system.set_masks):
            new = mask & uncovered
            if not new:
                continue
            if weights is None:
                gain = new.bit_count()
            else:
                gain = Fraction(0)
                m = new
                while m:
                    v = (m & -m).bit_length() - 1
                    gain += weights[v]
                    m &= m - 1
            if best_gain is None or gain > best_gain:
                best_gain = gain
                best_i = i
        chosen = system.set_masks[best_i] & uncovered
        m = chosen
        while m:
            v = (m & -m).bit_length() - 1
            assignment[v] = best_i
            m &= m - 1
        uncovered &= ~chosen
        gain_out = int(best_gain) if Fraction(best_gain).denominator == 1 else float(best_gain)
        trace.append((round_idx, best_i, gain_out))
        round_idx += 1
    return GreedyResult(cover=Cover(tuple(assignment)), trace=tuple(trace))


def greedy_value(system: SetSystem, model: CostModel) -> ObjectiveValue:
    """Objective of the greedy cover under ``model``."""
    return evaluate_cover(system, greedy_cover(system).cover, model)
