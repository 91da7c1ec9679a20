"""Part-size cost models and objective evaluation for covers.

Every objective treated here is a function of the multiset of part sizes
(weights) induced by a cover: the family of power means of the per-element
values ``a_v`` (arithmetic at p=1, geometric at p=0, harmonic at p=-1,
min/max at p=-inf/+inf), the partition entropy in bits, the number of used
subsets, the rent-or-buy cost and arbitrary discrete-concave per-part costs.

All evaluators are pure functions over immutable inputs and can be called
from parallel workers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .instance import Cover, SetSystem, part_sizes

#: switch mean evaluation to log-space accumulation beyond these thresholds
_LOG_SPACE_EXPONENT = 30.0
_LOG_SPACE_SIZE = 1e6

_CONCAVITY_TOL = 1e-12


def _positive_sizes(sizes: Sequence) -> list[float]:
    out = []
    for c in sizes:
        c = float(c)
        if c < 0:
            raise ValueError(f"negative part size {c}")
        if c > 0:
            out.append(c)
    if not out:
        raise ValueError("all part sizes are zero")
    return out


def _check_total(sizes: Sequence, n_total) -> float:
    n_total = float(n_total)
    if n_total <= 0:
        raise ValueError(f"total weight must be positive, got {n_total}")
    total = math.fsum(float(c) for c in sizes)
    if abs(total - n_total) > 1e-9 * max(1.0, n_total):
        raise ValueError(f"part sizes sum to {total}, expected {n_total}")
    return n_total


def eval_pmean(sizes: Sequence, n_total, p: float) -> float:
    """Generalized mean of the a_v values, ((1/n) sum c_i^(p+1))^(1/p).

    ``p`` must be finite and nonzero; use :func:`eval_geometric` for the
    p=0 limit and :func:`eval_max` / :func:`eval_maxmin` for p=+-inf.
    """
    if not math.isfinite(p) or p == 0:
        raise ValueError(f"p must be finite and nonzero, got {p}")
    n_total = _check_total(sizes, n_total)
    cs = _positive_sizes(sizes)
    if abs(p + 1) > _LOG_SPACE_EXPONENT or max(cs) > _LOG_SPACE_SIZE:
        logs = np.log(np.asarray(cs)) * (p + 1)
        log_sum = np.logaddexp.reduce(logs)
        return float(math.exp((log_sum - math.log(n_total)) / p))
    s = math.fsum(c ** (p + 1) for c in cs)
    return (s / n_total) ** (1.0 / p)


def eval_geometric(sizes: Sequence, n_total) -> float:
    """Element-weighted geometric mean, exp((1/n) sum c_i ln c_i)."""
    n_total = _check_total(sizes, n_total)
    cs = _positive_sizes(sizes)
    return math.exp(math.fsum(c * math.log(c) for c in cs) / n_total)


def eval_entropy(sizes: Sequence, n_total) -> float:
    """Entropy of the part-size distribution, in bits."""
    n_total = _check_total(sizes, n_total)
    cs = _positive_sizes(sizes)
    return -math.fsum(c / n_total * math.log2(c / n_total) for c in cs)


def eval_unit(sizes: Sequence) -> int:
    """Number of nonempty parts (the classic set-cover objective)."""
    return sum(1 for c in sizes if float(c) > 0)


def eval_rob(sizes: Sequence, n_total, beta: float) -> float:
    """Rent-or-buy cost: sum of min(1, c_i / (beta * n)) over parts."""
    if not 0 < beta < 1:
        raise ValueError(f"beta must be in (0, 1), got {beta}")
    n_total = _check_total(sizes, n_total)
    breakpoint_ = beta * n_total
    return math.fsum(min(1.0, c / breakpoint_) for c in _positive_sizes(sizes))


def eval_concave(sizes: Sequence, table: Sequence) -> float:
    """Sum of f(c_i) for a table f(1..c_max) of per-part costs.

    Part sizes must be integers within the table's domain; weighted
    instances should be expanded to unit weights first.
    """
    total = 0.0
    for c in sizes:
        frac = Fraction(c)
        if frac.denominator != 1:
            raise ValueError(f"part size {c} is not integral")
        c = frac.numerator
        if c == 0:
            continue
        if c > len(table):
            raise ValueError(f"part size {c} exceeds table domain 1..{len(table)}")
        total += float(table[c - 1])
    return total


def eval_maxmin(sizes: Sequence) -> float:
    """Size of the smallest nonempty part (the p -> -inf mean)."""
    return min(_positive_sizes(sizes))


def eval_max(sizes: Sequence) -> float:
    """Size of the largest part (the p -> +inf mean)."""
    return max(_positive_sizes(sizes))


def check_concave_table(values: Sequence, tol: float = _CONCAVITY_TOL) -> None:
    """Raise unless f(1..m) with implicit f(0)=0 is discretely concave.

    Discrete concavity means nonincreasing first differences:
    f(j+1) - f(j) <= f(j) - f(j-1).  Monotonicity is not required.
    """
    if not values:
        raise ValueError("concave table must be nonempty")
    prev_diff = float(values[0])  # f(1) - f(0)
    for j in range(1, len(values)):
        diff = float(values[j]) - float(values[j - 1])
        if diff > prev_diff + tol:
            raise ValueError(
                f"table is not concave at size {j + 1}: "
                f"f({j + 1})-f({j}) = {diff} > f({j})-f({j - 1}) = {prev_diff}")
        prev_diff = diff


# ---------------------------------------------------------------------------
# Cost models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CostModel:
    """Base class: a per-part valuation plus an orientation."""

    kind = ""
    maximize = False

    def value(self, sizes: Sequence, n_total) -> float:
        raise NotImplementedError

    def per_part(self, sizes: Sequence, n_total) -> tuple[float, ...]:
        """Per-part contributions whose fold yields :meth:`value`."""
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def label(self) -> str:
        return self.kind


@dataclass(frozen=True)
class PMean(CostModel):
    """Maximize the generalized mean of parameter p.

    Finite p only, except the sentinels ``p=+inf`` (maximize the largest
    part) and ``p=-inf`` (maximize the smallest part); p=0 is evaluated as
    the geometric mean.
    """

    p: float = 1.0
    kind = "pmean"
    maximize = True

    def __post_init__(self):
        p = float(self.p)
        if math.isnan(p):
            raise ValueError("p must not be NaN")
        object.__setattr__(self, "p", p)

    def value(self, sizes, n_total):
        if self.p == math.inf:
            return eval_max(sizes)
        if self.p == -math.inf:
            return eval_maxmin(sizes)
        if self.p == 0:
            return eval_geometric(sizes, n_total)
        return eval_pmean(sizes, n_total, self.p)

    def per_part(self, sizes, n_total):
        if math.isinf(self.p):
            return tuple(float(c) for c in sizes)
        if self.p == 0:
            return tuple(float(c) * math.log(c) if c > 0 else 0.0 for c in sizes)
        return tuple(float(c) ** (self.p + 1) if c > 0 else 0.0 for c in sizes)

    def to_json(self):
        return {"kind": "pmean", "p": self.p}

    def label(self):
        if self.p == math.inf:
            return "max"
        if self.p == -math.inf:
            return "maxmin"
        return f"pmean:{self.p:g}"


@dataclass(frozen=True)
class Entropy(CostModel):
    """Minimize the entropy (bits) of the part-size distribution."""

    kind = "entropy"
    maximize = False

    def value(self, sizes, n_total):
        return eval_entropy(sizes, n_total)

    def per_part(self, sizes, n_total):
        n_total = float(n_total)
        return tuple(
            -float(c) / n_total * math.log2(float(c) / n_total) if c > 0 else 0.0
            for c in sizes)


@dataclass(frozen=True)
class Unit(CostModel):
    """Minimize the number of used subsets (minimum set cover)."""

    kind = "unit"
    maximize = False

    def value(self, sizes, n_total):
        return eval_unit(sizes)

    def per_part(self, sizes, n_total):
        return tuple(1.0 if c > 0 else 0.0 for c in sizes)


@dataclass(frozen=True)
class RentOrBuy(CostModel):
    """Minimize sum of min(1, c_i / (beta * n)): rent small parts, buy big ones."""

    beta: float = 0.5
    kind = "rob"
    maximize = False

    def __post_init__(self):
        if not 0 < self.beta < 1:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")

    def value(self, sizes, n_total):
        return eval_rob(sizes, n_total, self.beta)

    def per_part(self, sizes, n_total):
        threshold = self.beta * float(n_total)
        return tuple(min(1.0, float(c) / threshold) if c > 0 else 0.0 for c in sizes)

    def as_table(self, n_total: int) -> "ConcaveTable":
        """The equivalent concave table on integer part sizes 1..n."""
        threshold = self.beta * n_total
        return ConcaveTable(tuple(min(1.0, c / threshold) for c in range(1, n_total + 1)))

    def to_json(self):
        return {"kind": "rob", "beta": self.beta}

    def label(self):
        return f"rob:{self.beta:g}"


@dataclass(frozen=True)
class ConcaveTable(CostModel):
    """Minimize sum of f(c_i) for a discrete-concave table f(1..c_max)."""

    values: tuple[float, ...] = ()
    kind = "concave"
    maximize = False

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        check_concave_table(values)
        object.__setattr__(self, "values", values)

    def value(self, sizes, n_total):
        return eval_concave(sizes, self.values)

    def per_part(self, sizes, n_total):
        out = []
        for c in sizes:
            c = int(c)
            out.append(float(self.values[c - 1]) if c > 0 else 0.0)
        return tuple(out)

    def to_json(self):
        return {"kind": "concave", "values": list(self.values)}

    def label(self):
        return "concave"


#: convenience sentinels for the p -> +-inf objectives
MAX_PART = PMean(math.inf)
MAX_MIN = PMean(-math.inf)


@dataclass(frozen=True)
class ObjectiveValue:
    """An evaluated objective with its per-part decomposition."""

    value: float
    decomposition: tuple[float, ...]
    model: CostModel


def evaluate_sizes(sizes: Sequence, n_total, model: CostModel) -> ObjectiveValue:
    return ObjectiveValue(
        value=float(model.value(sizes, n_total)),
        decomposition=model.per_part(sizes, n_total),
        model=model,
    )


def evaluate_cover(system: SetSystem, cover: Cover, model: CostModel) -> ObjectiveValue:
    """Objective of a cover: the model applied to its weighted part sizes."""
    return evaluate_sizes(part_sizes(system, cover), system.total_weight, model)


def parse_model(spec: str) -> CostModel:
    """Parse a compact model spec.

    Accepted forms: ``pmean:<p>``, ``entropy``, ``unit``, ``rob:<beta>``,
    ``table:<path>`` (JSON array of f(1..m)), ``maxmin``, ``max``.
    """
    spec = spec.strip()
    if spec == "entropy":
        return Entropy()
    if spec == "unit":
        return Unit()
    if spec == "maxmin":
        return MAX_MIN
    if spec == "max":
        return MAX_PART
    if spec.startswith("pmean:"):
        return PMean(float(spec.split(":", 1)[1]))
    if spec.startswith("rob:"):
        return RentOrBuy(float(spec.split(":", 1)[1]))
    if spec.startswith("table:"):
        path = spec.split(":", 1)[1]
        values = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(values, list):
            raise ValueError(f"table file {path} must hold a JSON array")
        return ConcaveTable(tuple(values))
    raise ValueError(f"unknown model spec {spec!r}")
