"""Set-system instances and covers.

A set system is a ground set ``{0, .., n-1}`` together with a collection of
subsets whose union is the whole ground set, optionally with positive
rational element weights.  A cover assigns every element to one of the
subsets containing it; the induced part sizes are what every objective in
this package is a function of.

Instances and covers are immutable once constructed and safe to share
between threads or worker processes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from random import Random
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Instance data violates a structural invariant."""


class ParseError(InstanceError):
    """Instance file is malformed (not valid JSON / wrong schema)."""


class CoverError(ValueError):
    """Assignment is not a valid cover of the given set system."""


def _as_weight(value) -> Fraction:
    """Coerce a JSON-ish weight (int, float, 'p/q' string, Fraction)."""
    if isinstance(value, bool):
        raise InstanceError(f"weight {value!r} is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        # decimal repr, so 0.1 becomes 1/10 rather than the binary float
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value)
    raise InstanceError(f"weight {value!r} is not a number")


@dataclass(frozen=True)
class SetSystem:
    """A ground set of size ``n`` and a collection of covering subsets.

    Parameters
    ----------
    n : int
        Number of ground-set elements, identified as ``0 .. n-1``.
    sets : sequence of element sequences
        The subset collection.  Each subset must be nonempty, sorted,
        duplicate-free and contained in ``range(n)``; their union must be
        the full ground set.
    weights : sequence of positive rationals, optional
        Element weights.  ``None`` means unit weights.
    names : sequence of str, optional
        Display names for elements, kept only for file round-trips.
    """

    n: int
    sets: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...] | None = None
    names: tuple[str, ...] | None = None
    set_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InstanceError(f"ground set size must be a positive integer, got {self.n!r}")
        sets = tuple(tuple(int(v) for v in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if not sets:
            raise InstanceError("subset collection is empty")
        covered = 0
        masks = []
        for i, s in enumerate(sets):
            if not s:
                raise InstanceError(f"subset {i} is empty")
            mask = 0
            prev = -1
            for v in s:
                if v < 0 or v >= self.n:
                    raise InstanceError(f"subset {i} contains out-of-range element {v}")
                if v <= prev:
                    raise InstanceError(f"subset {i} is not sorted duplicate-free at element {v}")
                prev = v
                mask |= 1 << v
            masks.append(mask)
            covered |= mask
        for v in range(self.n):
            if not covered >> v & 1:
                raise InstanceError(f"element {v} uncovered")
        object.__setattr__(self, "set_masks", tuple(masks))
        if self.weights is not None:
            weights = tuple(_as_weight(w) for w in self.weights)
            if len(weights) != self.n:
                raise InstanceError(
                    f"expected {self.n} weights, got {len(weights)}")
            for v, w in enumerate(weights):
                if w <= 0:
                    raise InstanceError(f"weight of element {v} is not positive: {w}")
            object.__setattr__(self, "weights", weights)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != self.n:
                raise InstanceError(f"expected {self.n} names, got {len(names)}")
            object.__setattr__(self, "names", names)

    @property
    def k(self) -> int:
        """Number of subsets."""
        return len(self.sets)

    def weight(self, v: int) -> Fraction:
        return self.weights[v] if self.weights is not None else Fraction(1)

    @property
    def total_weight(self) -> Fraction:
        """w(V): sum of element weights (== n for unweighted systems)."""
        if self.weights is None:
            return Fraction(self.n)
        return sum(self.weights, Fraction(0))

    def sets_containing(self, v: int) -> tuple[int, ...]:
        """Indices of the subsets containing element ``v``, ascending."""
        return tuple(i for i, m in enumerate(self.set_masks) if m >> v & 1)

    def to_dict(self) -> dict:
        doc: dict = {"n": self.n, "sets": [list(s) for s in self.sets]}
        if self.weights is not None:
            doc["weights"] = [
                w.numerator if w.denominator == 1 else f"{w.numerator}/{w.denominator}"
                for w in self.weights
            ]
        if self.names is not None:
            doc["names"] = list(self.names)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "SetSystem":
        if not isinstance(doc, dict) or "n" not in doc or "sets" not in doc:
            raise ParseError("instance object must have 'n' and 'sets' keys")
        return cls(
            n=doc["n"],
            sets=tuple(tuple(s) for s in doc["sets"]),
            weights=tuple(doc["weights"]) if doc.get("weights") is not None else None,
            names=tuple(doc["names"]) if doc.get("names") is not None else None,
        )


@dataclass(frozen=True)
class Cover:
    """A total assignment of elements to containing subsets.

    ``assignment[v]`` is the index of the subset element ``v`` is assigned
    to.  Validity against a particular :class:`SetSystem` is checked by
    :func:`validate_cover`.
    """

    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(i) for i in self.assignment))


def validate_cover(system: SetSystem, cover: Cover) -> None:
    """Raise :class:`CoverError` unless ``cover`` is valid for ``system``."""
    if len(cover.assignment) != system.n:
        raise CoverError(
            f"assignment has length {len(cover.assignment)}, expected {system.n}")
    for v, i in enumerate(cover.assignment):
        if i < 0 or i >= system.k:
            raise CoverError(f"element {v} assigned to out-of-range subset {i}")
        if not system.set_masks[i] >> v & 1:
            raise CoverError(f"element {v} assigned to subset {i} which does not contain it")


def part_sizes(system: SetSystem, cover: Cover) -> tuple:
    """Per-subset part sizes induced by a cover.

    Returns a length-k tuple; entry ``i`` is the number of elements
    assigned to subset ``i`` (their total weight for weighted systems).
    Unused subsets get 0.
    """
    validate_cover(system, cover)
    if system.weights is None:
        sizes = [0] * system.k
        for i in cover.assignment:
            sizes[i] += 1
    else:
        sizes = [Fraction(0)] * system.k
        for v, i in enumerate(cover.assignment):
            sizes[i] += system.weights[v]
    return tuple(sizes)


def element_part_sizes(system: SetSystem, cover: Cover) -> tuple:
    """a_v for every element: the size of the part containing it."""
    sizes = part_sizes(system, cover)
    return tuple(sizes[i] for i in cover.assignment)


@dataclass(frozen=True)
class ExpandedInstance:
    """Result of :func:`expand_weighted`.

    ``origin[c]`` is the original element the copy ``c`` stands for, and
    ``copies[v]`` lists the copies of original element ``v``.
    """

    system: SetSystem
    origin: tuple[int, ...]
    copies: tuple[tuple[int, ...], ...]

    def translate_cover(self, cover: Cover) -> Cover:
        """Map a cover of the expanded system back to the original one.

        Requires all copies of each original element to share one subset
        (true for greedy covers, and some optimal cover always has this
        form).
        """
        validate_cover(self.system, cover)
        assignment = []
        for v, copies in enumerate(self.copies):
            targets = {cover.assignment[c] for c in copies}
            if len(targets) != 1:
                raise CoverError(f"copies of element {v} are assigned to several subsets")
            assignment.append(targets.pop())
        return Cover(tuple(assignment))


def expand_weighted(system: SetSystem) -> ExpandedInstance:
    """Replace every element by ``w(v)`` unit-weight copies.

    Each copy belongs to exactly the subsets containing the original
    element, so part weights of the original instance correspond to part
    counts of the expanded one.  Weights must be positive integers; scale
    rational weights (e.g. by the LCM of denominators) first.
    """
    weights = []
    for v in range(system.n):
        w = system.weight(v)
        if w.denominator != 1:
            raise InstanceError(
                f"weight of element {v} is not an integer ({w}); scale the instance first")
        weights.append(w.numerator)
    copies = []
    origin = []
    next_id = 0
    for v, w in enumerate(weights):
        copies.append(tuple(range(next_id, next_id + w)))
        origin.extend([v] * w)
        next_id += w
    new_sets = tuple(
        tuple(c for v in s for c in copies[v]) for s in system.sets)
    expanded = SetSystem(n=next_id, sets=new_sets)
    return ExpandedInstance(system=expanded, origin=tuple(origin), copies=tuple(copies))


def gen_random(n: int, k: int, density: float, seed: int) -> SetSystem:
    """Generate a random unweighted instance.

    Every (subset, element) membership is drawn independently with
    probability ``density`` from a generator seeded with ``seed``.  Each
    element left uncovered is then added to one uniformly chosen subset,
    and empty subsets are dropped.  The same seed always yields the same
    instance.
    """
    if n < 1 or k < 1:
        raise InstanceError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if not 0 < density <= 1:
        raise InstanceError(f"density must be in (0, 1], got {density}")
    rng = Random(seed)
    members = [[v for v in range(n) if rng.random() < density] for _ in range(k)]
    covered = set(v for s in members for v in s)
    for v in range(n):
        if v not in covered:
            members[rng.randrange(k)].append(v)
    sets = tuple(tuple(sorted(set(s))) for s in members if s)
    return SetSystem(n=n, sets=sets)


# ---------------------------------------------------------------------------
# File I/O.  Instance files are UTF-8 JSON objects:
#   {"n": int, "sets": [[int, ...], ...],
#    "weights": [int | float | "p/q", ...]?, "names": [str, ...]?}
# Non-integer rational weights are written as "p/q" strings so that a
# save/load round trip is exact.
# ---------------------------------------------------------------------------

def dumps_instance(system: SetSystem) -> str:
    return json.dumps(system.to_dict(), separators=(", ", ": "))


def loads_instance(text: str) -> SetSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return SetSystem.from_dict(doc)


def save_instance(system: SetSystem, path) -> None:
    Path(path).write_text(dumps_instance(system) + "\n", encoding="utf-8")


def load_instance(path) -> SetSystem:
    """Load and fully validate an instance file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def cover_report(system: SetSystem, cover: Cover, objective=None,
                 model_label: str | None = None, **extra) -> dict:
    """Machine-readable cover report.

    The stable schema is ``{"assignment", "part_sizes", "objective",
    "model"}``; greedy adds ``"trace"`` and the exact solver adds
    ``"optimal"`` and node counts via ``extra``.
    """
    sizes = part_sizes(system, cover)
    out_sizes = [
        int(c) if Fraction(c).denominator == 1 else float(c) for c in sizes
    ]
    report = {
        "assignment": list(cover.assignment),
        "part_sizes": out_sizes,
        "objective": objective,
        "model": model_label,
    }
    report.update(extra)
    return report
