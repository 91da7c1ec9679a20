"""Graph coloring as implicit set cover over maximal independent sets.

Covers of a graph's maximal-independent-set system correspond exactly to
proper colorings, so the greedy cover becomes the MaxIS heuristic: remove
a (maximum or greedily found) independent set as the next color class.
Includes an exact branch-and-bound maximum-independent-set solver for
desk-scale graphs and the reduction used to reuse the exact cover oracle
as a coloring oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from random import Random
from typing import Iterable, Sequence

import networkx as nx

from .instance import ParseError, SetSystem

MIS_EXACT_CAP = 40
SETSYSTEM_VERTEX_CAP = 20
SETSYSTEM_SET_CAP = 10 ** 5


class GraphError(ValueError):
    """Graph data violates a structural invariant."""


class GraphSizeError(RuntimeError):
    """Graph exceeds a solver's size cap."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    Stored as sorted neighbor tuples; loops are rejected and duplicate
    edges collapse.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    adj_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        adj = tuple(tuple(sorted(set(int(u) for u in row))) for row in self.adj)
        masks = []
        for v, row in enumerate(adj):
            mask = 0
            for u in row:
                if u < 0 or u >= self.n:
                    raise GraphError(f"vertex {v} has out-of-range neighbor {u}")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                mask |= 1 << u
            masks.append(mask)
        for v, row in enumerate(adj):
            for u in row:
                if not masks[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "adj_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [[] for _ in range(max(n, 1))]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            rows[u].append(v)
            rows[v].append(u)
        return cls(n=n, adj=tuple(tuple(r) for r in rows))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(row) for row in self.adj)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, u) for v in range(self.n) for u in self.adj[v] if v < u)

    def to_networkx(self) -> "nx.Graph":
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def complement_graph(g: Graph) -> Graph:
    """Complement on the same vertex set (used for clique partitions)."""
    rows = []
    for v in range(g.n):
        nbrs = set(g.adj[v])
        rows.append(tuple(u for u in range(g.n) if u != v and u not in nbrs))
    return Graph(n=g.n, adj=tuple(rows))


def gen_random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p) with a deterministic seeded generator."""
    rng = Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Independent sets
# ---------------------------------------------------------------------------

def _mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


def _clique_cover_bound(g: Graph, mask: int) -> int:
    """Greedy clique cover size of the induced subgraph: bounds alpha."""
    cliques: list[int] = []
    m = mask
    while m:
        vbit = m & -m
        v = vbit.bit_length() - 1
        m ^= vbit
        for idx, members in enumerate(cliques):
            if members & ~g.adj_masks[v] == 0:
                cliques[idx] = members | vbit
                break
        else:
            cliques.append(vbit)
    return len(cliques)


def exact_mis(g: Graph, active: int | None = None,
              limit_n: int = MIS_EXACT_CAP) -> tuple[int, ...]:
    """Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex of the residual graph and prunes
    with a greedy clique-cover bound.  Capped at ``limit_n`` vertices.
    """
    if g.n > limit_n:
        raise GraphSizeError(f"n={g.n} exceeds exact MIS cap {limit_n}")
    full = (1 << g.n) - 1 if active is None else active
    best_set = 0
    best_size = -1

    def dfs(mask: int, chosen: int, size: int):
        nonlocal best_set, best_size
        if size + _clique_cover_bound(g, mask) <= best_size:
            return
        if mask == 0:
            if size > best_size:
                best_size = size
                best_set = chosen
            return
        v = max(_mask_vertices(mask), key=lambda u: ((g.adj_masks[u] & mask).bit_count(), -u))
        vbit = 1 << v
        dfs(mask & ~(g.adj_masks[v] | vbit), chosen | vbit, size + 1)
        dfs(mask ^ vbit, chosen, size)

    dfs(full, 0, 0)
    return tuple(_mask_vertices(best_set))


def greedy_mis(g: Graph, active: int | None = None) -> tuple[int, ...]:
    """Minimum-degree greedy independent set.

    Repeatedly takes a minimum-residual-degree vertex (ties to the lowest
    id) and deletes its closed neighborhood.  The classic guarantees give
    size >= 3 alpha / (max degree + 2); the weaker bound n / (max degree +
    1) is asserted here.
    """
    mask = (1 << g.n) - 1 if active is None else active
    n_active = mask.bit_count()
    chosen = []
    m = mask
    while m:
        v = min(_mask_vertices(m), key=lambda u: ((g.adj_masks[u] & m).bit_count(), u))
        chosen.append(v)
        m &= ~(g.adj_masks[v] | (1 << v))
    if n_active and len(chosen) * (g.max_degree + 1) < n_active:
        raise AssertionError("greedy independent set smaller than n/(max degree+1)")
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class ColoringResult:
    """A proper coloring as ordered color classes plus per-vertex labels."""

    classes: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def is_proper_coloring(g: Graph, labels: Sequence[int]) -> bool:
    return all(labels[u] != labels[v] for u, v in g.edges)


def maxis_coloring(g: Graph, is_solver: str = "exact") -> ColoringResult:
    """Color by repeatedly removing an independent set of the residual graph.

    ``is_solver='exact'`` removes a maximum independent set each round
    (capped at 40 vertices); ``'greedy'`` uses the minimum-degree greedy
    set, which is maximal in the residual graph, at any size.
    """
    if is_solver not in ("exact", "greedy"):
        raise ValueError(f"unknown independent-set solver {is_solver!r}")
    if is_solver == "exact" and g.n > MIS_EXACT_CAP:
        raise GraphSizeError(f"n={g.n} exceeds exact MIS cap {MIS_EXACT_CAP}")
    residual = (1 << g.n) - 1
    labels = [-1] * g.n
    classes = []
    while residual:
        if is_solver == "exact":
            cls = exact_mis(g, active=residual)
        else:
            cls = greedy_mis(g, active=residual)
        for v in cls:
            labels[v] = len(classes)
        classes.append(cls)
        for v in cls:
            residual &= ~(1 << v)
    result = ColoringResult(classes=tuple(classes), labels=tuple(labels))
    assert is_proper_coloring(g, result.labels)
    return result


def graph_to_setsystem(g: Graph, vertex_cap: int = SETSYSTEM_VERTEX_CAP,
                       set_cap: int = SETSYSTEM_SET_CAP) -> SetSystem:
    """Explicit set system whose subsets are the maximal independent sets.

    Covers of this system correspond exactly to proper colorings, so it
    lets the exact cover solver act as a coloring oracle.  Sets are sorted
    lexicographically for reproducibility.
    """
    if g.n > vertex_cap:
        raise GraphSizeError(f"n={g.n} exceeds maximal-IS enumeration cap {vertex_cap}")
    complement = complement_graph(g).to_networkx()
    sets = []
    for clique in nx.find_cliques(complement):
        sets.append(tuple(sorted(clique)))
        if len(sets) > set_cap:
            raise GraphSizeError(f"more than {set_cap} maximal independent sets")
    sets.sort()
    return SetSystem(n=g.n, sets=tuple(sets))


def coloring_from_cover(system: SetSystem, assignment: Sequence[int]) -> ColoringResult:
    """Interpret a cover of a maximal-IS system as a coloring."""
    used = sorted(set(assignment))
    relabel = {i: c for c, i in enumerate(used)}
    labels = tuple(relabel[i] for i in assignment)
    classes = tuple(
        tuple(v for v in range(len(assignment)) if assignment[v] == i) for i in used)
    return ColoringResult(classes=classes, labels=labels)


# ---------------------------------------------------------------------------
# File I/O: JSON {"n": int, "edges": [[u, v], ...]} or DIMACS edge lists
# ---------------------------------------------------------------------------

def load_graph(path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from exc
        if "n" not in doc or "edges" not in doc:
            raise ParseError("graph object must have 'n' and 'edges' keys")
        return Graph.from_edges(doc["n"], doc["edges"])
    return _parse_dimacs(text)


def _parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: 'p edge N M' then 'e u v' lines, 1-based."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"line {lineno}: malformed problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u != v:
                edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("no DIMACS problem line found")
    return Graph.from_edges(n, edges)
