"""Undirected graphs, k-partitions, budgets, and the predicates solvers are checked against.

Vertices are dense 1-based integer ids. Edges are unordered pairs stored as
(u, v) tuples with u < v. All types are immutable after construction, so
instances can be shared freely between concurrent solver calls; solvers that
need a mutable edge view keep their own overlay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import SelfLoopError, VertexOutOfRangeError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    adjacency[v] is the neighbor set of v (index 0 is an unused placeholder
    so vertex ids index directly).
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a Graph from a vertex count and an edge pair sequence.

    Duplicate pairs (in either orientation) are deduplicated silently.
    Self-loops and endpoints outside 1..n are hard errors.
    """
    if n < 1:
        raise VertexOutOfRangeError(f"vertex count must be >= 1, got {n}")
    edges: set[Edge] = set()
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 1..{n}")
        edges.add(_norm_edge(u, v))
    adj: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n=n, edges=frozenset(edges),
                 adjacency=tuple(frozenset(s) for s in adj))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edge set is inverted over all pairs."""
    missing = [(u, v)
               for u in range(1, g.n + 1)
               for v in range(u + 1, g.n + 1)
               if v not in g.adjacency[u]]
    return build_graph(g.n, missing)


@dataclass(frozen=True)
class KPartition:
    """Assignment of every vertex to one of k parts.

    part_of[v] is the part id of vertex v in 1..k (index 0 unused).
    parts[i] is the vertex set of part i (index 0 unused). Empty parts are
    representable; validate_instance reports them as warnings.
    """

    k: int
    part_of: tuple[int, ...]
    parts: tuple[frozenset[int], ...] = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.part_of) - 1

    def members(self, part: int) -> frozenset[int]:
        return self.parts[part]


def make_partition(k: int, part_of: Mapping[int, int] | Sequence[int]) -> KPartition:
    """Build a KPartition from a vertex -> part mapping.

    Accepts a dict keyed by vertex id or a sequence of part ids for vertices
    1..n in order. Every part id must lie in 1..k.
    """
    if k < 1:
        raise VertexOutOfRangeError(f"part count must be >= 1, got {k}")
    if isinstance(part_of, Mapping):
        n = len(part_of)
        if set(part_of.keys()) != set(range(1, n + 1)):
            raise VertexOutOfRangeError("partition must assign exactly vertices 1..n")
        assign = [0] + [part_of[v] for v in range(1, n + 1)]
    else:
        assign = [0] + list(part_of)
    for v, p in enumerate(assign[1:], start=1):
        if not (1 <= p <= k):
            raise VertexOutOfRangeError(f"vertex {v} assigned to part {p}, outside 1..{k}")
    groups: list[set[int]] = [set() for _ in range(k + 1)]
    for v, p in enumerate(assign[1:], start=1):
        groups[p].add(v)
    return KPartition(k=k, part_of=tuple(assign),
                      parts=tuple(frozenset(s) for s in groups))


@dataclass(frozen=True)
class Budgets:
    """Per-part selection limits: at most limits[i-1] vertices from part i."""

    limits: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.limits)

    def limit(self, part: int) -> int:
        return self.limits[part - 1]

    def __post_init__(self) -> None:
        if any(b < 0 for b in self.limits):
            raise ValueError("budgets must be non-negative")


@dataclass(frozen=True)
class Instance:
    """A solvable unit: graph + k-partition + per-part budgets."""

    graph: Graph
    partition: KPartition
    budgets: Budgets


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]
    warnings: tuple[str, ...]


def validate_instance(inst: Instance) -> ValidationReport:
    """Check partition totality, budget arity, and the no-intra-part-edge condition.

    Violations make the instance unusable; empty parts are only warnings
    (their budget is simply unusable).
    """
    violations: list[str] = []
    warnings: list[str] = []
    g, part, budgets = inst.graph, inst.partition, inst.budgets
    if part.n != g.n:
        violations.append(f"partition assigns {part.n} vertices, graph has {g.n}")
    if budgets.k != part.k:
        violations.append(f"budgets have {budgets.k} entries, partition has {part.k} parts")
    if part.n == g.n:
        for u, v in g.sorted_edges():
            if part.part_of[u] == part.part_of[v]:
                violations.append(f"intra-part edge ({u}, {v}) in part {part.part_of[u]}")
        for p in range(1, part.k + 1):
            if not part.parts[p]:
                warnings.append(f"part {p} is empty")
    return ValidationReport(ok=not violations,
                            violations=tuple(violations),
                            warnings=tuple(warnings))


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    """True iff every edge of g has at least one endpoint in s."""
    sset = _checked_subset(g, s)
    return all(u in sset or v in sset for u, v in g.edges)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every pair of vertices in s is an edge of g."""
    ordered = sorted(_checked_subset(g, s))
    return all(ordered[j] in g.adjacency[ordered[i]]
               for i in range(len(ordered))
               for j in range(i + 1, len(ordered)))


def respects_budgets(inst: Instance, s: Iterable[int]) -> bool:
    """True iff s takes at most the budgeted number of vertices from each part."""
    sset = set(s)
    usage = per_part_usage(inst.partition, sset)
    return all(usage[i] <= inst.budgets.limits[i] for i in range(inst.partition.k))


def per_part_usage(partition: KPartition, s: Iterable[int]) -> tuple[int, ...]:
    """Count of selected vertices per part, ordered part 1..k."""
    counts = [0] * (partition.k + 1)
    for v in s:
        counts[partition.part_of[v]] += 1
    return tuple(counts[1:])


def greedy_partition(g: Graph) -> KPartition:
    """Proper coloring by smallest available color in vertex-id order.

    The number of colors used becomes k. Output never places both endpoints
    of an edge in one part.
    """
    color: dict[int, int] = {}
    k = 1
    for v in g.vertices():
        taken = {color[u] for u in g.adjacency[v] if u in color}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
        k = max(k, c)
    return make_partition(k, color)


def canonicalize_partition(inst: Instance) -> Instance:
    """Drop empty parts, renumbering the survivors and their budgets in order."""
    part = inst.partition
    kept = [p for p in range(1, part.k + 1) if part.parts[p]]
    renum = {p: i + 1 for i, p in enumerate(kept)}
    new_assign = {v: renum[part.part_of[v]] for v in range(1, part.n + 1)}
    new_limits = tuple(inst.budgets.limits[p - 1] for p in kept)
    return Instance(graph=inst.graph,
                    partition=make_partition(len(kept), new_assign),
                    budgets=Budgets(new_limits))


def _checked_subset(g: Graph, s: Iterable[int]) -> set[int]:
    sset = set(s)
    for v in sset:
        if not (1 <= v <= g.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 1..{g.n}")
    return sset
