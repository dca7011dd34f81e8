"""Seeded instance generators: random k-partite graphs, random trees, complete k-partite graphs.

Reproducibility contract
------------------------
All randomness comes from SplitMix64 below, so identical specs give
byte-identical serialized instances on any platform. Normative draw order:

* gen_kpartite: vertices 1..n are split into contiguous parts as evenly as
  possible (parts 1..n%k get the extra vertex). Pairs (u, v) with u < v are
  visited in ascending order; each pair whose endpoints lie in different
  parts consumes exactly one draw and becomes an edge iff
  next_float() < density. Same-part pairs consume nothing.
* gen_tree: a tree on n >= 3 vertices is decoded from a sequence of n - 2
  labels, each drawn as 1 + next_below(n); the decode repeatedly joins the
  smallest degree-1 vertex to the next label. n <= 2 draws nothing.

Budget modes (canonical spelling, also used in files and CSV):

* ``exact``     - limits are the per-part usage of the exact minimum cover,
                  the tightest budgets that stay feasible (small n only).
* ``slack:S``   - limits are the per-part usage of the deterministic
                  matching 2-approximation cover plus S, so a feasible
                  cover exists by construction at any scale.
* ``fixed:a,b`` - limits given verbatim (possibly infeasible, for
                  failure-mode testing).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .approx import two_approx_vc
from .errors import SpecInvalidError
from .exact import exact_min_vc
from .graph import (Budgets, Graph, Instance, KPartition, build_graph,
                    make_partition, per_part_usage)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream: state += 0x9E3779B97F4A7C15; output is the
    xor-shift-multiply finalizer (>>30 * 0xBF58476D1CE4E5B9, >>27 *
    0x94D049BB133111EB, >>31), all modulo 2^64."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < threshold:
                return r % bound


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    density: float
    seed: int
    budget_mode: str = "slack:1"


def parse_budget_mode(mode: str) -> tuple[str, int | None, tuple[int, ...] | None]:
    """Split a budget-mode string into (kind, slack, fixed_limits)."""
    if mode == "exact":
        return "exact", None, None
    if mode.startswith("slack:"):
        try:
            s = int(mode.split(":", 1)[1])
        except ValueError:
            raise SpecInvalidError(f"bad slack amount in {mode!r}") from None
        if s < 0:
            raise SpecInvalidError("slack must be >= 0")
        return "slack", s, None
    if mode.startswith("fixed:"):
        try:
            limits = tuple(int(x) for x in mode.split(":", 1)[1].split(","))
        except ValueError:
            raise SpecInvalidError(f"bad fixed limits in {mode!r}") from None
        if any(b < 0 for b in limits):
            raise SpecInvalidError("fixed limits must be >= 0")
        return "fixed", None, limits
    raise SpecInvalidError(f"unknown budget mode {mode!r}")


def derive_budgets(graph: Graph, partition: KPartition, mode: str) -> Budgets:
    """Budgets for a generated graph, per the budget-mode contract above."""
    kind, slack, fixed = parse_budget_mode(mode)
    if kind == "fixed":
        if len(fixed) != partition.k:
            raise SpecInvalidError(
                f"fixed budgets have {len(fixed)} entries, partition has {partition.k} parts")
        return Budgets(fixed)
    if kind == "exact":
        usage = per_part_usage(partition, exact_min_vc(graph))
        return Budgets(usage)
    usage = per_part_usage(partition, two_approx_vc(graph))
    return Budgets(tuple(u + slack for u in usage))


def even_part_sizes(n: int, k: int) -> list[int]:
    base, rem = divmod(n, k)
    return [base + 1 if p <= rem else base for p in range(1, k + 1)]


def gen_kpartite(spec: GenSpec) -> Instance:
    """Random k-partite instance; every admissible inter-part pair is an
    independent density-probability edge."""
    if spec.n < 1 or not (1 <= spec.k <= spec.n):
        raise SpecInvalidError(f"need 1 <= k <= n, got n={spec.n} k={spec.k}")
    if not (0.0 <= spec.density <= 1.0):
        raise SpecInvalidError(f"density {spec.density} outside [0, 1]")
    parse_budget_mode(spec.budget_mode)

    sizes = even_part_sizes(spec.n, spec.k)
    assign: list[int] = []
    for p, size in enumerate(sizes, start=1):
        assign.extend([p] * size)
    partition = make_partition(spec.k, assign)

    rng = SplitMix64(spec.seed)
    edges = []
    for u in range(1, spec.n + 1):
        for v in range(u + 1, spec.n + 1):
            if assign[u - 1] == assign[v - 1]:
                continue
            if rng.next_float() < spec.density:
                edges.append((u, v))
    graph = build_graph(spec.n, edges)
    return Instance(graph=graph, partition=partition,
                    budgets=derive_budgets(graph, partition, spec.budget_mode))


def gen_tree(n: int, seed: int, slack: int = 1) -> Instance:
    """Uniform random labeled tree, 2-partitioned by breadth-first level parity.

    The tree is decoded from n - 2 uniform labels (every labeled tree
    corresponds to exactly one label sequence, so the distribution is
    uniform). Budgets use slack mode.
    """
    if n < 1:
        raise SpecInvalidError(f"tree needs n >= 1, got {n}")
    rng = SplitMix64(seed)
    if n == 1:
        edges: list[tuple[int, int]] = []
    elif n == 2:
        edges = [(1, 2)]
    else:
        seq = [1 + rng.next_below(n) for _ in range(n - 2)]
        edges = _decode_label_sequence(n, seq)
    graph = build_graph(n, edges)

    if n == 1:
        partition = make_partition(1, [1])
    else:
        depth = _bfs_depths(graph)
        partition = make_partition(2, [1 if depth[v] % 2 == 0 else 2
                                       for v in range(1, n + 1)])
    return Instance(graph=graph, partition=partition,
                    budgets=derive_budgets(graph, partition, f"slack:{slack}"))


def gen_complete_kpartite(sizes: tuple[int, ...] | list[int]) -> Instance:
    """Complete k-partite instance; budgets default to the part sizes."""
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise SpecInvalidError(f"part sizes must all be >= 1, got {sizes}")
    n = sum(sizes)
    assign: list[int] = []
    for p, size in enumerate(sizes, start=1):
        assign.extend([p] * size)
    edges = [(u, v)
             for u in range(1, n + 1)
             for v in range(u + 1, n + 1)
             if assign[u - 1] != assign[v - 1]]
    return Instance(graph=build_graph(n, edges),
                    partition=make_partition(len(sizes), assign),
                    budgets=Budgets(sizes))


def _decode_label_sequence(n: int, seq: list[int]) -> list[tuple[int, int]]:
    degree = [0] + [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _bfs_depths(graph: Graph) -> list[int]:
    depth = [-1] * (graph.n + 1)
    depth[1] = 0
    queue = [1]
    while queue:
        nxt = []
        for u in queue:
            for w in sorted(graph.adjacency[u]):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    nxt.append(w)
        queue = nxt
    return depth
