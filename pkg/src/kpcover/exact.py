"""Ground-truth solvers: exact budgeted cover, exact cover, exact max clique.

The cover solvers share one branch-and-bound core. It branches on an
uncovered edge (u, v): either u joins the cover, or u is excluded and every
neighbor of u is forced in. The bound is a greedy maximal matching on the
still-uncovered edges (disjoint edges each need a distinct cover vertex).
Budget violations prune eagerly. Among minimum-size budget-respecting covers
the lexicographically smallest vertex sequence is returned, so results are
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InstanceInvalidError, InstanceTooLargeError
from .graph import Graph, Instance, validate_instance

FEASIBLE = "Feasible"
INFEASIBLE = "Infeasible"

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class ExactResult:
    status: str
    cover: frozenset[int] | None
    size: int | None
    nodes_explored: int

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def exact_cvck(inst: Instance) -> ExactResult:
    """Minimum-size budget-respecting vertex cover, or Infeasible if none exists."""
    report = validate_instance(inst)
    if not report.ok:
        raise InstanceInvalidError(report)
    part_of = inst.partition.part_of
    limits = inst.budgets.limits
    best, nodes = _min_cover_search(inst.graph, part_of, limits)
    if best is None:
        return ExactResult(status=INFEASIBLE, cover=None, size=None, nodes_explored=nodes)
    return ExactResult(status=FEASIBLE, cover=frozenset(best), size=len(best),
                       nodes_explored=nodes)


def cvck_feasible(inst: Instance) -> bool:
    """Decision form: does any budget-respecting cover exist?"""
    return exact_cvck(inst).feasible


def exact_min_vc(g: Graph) -> frozenset[int]:
    """Minimum vertex cover with the same deterministic tie-break, no budgets."""
    best, _ = _min_cover_search(g, None, None)
    assert best is not None  # the full vertex set always covers
    return frozenset(best)


def _min_cover_search(g: Graph,
                      part_of: tuple[int, ...] | None,
                      limits: tuple[int, ...] | None):
    edges_sorted = g.sorted_edges()
    adj = g.adjacency
    budgeted = limits is not None
    k = len(limits) if budgeted else 0

    best_size = g.n + 1
    best_cover: tuple[int, ...] | None = None
    nodes = 0

    def matching_lb(cover: set[int]) -> int:
        used: set[int] = set()
        lb = 0
        for u, v in edges_sorted:
            if u in cover or v in cover or u in used or v in used:
                continue
            used.add(u)
            used.add(v)
            lb += 1
        return lb

    def consider(cover: set[int]) -> None:
        nonlocal best_size, best_cover
        tup = tuple(sorted(cover))
        if len(tup) < best_size or (len(tup) == best_size and
                                    (best_cover is None or tup < best_cover)):
            best_size = len(tup)
            best_cover = tup

    def recurse(cover: set[int], excluded: set[int], counts: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        pick = None
        for u, v in edges_sorted:
            if u not in cover and v not in cover:
                pick = (u, v)
                break
        if pick is None:
            consider(cover)
            return
        lb = matching_lb(cover)
        if len(cover) + lb > best_size:
            return
        if budgeted:
            residual = sum(max(0, limits[i] - counts[i]) for i in range(k))
            if lb > residual:
                return
        u, _ = pick
        # excluding a vertex forces its neighbors in, so an uncovered edge
        # never has an excluded endpoint
        assert u not in excluded
        if not budgeted or counts[part_of[u] - 1] < limits[part_of[u] - 1]:
            if budgeted:
                counts[part_of[u] - 1] += 1
            cover.add(u)
            recurse(cover, excluded, counts)
            cover.discard(u)
            if budgeted:
                counts[part_of[u] - 1] -= 1
        forced = [w for w in adj[u] if w not in cover]
        assert all(w not in excluded for w in forced)
        if budgeted:
            for w in forced:
                counts[part_of[w] - 1] += 1
            over = any(counts[i] > limits[i] for i in range(k))
        else:
            over = False
        if not over:
            cover.update(forced)
            excluded.add(u)
            recurse(cover, excluded, counts)
            excluded.discard(u)
            cover.difference_update(forced)
        if budgeted:
            for w in forced:
                counts[part_of[w] - 1] -= 1

    recurse(set(), set(), [0] * k)
    return best_cover, nodes


def exact_max_clique(g: Graph) -> frozenset[int]:
    """Maximum clique; ties broken toward the lexicographically smallest set.

    Depth-first extension over ascending vertex ids visits equal-size cliques
    in lexicographic order, so keeping only strictly larger finds is enough
    for the tie-break.
    """
    adj = g.adjacency
    best: tuple[int, ...] = ()

    def extend(current: list[int], cands: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = tuple(current)
        for i, v in enumerate(cands):
            if len(current) + len(cands) - i <= len(best):
                break
            current.append(v)
            extend(current, [w for w in cands[i + 1:] if w in adj[v]])
            current.pop()

    extend([], list(range(1, g.n + 1)))
    return frozenset(best)


def enumerate_min_cvck(inst: Instance, limit: int = EXHAUSTIVE_LIMIT) -> set[frozenset[int]]:
    """All minimum-size budget-respecting covers, by exhaustive enumeration.

    Independent check route for exact_cvck; subsets are tried in ascending
    size with bitmask edge tests, so the first populated size is the optimum.
    Empty result means Infeasible.
    """
    report = validate_instance(inst)
    if not report.ok:
        raise InstanceInvalidError(report)
    n = inst.graph.n
    if n > limit:
        raise InstanceTooLargeError(f"n={n} exceeds exhaustive limit {limit}")
    emasks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in inst.graph.sorted_edges()]
    k = inst.partition.k
    part_masks = [0] * (k + 1)
    for v in range(1, n + 1):
        part_masks[inst.partition.part_of[v]] |= 1 << (v - 1)
    limits = inst.budgets.limits

    for size in range(n + 1):
        found: set[frozenset[int]] = set()
        for combo in combinations(range(1, n + 1), size):
            mask = 0
            for v in combo:
                mask |= 1 << (v - 1)
            if not all(mask & em for em in emasks):
                continue
            if any((mask & part_masks[p]).bit_count() > limits[p - 1]
                   for p in range(1, k + 1)):
                continue
            found.add(frozenset(combo))
        if found:
            return found
    return set()
