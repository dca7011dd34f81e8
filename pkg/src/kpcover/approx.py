"""Maximal-matching 2-approximation for unconstrained vertex cover."""

from __future__ import annotations

from .graph import Edge, Graph


def matching_vertex_cover(g: Graph) -> tuple[frozenset[int], tuple[Edge, ...]]:
    """Cover plus the matching that produced it.

    Repeatedly take the lexicographically smallest live edge, add both
    endpoints, and drop every edge they touch. The picked edges form a
    maximal matching, so the cover is at most twice the optimum.
    """
    cover: set[int] = set()
    matching: list[Edge] = []
    for u, v in g.sorted_edges():
        if u in cover or v in cover:
            continue
        cover.add(u)
        cover.add(v)
        matching.append((u, v))
    return frozenset(cover), tuple(matching)


def two_approx_vc(g: Graph) -> frozenset[int]:
    """Vertex cover of size at most twice the minimum. Ignores budgets."""
    cover, _ = matching_vertex_cover(g)
    return cover
