"""Matching-based 2-approximation baseline."""

from __future__ import annotations

from hypothesis import given, settings

from kpcover import (build_graph, exact_min_vc, is_vertex_cover,
                     matching_vertex_cover, two_approx_vc)

from strategies import graphs


def test_single_edge_takes_both_endpoints():
    assert two_approx_vc(build_graph(2, [(1, 2)])) == frozenset({1, 2})


def test_empty_graph():
    assert two_approx_vc(build_graph(3, [])) == frozenset()


def test_deterministic_edge_order():
    g = build_graph(4, [(3, 4), (1, 2), (1, 3)])
    cover, matching = matching_vertex_cover(g)
    assert matching == ((1, 2), (3, 4))  # lexicographically smallest live edge first
    assert cover == frozenset({1, 2, 3, 4})


@given(graphs(max_n=12))
@settings(max_examples=150, deadline=None)
def test_bound_and_matching_structure(g):
    cover, matching = matching_vertex_cover(g)
    assert is_vertex_cover(g, cover)
    assert len(cover) == 2 * len(matching)
    endpoints = [v for e in matching for v in e]
    assert len(endpoints) == len(set(endpoints))  # picked edges form a matching
    assert len(cover) <= 2 * len(exact_min_vc(g))
