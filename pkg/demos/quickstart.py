#!/usr/bin/env python3
"""Build a small budgeted instance by hand and solve it three ways.

The instance: six vertices in three parts with seven cross-part edges and a
tight budget on each part. The heuristic, the exact branch-and-bound, and
the unconstrained 2-approximation all run on it; every answer is re-verified
with the cover/budget predicates.
"""

from kpcover import (Budgets, Instance, build_graph, exact_cvck,
                     is_vertex_cover, make_partition, respects_budgets,
                     solve_cvck, two_approx_vc, validate_instance)

g = build_graph(6, [(1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (4, 5), (3, 5)])
partition = make_partition(3, {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3})
inst = Instance(graph=g, partition=partition, budgets=Budgets((1, 2, 1)))

report = validate_instance(inst)
print("instance valid:", report.ok)

heur = solve_cvck(inst)
print("\nheuristic:", heur.status)
print("  cover:", sorted(heur.cover), "usage:", heur.per_part_usage,
      "ops:", heur.op_count)
print("  verifies:", is_vertex_cover(g, heur.cover)
      and respects_budgets(inst, heur.cover))

exact = exact_cvck(inst)
print("\nexact oracle:", exact.status)
print("  cover:", sorted(exact.cover), "size:", exact.size,
      "nodes:", exact.nodes_explored)
print("  heuristic gap:", heur.size - exact.size)

approx = two_approx_vc(g)
print("\n2-approximation (ignores budgets):", sorted(approx))
print("  within factor two:", len(approx) <= 2 * exact.size)
print("  respects budgets anyway:", respects_budgets(inst, approx))
