#!/usr/bin/env python3
"""Show the heuristic's non-success behaviors next to the exact oracle.

1. Budgets of zero leave every edge uncovered: a clean HeuristicFailure with
   the uncovered edges listed, and the oracle confirms infeasibility.
2. The greedy degree order can paint itself into a corner: on this instance
   the lookahead vetoes every tentative pick, the solve fails, yet the
   oracle proves a budget-respecting cover exists. Failure is a first-class
   outcome, not a guarantee of infeasibility.
3. On a star, the lookahead accepts the center immediately and the solve
   succeeds with the minimum cover.
"""

from kpcover import (Budgets, Instance, build_graph, exact_cvck,
                     make_partition, solve_cvck)

edge = Instance(build_graph(2, [(1, 2)]), make_partition(2, [1, 2]),
                Budgets((0, 0)))
res = solve_cvck(edge)
print("zero budgets:", res.status, "uncovered:", res.uncovered_edges)
print("oracle:", exact_cvck(edge).status)

corner = Instance(
    build_graph(6, [(1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (4, 5), (3, 5)]),
    make_partition(3, {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3}),
    Budgets((1, 1, 2)))
res = solve_cvck(corner)
oracle = exact_cvck(corner)
print("\ngreedy corner:", res.status,
      "uncovered:", res.uncovered_edges)
print("oracle finds", sorted(oracle.cover), "anyway:", oracle.status)

star = Instance(build_graph(5, [(1, v) for v in range(2, 6)]),
                make_partition(2, [1, 2, 2, 2, 2]), Budgets((1, 4)))
res = solve_cvck(star)
print("\nstar:", res.status, "cover:", sorted(res.cover),
      "(optimal size:", exact_cvck(star).size, ")")
