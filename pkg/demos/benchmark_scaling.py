#!/usr/bin/env python3
"""Measure how the heuristic's operation count grows with instance size.

Runs a seeded ensemble at several sizes, fits log(mean op_count) against
log(n), and prints the per-size means plus the fitted exponent. On dense
inputs the count grows roughly quadratically.
"""

from kpcover import GenSpec, gen_kpartite, loglog_slope, solve_cvck

sizes = (40, 80, 160, 320)
trials = 5
seed = 99

means = []
for n in sizes:
    counts = []
    for t in range(trials):
        inst = gen_kpartite(GenSpec(n=n, k=4, density=0.5,
                                    seed=seed + 1000 * n + t,
                                    budget_mode="slack:1"))
        result = solve_cvck(inst)
        counts.append(result.op_count)
    means.append(sum(counts) / len(counts))
    print(f"n={n:4d}  mean op_count={means[-1]:12.1f}  "
          f"({trials} trials, all {result.status})")

slope, r2 = loglog_slope(list(sizes), means)
print(f"\nfitted growth exponent: {slope:.3f}  (r2={r2:.4f})")
