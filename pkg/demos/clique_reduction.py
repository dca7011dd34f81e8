#!/usr/bin/env python3
"""Walk the clique-to-cover reduction on a 4-vertex example.

A triangle with one isolated vertex has a maximum clique of size 3. Its
complement is a star, whose minimum vertex cover has size 4 - 3 = 1. The
certificates translate back and forth by set complement.
"""

from kpcover import (build_graph, clique_cert_to_cover, complement,
                     cover_cert_to_clique, exact_max_clique, exact_min_vc,
                     reduce_clique_to_vc)

g = build_graph(4, [(1, 2), (2, 3), (1, 3)])
print("graph edges:", g.sorted_edges())

clique = exact_max_clique(g)
print("maximum clique:", sorted(clique))

out = reduce_clique_to_vc(g, len(clique))
print("complement edges:", out.complement_graph.sorted_edges())
print("target cover size:", out.target_cover_size)

cover = clique_cert_to_cover(g, clique)
print("clique certificate -> complement cover:", sorted(cover))
assert len(cover) == out.target_cover_size

back = cover_cert_to_clique(g, cover)
print("cover certificate -> clique again:", sorted(back))
assert back == clique

# the size identity the reduction rests on, checked on this instance
assert len(exact_max_clique(g)) + len(exact_min_vc(complement(g))) == g.n
print("size identity holds: |max clique| + |min cover of complement| = n")
