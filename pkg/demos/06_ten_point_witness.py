"""
The ten-point optimum
=====================

At n=10 the minimum maximal {2,4}-antichain has 20 members with profile
(15, 5) — strictly better than the construction's 22.  The witness graph
is remarkable: five 4-cliques meeting pairwise in a single vertex,
6-regular, every vertex in exactly two 4-cliques and every edge in exactly
one.  Such designs cannot continue to large n: bounded per-edge clique
multiplicity forces o(n^2) edges in the limit.
"""

import itertools

from antichains import (
    KSpec,
    SetFamily,
    from_edges,
    k_cliques,
    nonedges,
    parse_family,
    triangle_cap,
    triangle_count,
    verify_witness,
)

cliques = parse_family("1234,1567,2589,368a,479a", 10)
edges = sorted(
    {(u, v) for c in cliques for u, v in itertools.combinations(c.points(), 2)}
)
g = from_edges(10, edges)
antichain = SetFamily.from_masks(list(nonedges(g).masks()) + list(cliques.masks()), 10)

rep = verify_witness(g, antichain, KSpec.of((2, 4)))
print("certificate valid:", rep.ok)
print("edges:", rep.edges, "| degrees:", sorted(set(rep.degrees)), "| regular:", rep.regular)
print("objective:", rep.objective, "| antichain size:", rep.antichain_size)
print("profile:", rep.profile)
print("4-cliques per edge (min,max):", rep.per_edge_clique_counts[4])
print("4-cliques per vertex (min,max):", rep.per_vertex_clique_counts[4])

# Clique pairs share exactly one vertex, so besides the 4x5 = 20 in-clique
# triangles there are C(5,3) = 10 spanning three cliques pairwise.
print("\n4-cliques:", [c.points() for c in k_cliques(g, 4)])
print("triangles:", triangle_count(g))
print("triangle-cap leading term (n-4)|C4|/3:", triangle_cap(10, 5))
print("(the cap is asymptotic; at n=10 the lower-order slack dominates)")
