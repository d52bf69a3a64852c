"""
The graph behind a maximal K-antichain
======================================

The 2-sets of a K-antichain are the NON-edges of a graph on [n]; every
other member induces a clique there.  Maximal K-antichains correspond
exactly to K-saturated graphs (every edge in a k-clique for some upper
level k), and each saturated graph carries a whole space of maximal
antichains sharing it.  The canonical one keeps every clique not swallowed
by a larger admissible clique; if the graph is K-sparse, that canonical
antichain has minimum size for its graph.
"""

import itertools

from antichains import (
    KSpec,
    canonical_antichain,
    enumerate_admissible,
    format_family,
    from_edges,
    graph_of,
    is_k_saturated,
    is_k_sparse,
    min_antichain_for_graph,
    parse_family,
    strong_maximality_criterion,
)

K24 = KSpec.of((2, 4))
K234 = KSpec.of((2, 3, 4))

fam = parse_family(
    "1245,2367,1389,16,17,28,29,34,35,46,47,48,49,56,57,58,59,68,69,78,79", 9
)
g = graph_of(fam)
print("nine-point graph:", g, "| {2,4}-saturated:", is_k_saturated(g, K24))

# Round trip: the canonical antichain of the graph recovers the family.
canon = canonical_antichain(g, K24)
print("canonical == original:", sorted(canon.family.masks()) == sorted(fam.masks()))

# The structural criterion for strong maximality fails here: the triangle
# 123 extends to no 4-clique while each of its edges does.
print("strong-maximality criterion:", strong_maximality_criterion(g, K24))

# With three admissible levels the canonical antichain need not be the
# smallest one for its graph.  On the complete 5-vertex graph it takes all
# five 4-sets, but mixing in a triple does better:
K5 = from_edges(5, list(itertools.combinations(range(1, 6), 2)))
print("\ncomplete graph on 5 vertices, K={2,3,4}")
print("K-sparse:", is_k_sparse(K5, K234))
print("canonical size:", canonical_antichain(K5, K234).nonpair_count())
adm, cnt = min_antichain_for_graph(K5, K234)
print("true minimum:", cnt, "via", format_family(adm.family))

# The space of antichains over this graph, enumerated outright:
sols = enumerate_admissible(K5, K234)
print("antichains sharing the graph:", len(sols), "| sizes:", sorted({len(s) for s in sols}))
