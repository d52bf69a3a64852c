"""
Saturated graphs with few cliques
=================================

Two explicit families: a general block construction for any level set
(two almost-equal sides of small cliques, completely joined), and a
sharpened variant for largest level 4 that wires the leftover vertices in
instead of isolating them.  The objective |E| - |C_l| of the sharpened
variant matches the conjectured optimum exactly, and the general one
approaches the predicted leading coefficient.
"""

from antichains import (
    KSpec,
    conjectured_max_objective,
    conjectured_min_antichain,
    construction_objective,
    count_k_cliques,
    general_graph,
    l4_graph,
    objective_coeff,
    to_dot,
)

print("largest level 4, sharpened variant:")
print(f"{'n':>4} {'edges':>6} {'C4':>5} {'objective':>9} {'conjecture':>10} {'antichain':>9}")
for n in range(4, 17):
    g = l4_graph(n)
    e, c = g.edge_count(), count_k_cliques(g, 4)
    print(
        f"{n:>4} {e:>6} {c:>5} {e - c:>9} {conjectured_max_objective(n):>10} "
        f"{conjectured_min_antichain(n):>9}"
    )

print("\nthe n=8 graph in DOT form:")
print(to_dot(l4_graph(8)))

print("general construction, leading coefficients (objective / n^2):")
for l in (4, 5, 6, 7):
    coeff = objective_coeff(l)
    row = [f"l={l} target {float(coeff):.6f}:"]
    for n in (100, 1000):
        obj = construction_objective(n, l)
        row.append(f"n={n}: {obj / n**2:.6f}")
    print("  " + "  ".join(row))

print("\nblock sizes for K={2,5} on 10 points (3 vertices stay isolated):")
g = general_graph(10, KSpec.of((2, 5)))
print("degrees:", g.degrees())
