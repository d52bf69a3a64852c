"""
Asymptotic bound calculators
============================

For level sets containing 3 the construction is asymptotically optimal:
the objective coefficient is (floor(l/2)ceil(l/2) - 1)/(4 floor(l/2)ceil(l/2)).
For K = {2,4} only a weaker coefficient is proven.  It comes from playing
two density bounds against each other: a removal-type bound 4*gamma/5
(increasing in the edge density gamma) and a bound
(2 + 2(1-3*gamma)^{3/2})/9 derived from the minimum triangle count
(decreasing).  They cross at gamma = (39 + sqrt(21))/150.
"""

import math

from antichains import (
    antichain_coeff,
    antichain_lower_coeff,
    critical_density,
    first_bound,
    objective_coeff,
    second_bound,
    triangle_lower,
    upper_bound_constant,
)

print("exact coefficients by largest level:")
for l in range(3, 9):
    print(
        f"  l={l}: objective {objective_coeff(l)} (~{float(objective_coeff(l)):.5f}), "
        f"antichain {antichain_coeff(l)} (~{float(antichain_coeff(l)):.5f})"
    )

print("\nthe two {2,4} bounds across the density window [1/4, 1/3]:")
print(f"{'gamma':>8} {'removal':>9} {'triangle-derived':>17} {'min triangles/n^3':>18}")
for i in range(6):
    g = 0.25 + i * (1 / 3 - 0.25) / 5
    print(f"{g:>8.4f} {first_bound(g):>9.5f} {second_bound(g):>17.5f} {triangle_lower(g):>18.6f}")

gs = critical_density()
print(f"\ncrossing point (bisection): {gs:.12f}")
print(f"closed form (39+sqrt21)/150: {(39 + math.sqrt(21)) / 150:.12f}")
print(f"proven objective coefficient bound: {upper_bound_constant():.9f}  (< 0.232441)")
print(f"antichain lower coefficient: {antichain_lower_coeff():.9f}")
print(f"the two constants sum to: {upper_bound_constant() + antichain_lower_coeff()}")
print(f"conjectured truth for comparison: 3/16 = {3 / 16} and 5/16 = {5 / 16}")
