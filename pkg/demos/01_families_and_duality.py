"""
Set families, antichain predicates, and the separating-system dual
===================================================================

A family of subsets of [n] is an antichain when no member contains
another.  Restricting member sizes to a level set K (always containing 2,
never 1) gives K-antichains; maximality can be relative to K or absolute.
"""

from antichains import (
    KSpec,
    dual,
    format_family,
    is_antichain,
    is_css,
    is_k_antichain,
    is_maximal_k_antichain,
    is_strongly_maximal,
    parse_family,
    profile,
)

# The classic nine-point example: three 4-sets and eighteen 2-sets.
fam = parse_family(
    "1245,2367,1389,16,17,28,29,34,35,46,47,48,49,56,57,58,59,68,69,78,79", 9
)
print("family:", format_family(fam))
print("profile:", profile(fam))
print("antichain:", is_antichain(fam))

K24 = KSpec.of((2, 4))
K234 = KSpec.of((2, 3, 4))
print("K-antichain for K={2,4}:", is_k_antichain(fam, K24))

# It is maximal among {2,4}-antichains, but the triple 123 can be added,
# so it is not maximal once 3-sets are allowed — and hence not strongly
# maximal either.
print("maximal {2,4}-antichain:", is_maximal_k_antichain(fam, K24))
print("maximal {2,3,4}-antichain:", is_maximal_k_antichain(fam, K234))
print("strongly maximal:", is_strongly_maximal(fam))

# Antichains correspond exactly to completely separating systems of their
# duals: block i of the dual records which members contain point i.
d = dual(fam)
print("\ndual has", len(d), "blocks over ground", d.ground)
print("dual is a completely separating system:", is_css(d))

# A family with a containment fails both sides of the equivalence.
bad = parse_family("12,123", 3)
print("\nbad family antichain:", is_antichain(bad), "| dual css:", is_css(dual(bad)))
