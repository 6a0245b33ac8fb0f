"""
Extremal families and local rewrites
====================================

Named families are fixed edge-type signatures. Members can be built,
recognised and rewritten with the five local transformations.
"""

from randic_extremal import (
    FamilySpec,
    construct_member,
    delta_randic,
    edge_type_signature,
    find_sites,
    is_member,
    randic_exact,
    to_decimal,
)

###############################################################################
# The leading family at cyclomatic number 5 and 9 vertices.
spec = FamilySpec("lambda1", 9, 5)
g = construct_member(spec)
print(g.to_graph6(), dict(edge_type_signature(g)))
print(randic_exact(g) == spec.expected_value, spec.expected_value)

###############################################################################
# The runner-up family has one vertex of degree 4.
spec2 = FamilySpec("gamma2", 9, 5)
h = construct_member(spec2)
print(dict(edge_type_signature(h)), is_member(h, spec2), is_member(h, spec))

###############################################################################
# Subdividing an edge (T3) adds one vertex; the exact change depends only on
# the degrees at both ends.
for site in find_sites(g, "T3")[:4]:
    d = delta_randic(g, site)
    print(site, d, to_decimal(d, 6))
