"""
Exact Randić values
===================

Every Randić value is a rational combination of square roots, so it can be
stored, compared and printed without rounding.
"""

from randic_extremal import Graph, edge_type_signature, randic_exact, randic_float, sign, to_decimal

###############################################################################
# A graph from graph6 text: the star with four leaves.
star = Graph.from_graph6("D?{")
print(star.degrees(), randic_exact(star))

###############################################################################
# The value only depends on how many edges join each pair of degrees.
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
sig = edge_type_signature(g)
print(dict(sig))
r = randic_exact(g)
print(r, "=", to_decimal(r, 20))
print("float route:", randic_float(g))

###############################################################################
# Comparisons are decided exactly, even when two values agree to many digits.
a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
b = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
diff = randic_exact(a) - randic_exact(b)
print("P4 - K1,3 =", diff, "sign", sign(diff))
