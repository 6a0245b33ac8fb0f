"""
Ranking a whole graph class
===========================

``extremal_search`` walks every connected graph with ``n`` vertices and
cyclomatic number ``k`` once and returns the exact top values with all the
graphs that reach them.
"""

from randic_extremal import extremal_search

###############################################################################
# Cubic graphs win when they exist: on 8 vertices with k = 5 the top value is 4.
print(extremal_search(8, 5).to_text(digits=6))

###############################################################################
# One vertex more, and the leaders are cubic cores with one subdivided edge.
report = extremal_search(9, 5, top_t=3)
print(report.to_text(digits=12))

###############################################################################
# A degree cap shrinks the search. Here only graphs with maximum degree 3 count.
print(extremal_search(10, 5, top_t=2, max_degree=3).to_text(digits=6))
