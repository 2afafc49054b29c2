"""
Closed forms for complete, bipartite and cycle graphs
=====================================================

Each formula is cross-checked against exhaustive search.
"""

from fractions import Fraction

from wroman.families import (
    cycle_constructions,
    cycle_upper_bound,
    gamma_wR_complete,
    gamma_wR_complete_bipartite,
    gamma_wR_equal_cycle,
)
from wroman.generators import complete_bipartite_graph, complete_graph, cycle_graph
from wroman.solvers import gamma_wR_bruteforce

# complete graphs: one 2 on the lightest vertex
ws = [Fraction(5, 2), 1, 3, Fraction(4, 3)]
r = gamma_wR_complete(ws)
print("K4", [str(w) for w in ws], "->", r.value, r.witness, "| exhaustive:", gamma_wR_bruteforce(complete_graph(4, ws)).value)

# complete bipartite graphs: three candidate labelings
for X, Y in [([1, 4], [2, 2, 2]), ([10], [1, 1, 1]), ([1, 1, 1], [1, 1, 1, 1])]:
    r = gamma_wR_complete_bipartite(X, Y)
    G = complete_bipartite_graph(len(X), len(Y), X + Y)
    print(f"K_{len(X)},{len(Y)} X={X} Y={Y}: {r.value} via {r.branch}, exhaustive {gamma_wR_bruteforce(G).value}")

# cycles: the rotations of one pattern average to the bound
ws = [1, 2, 3, 3, 2, 1]
cb = cycle_upper_bound(ws)
print("\nC6", ws)
for c in cycle_constructions(ws):
    print(f"  start {c.m}: {c.labeling}  weight {c.weight}")
print("bound", cb.bound, "best construction", cb.constructive, "exhaustive", gamma_wR_bruteforce(cycle_graph(6, ws)).value)

# with n not a multiple of 3 the bound is met only by constant weights
for ws in ([1] * 7, [1] * 6 + [2]):
    cb = cycle_upper_bound(ws)
    print(f"C7 weights {ws}: gamma_wR {gamma_wR_bruteforce(cycle_graph(7, ws)).value}, bound {cb.bound}")
print("equal weights 1/2 on C7:", gamma_wR_equal_cycle(7, "1/2"))
