"""
The differential and its labeling
=================================

A set S that gains the most boundary weight turns into an optimal labeling:
2 on S, 0 on its boundary, 1 elsewhere.
"""

from wroman.differential import boundary, differential_of_graph, labeling_from_set
from wroman.generators import IntegerWeights, gnp_graph
from wroman.graph import total_weight
from wroman.roman import labeling_weight
from wroman.solvers import gamma_wR_bruteforce

G = gnp_graph(10, 0.3, IntegerWeights(1, 9), seed=8)
res = differential_of_graph(G)
f = labeling_from_set(G, res.best_set)
print("weights", [str(w) for w in G.weights])
print("best set", sorted(res.best_set), "boundary", sorted(boundary(G, res.best_set)))
print("differential", res.value, "w(G)", total_weight(G))
print("labeling", f, "weight", labeling_weight(G, f))
print("w(G) - differential =", total_weight(G) - res.value, "| exhaustive:", gamma_wR_bruteforce(G).value)
