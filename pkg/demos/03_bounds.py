"""
Bounds in action
================

Sandwich, degree, weight and complement bounds on a few graphs.
"""

from wroman.bounds import bounds_report, degree_lower_bound, nordhaus_gaddum
from wroman.generators import complete_graph, cycle_graph, empty_graph, matching_graph, path_graph
from wroman.graph import build_graph

graphs = {
    "P3 (1,5,1)": build_graph(3, [(0, 1), (1, 2)], [1, 5, 1]),
    "C4 unit": cycle_graph(4),
    "K5 (1..5)": complete_graph(5, [1, 2, 3, 4, 5]),
    "3 isolated": empty_graph(3, [1, 2, 3]),
    "two equal edges + point": matching_graph([3, 5], [2]),
}

for name, G in graphs.items():
    r = bounds_report(G)
    print(f"{name}")
    print(f"  gamma_w={r.gamma_w}  gamma_wR={r.gamma_wR}  w(G)={r.weight_upper_bound}")
    print(f"  degree bound {r.degree_lower_bound} (ceiled {r.ceiled_degree_lower_bound})")
    ng = "n/a" if r.ng_triple is None else "{} <= {} < {}".format(*r.ng_triple)
    print(f"  extremal={r.thp_extremal}  with complement: {ng}")

# on complete graphs the degree bound is attained
K = complete_graph(4, [2, 7, 3, 9])
print("\nK4 degree bound", degree_lower_bound(K).raw, "= gamma_wR", bounds_report(K).gamma_wR)

# the complement bound is skipped when a side has no edge
ng = nordhaus_gaddum(path_graph(4))
print(f"P4 with its complement: {ng.lower} <= {ng.total} < {ng.upper}")
print("K4:", nordhaus_gaddum(complete_graph(4)).reason)
