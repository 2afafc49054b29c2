"""
Exact weighted Roman domination on small graphs
===============================================

Four routes to the same number, and what the optimal labelings look like.
"""

from fractions import Fraction

from wroman import wrd
from wroman.generators import MixedWeights, gnp_graph
from wroman.graph import build_graph
from wroman.solvers import (
    SolveOptions,
    enumerate_all_optima,
    gamma_wR_branch_and_bound,
    gamma_wR_bruteforce,
    gamma_wR_dp,
    gamma_wR_via_differential,
)

# a path a - b - c with a heavy middle vertex
P3 = build_graph(3, [(0, 1), (1, 2)], [1, 5, 1])
res = gamma_wR_bruteforce(P3)
print("P3 with weights 1,5,1:", res.value, "witness", res.witness)

# a 2 on the middle would cost 10; two cheap leaves cover it instead
for f in enumerate_all_optima(P3).all_optima:
    print("  optimum", f, "V0 =", sorted(f.V0), "V1 =", sorted(f.V1), "V2 =", sorted(f.V2))

# weights are exact rationals throughout
G = gnp_graph(9, Fraction(2, 5), MixedWeights(), seed=3)
print()
print(wrd.dumps(G, ["demo graph"]), end="")
for name, fn in [
    ("exhaustive", gamma_wR_bruteforce),
    ("differential", gamma_wR_via_differential),
    ("branch-and-bound", gamma_wR_branch_and_bound),
]:
    r = fn(G)
    print(f"{name:>17}: {r.value}  ({r.witness})")

# the fewest-ones tie-break
r = gamma_wR_bruteforce(G, SolveOptions(tie_break_min_V1=True))
print("fewest 1-labels:", r.witness)

# paths and cycles go through a linear-time recurrence
from wroman.generators import cycle_graph

C = cycle_graph(30_000)
print("\nunit cycle on 30000 vertices:", gamma_wR_dp(C).value)
