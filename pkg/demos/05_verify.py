"""
Falsification runs
==================

Every check on random corpora, then a deliberately broken solver to show
how a failure is shrunk to a small counterexample.
"""

from wroman.generators import GridWeights, IntegerWeights, gnp_graph
from wroman.graph import total_weight
from wroman.roman import RomanLabeling
from wroman.solvers import SolveResult
from wroman.verify import CorpusParams, verify_corpus, verify_cycle_theorems, verify_graph

print(verify_corpus(CorpusParams(trials=100, seed=1)).to_text())
print(verify_corpus(CorpusParams(trials=100, seed=2, weights=GridWeights())).to_text())
print(verify_cycle_theorems((3, 9), trials=5).to_text())


def lazy(G):
    # claims the all-ones labeling is optimal
    return SolveResult(total_weight(G), RomanLabeling((1,) * G.n), "lazy")


G = gnp_graph(8, 0.5, IntegerWeights(1, 9), seed=3)
rep = verify_graph(G, solver=lazy)
print(rep.to_text())
