import json
from fractions import Fraction

import pytest

from wroman import wrd
from wroman.errors import GraphError, SizeGuardError
from wroman.generators import GridWeights, complete_graph, empty_graph, gnp_graph, IntegerWeights
from wroman.graph import total_weight
from wroman.roman import RomanLabeling
from wroman.solvers import SolveResult, gamma_wR_bruteforce
from wroman.verify import (
    CHECKS,
    CorpusParams,
    corpus_graph,
    shrink,
    trial_seed,
    verify_corpus,
    verify_cycle_theorems,
    verify_graph,
)


def all_ones(G):
    return SolveResult(total_weight(G), RomanLabeling((1,) * G.n), "faulty")


def test_every_check_runs(p3):
    rep = verify_graph(p3)
    assert rep.ok
    assert [e.id for e in rep.entries] == list(CHECKS)
    assert {e.status for e in rep.entries} <= {"PASS", "SKIP"}


def test_lemma_applies_on_matching():
    G = complete_graph(2, [3, 3])
    rep = verify_graph(G)
    statuses = {e.id: e.status for e in rep.entries}
    assert statuses["lemma-isolated-edge"] == "PASS"
    assert statuses["empty-graph"] == "PASS"


def test_injected_fault_is_caught_and_shrunk():
    G = gnp_graph(8, Fraction(1, 2), IntegerWeights(1, 9), seed=3)
    assert gamma_wR_bruteforce(G).value < total_weight(G)
    rep = verify_graph(G, solver=all_ones)
    failed = {e.id for e in rep.failures}
    assert "optimality" in failed
    entry = next(e for e in rep.failures if e.id == "optimality")
    small = wrd.loads(entry.counterexample)
    assert small.n <= 3 and small.m >= 1
    assert gamma_wR_bruteforce(small).value < total_weight(small)
    assert "counterexample for optimality" in rep.to_text()


def test_shrink_keeps_failure():
    G = gnp_graph(7, Fraction(1, 2), IntegerWeights(1, 9), seed=4)
    small = shrink(G, lambda H: H.m >= 2)
    assert small.m == 2


def test_guard_and_empty():
    with pytest.raises(SizeGuardError):
        verify_graph(empty_graph(12))
    with pytest.raises(GraphError):
        verify_graph(empty_graph(0))


def test_corpus_deterministic():
    params = CorpusParams(trials=10, seed=7)
    a = [corpus_graph(params, i) for i in range(10)]
    b = [corpus_graph(params, i) for i in range(10)]
    assert a == b
    assert trial_seed(7, 3) == "7:3"
    assert verify_corpus(params).to_json() == verify_corpus(params).to_json()


def test_corpus_grid_and_matching():
    assert verify_corpus(CorpusParams(trials=30, weights=GridWeights())).ok
    rep = verify_corpus(CorpusParams(trials=30, family="matching"))
    assert rep.ok
    assert rep.summary()["thp-characterization"]["PASS"] == 30


def test_corpus_bad_params():
    with pytest.raises(GraphError):
        verify_corpus(CorpusParams(n_range=(3, 30)))


def test_json_records(p3):
    doc = json.loads(verify_graph(p3).to_json())
    assert doc["failures"] == 0
    rec = doc["records"][0]
    assert set(rec) >= {"id", "applicable", "passed", "detail", "status"}


def test_cycle_theorems():
    rep = verify_cycle_theorems((3, 9), trials=5)
    assert rep.ok
    assert rep.trials == 7 * 6
