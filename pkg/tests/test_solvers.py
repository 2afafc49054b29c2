import time
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import weighted_graphs
from oracles import gamma_w, roman_optima
from wroman.errors import GraphError, SizeGuardError
from wroman.generators import (
    MixedWeights,
    complete_graph,
    cycle_graph,
    empty_graph,
    gnp_graph,
    path_graph,
)
from wroman.graph import build_graph
from wroman.roman import RomanLabeling, is_wrdf, labeling_weight
from wroman.solvers import (
    SolveOptions,
    enumerate_all_optima,
    gamma_w_bruteforce,
    gamma_wR_branch_and_bound,
    gamma_wR_bruteforce,
    gamma_wR_dp,
    gamma_wR_via_differential,
    solve,
)


def test_p3_value_and_witness(p3):
    res = gamma_wR_bruteforce(p3)
    assert res.value == 3
    assert str(res.witness) == "2,0,1"


def test_p3_all_optima(p3):
    res = enumerate_all_optima(p3)
    assert {tuple(f) for f in res.all_optima} == {(1, 0, 2), (2, 0, 1)}


def test_k3_unique_optimum(k3):
    res = enumerate_all_optima(k3)
    assert res.value == 2
    assert [tuple(f) for f in res.all_optima] == [(2, 0, 0)]
    assert gamma_w_bruteforce(k3).value == 1


def test_single_unit_edge_optima():
    G = build_graph(2, [(0, 1)], [1, 1])
    res = enumerate_all_optima(G)
    assert res.value == 2
    assert {tuple(f) for f in res.all_optima} == {(0, 2), (1, 1), (2, 0)}


def test_unequal_edge():
    assert gamma_wR_bruteforce(build_graph(2, [(0, 1)], [1, 2])).value == 2


def test_edgeless_forces_ones():
    G = empty_graph(3, [1, 2, 3])
    res = enumerate_all_optima(G)
    assert res.value == 6
    assert [tuple(f) for f in res.all_optima] == [(1, 1, 1)]
    assert gamma_w_bruteforce(G).value == 6


def test_c6_mixed_weights():
    G = cycle_graph(6, [1, 2, 3, 3, 2, 1])
    assert gamma_wR_bruteforce(G).value == 8
    assert gamma_wR_dp(G).value == 8


def test_witness_is_counter_order_first():
    G = gnp_graph(7, 0.4, MixedWeights(), seed=5)
    res = gamma_wR_bruteforce(G)
    allres = enumerate_all_optima(G)
    assert res.witness == allres.all_optima[0]
    key = lambda f: sum(x * 3**i for i, x in enumerate(f))
    assert [key(f) for f in allres.all_optima] == sorted(key(f) for f in allres.all_optima)


def test_min_v1_tie_break(p3):
    G = build_graph(2, [(0, 1)], [1, 1])
    res = gamma_wR_bruteforce(G, SolveOptions(tie_break_min_V1=True))
    assert len(res.witness.V1) == 0


def test_size_guards():
    with pytest.raises(SizeGuardError):
        gamma_wR_bruteforce(empty_graph(6), SolveOptions(max_n_ternary=5))
    with pytest.raises(SizeGuardError):
        gamma_w_bruteforce(empty_graph(6), SolveOptions(max_n_binary=5))


def test_dp_rejects_high_degree():
    with pytest.raises(GraphError):
        gamma_wR_dp(complete_graph(4))


def test_solve_dispatch(p3):
    for method in ("brute", "bnb", "dp", "diff"):
        res = solve(p3, SolveOptions(method=method))
        assert res.value == 3 and is_wrdf(p3, res.witness)
    with pytest.raises(ValueError):
        solve(p3, SolveOptions(method="nope"))
    assert solve(p3, SolveOptions(enumerate_all_optima=True)).all_optima


@settings(max_examples=60, deadline=None)
@given(weighted_graphs(max_n=6))
def test_matches_oracle(G):
    edges = G.sorted_edges()
    best, optima = roman_optima(G.n, edges, G.weights)
    res = enumerate_all_optima(G)
    assert res.value == best
    assert sorted(tuple(f) for f in res.all_optima) == optima
    assert gamma_w_bruteforce(G).value == gamma_w(G.n, edges, G.weights)


@settings(max_examples=60, deadline=None)
@given(weighted_graphs(max_n=8))
def test_all_methods_agree(G):
    ref = gamma_wR_bruteforce(G)
    for fn in (gamma_wR_branch_and_bound, gamma_wR_via_differential):
        res = fn(G)
        assert res.value == ref.value
        assert is_wrdf(G, res.witness)
        assert labeling_weight(G, res.witness) == res.value


@settings(max_examples=60, deadline=None)
@given(weighted_graphs(max_n=8))
def test_witness_valid(G):
    res = gamma_wR_bruteforce(G)
    assert is_wrdf(G, res.witness)
    assert labeling_weight(G, res.witness) == res.value


@pytest.mark.parametrize("n", range(1, 13))
def test_dp_on_paths_and_cycles(n):
    import random

    rng = random.Random(n)
    ws = MixedWeights()(rng, n)
    for G in [path_graph(n, ws)] + ([cycle_graph(n, ws)] if n >= 3 else []):
        dp = gamma_wR_dp(G)
        assert dp.value == gamma_wR_bruteforce(G).value
        assert is_wrdf(G, dp.witness)


def test_dp_on_path_forest():
    G = build_graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (6, 3)], [1, 2, 3, 4, 5, 6, 7])
    assert gamma_wR_dp(G).value == gamma_wR_bruteforce(G).value


def test_dp_large_cycle_fast():
    G = cycle_graph(100_000)
    t = time.perf_counter()
    res = gamma_wR_dp(G)
    assert time.perf_counter() - t < 1.0
    assert res.value == 66667


def test_bnb_moderate_instance():
    G = gnp_graph(25, Fraction(3, 10), MixedWeights(), seed=1)
    t = time.perf_counter()
    res = gamma_wR_branch_and_bound(G)
    assert time.perf_counter() - t < 10
    assert is_wrdf(G, res.witness)
    assert labeling_weight(G, res.witness) == res.value


def test_result_witness_type(p3):
    assert isinstance(gamma_wR_bruteforce(p3).witness, RomanLabeling)
    assert isinstance(gamma_w_bruteforce(p3).witness, frozenset)


@pytest.mark.parametrize("seed", range(8))
def test_bnb_matches_differential_route_mid_size(seed):
    G = gnp_graph(16, [0.1, 0.2, 0.3, 0.5][seed % 4], MixedWeights(), seed=seed)
    a = gamma_wR_branch_and_bound(G)
    assert a.value == gamma_wR_via_differential(G).value
    assert is_wrdf(G, a.witness)


@settings(max_examples=40, deadline=None)
@given(weighted_graphs(max_n=6))
def test_scaling_weights_scales_value(G):
    c = Fraction(7, 3)
    H = build_graph(G.n, G.edges, [c * w for w in G.weights])
    assert gamma_wR_bruteforce(H).value == c * gamma_wR_bruteforce(G).value
    assert gamma_wR_bruteforce(H).witness == gamma_wR_bruteforce(G).witness
