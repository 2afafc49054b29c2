from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import weighted_graphs
from oracles import differential
from wroman.differential import (
    boundary,
    check_duality,
    differential_of_graph,
    differential_of_set,
    labeling_from_set,
)
from wroman.errors import SizeGuardError
from wroman.generators import complete_graph, cycle_graph, empty_graph
from wroman.graph import total_weight
from wroman.roman import is_wrdf, labeling_weight
from wroman.solvers import gamma_wR_bruteforce


def test_p3_centre(p3):
    res = differential_of_graph(p3)
    assert res.value == 4
    assert res.best_set == {0}
    assert total_weight(p3) - res.value == 3


def test_k3(k3):
    res = differential_of_graph(k3)
    assert res.value == 4 and res.best_set == {0}


def test_edgeless_differential_is_zero():
    res = differential_of_graph(empty_graph(4, [1, 2, 3, 4]))
    assert res.value == 0 and res.best_set == frozenset()


def test_tie_break_smallest_set():
    res = differential_of_graph(complete_graph(4))
    assert res.best_set == {0}


def test_boundary_and_set_value(p3):
    assert boundary(p3, {0}) == {1}
    assert differential_of_set(p3, {0}) == 4
    assert differential_of_set(p3, set()) == 0


def test_labeling_from_set(p3):
    assert tuple(labeling_from_set(p3, {0})) == (2, 0, 1)
    assert tuple(labeling_from_set(p3, {1})) == (0, 2, 0)


def test_guard():
    with pytest.raises(SizeGuardError):
        differential_of_graph(cycle_graph(8), max_n=6)


@settings(max_examples=80, deadline=None)
@given(weighted_graphs(max_n=7))
def test_duality_and_oracle(G):
    res = differential_of_graph(G)
    assert res.value == differential(G.n, G.sorted_edges(), G.weights)
    assert check_duality(G)
    f = labeling_from_set(G, res.best_set)
    assert is_wrdf(G, f)
    assert labeling_weight(G, f) == total_weight(G) - res.value
    assert gamma_wR_bruteforce(G).value == total_weight(G) - res.value


@settings(max_examples=40, deadline=None)
@given(weighted_graphs(max_n=7))
def test_differential_nonnegative(G):
    assert differential_of_graph(G).value >= Fraction(0)
