from fractions import Fraction

import pytest
from hypothesis import given

from conftest import weighted_graphs
from wroman.errors import ArityMismatchError
from wroman.generators import complete_graph, empty_graph
from wroman.graph import total_weight
from wroman.roman import RomanLabeling, is_dominating, is_wrdf, labeling_weight
from wroman.solvers import enumerate_all_optima


def test_all_ones_is_valid(p3):
    assert is_wrdf(p3, [1, 1, 1])
    assert labeling_weight(p3, [1, 1, 1]) == total_weight(p3)


def test_p3_validity(p3):
    assert is_wrdf(p3, (0, 2, 0))
    assert not is_wrdf(p3, (0, 1, 0))


def test_complete_centre():
    K = complete_graph(5)
    assert is_wrdf(K, (0, 0, 2, 0, 0))


def test_labeling_weight(k3, p3):
    assert labeling_weight(k3, (2, 0, 0)) == 2
    assert labeling_weight(p3, (2, 0, 1)) == 3


def test_length_mismatch(p3):
    with pytest.raises(ArityMismatchError):
        is_wrdf(p3, (1, 1))
    with pytest.raises(ArityMismatchError):
        labeling_weight(p3, (1, 1, 1, 1))


def test_is_dominating(p3):
    assert is_dominating(p3, range(3))
    assert is_dominating(p3, {1})
    assert not is_dominating(p3, {0})
    E = empty_graph(3)
    assert not any(is_dominating(E, D) for D in [set(), {0}, {0, 1}, {1, 2}])


def test_labeling_parts_and_text():
    f = RomanLabeling.parse("2,0,1")
    assert (f.V0, f.V1, f.V2) == ({1}, {2}, {0})
    assert str(f) == "2,0,1"
    assert RomanLabeling.from_sets(3, ones=[2], twos=[0]) == f
    with pytest.raises(ValueError):
        RomanLabeling((3, 0))


@given(weighted_graphs(max_n=6))
def test_optimum_structure(G):
    res = enumerate_all_optima(G)
    m = min(G.weights)
    for f in res.all_optima:
        # V1 u V2 dominates whenever f is Roman
        assert is_dominating(G, f.V1 | f.V2)
        if f.V2:
            assert labeling_weight(G, f) >= 2 * m
    assert res.value == labeling_weight(G, res.witness)
    assert res.value >= Fraction(0)
