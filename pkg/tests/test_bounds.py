from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import weighted_graphs
from wroman.bounds import (
    bounds_report,
    degree_lower_bound,
    is_thp_extremal,
    nordhaus_gaddum,
    sandwich_check,
    weight_upper_bound,
)
from wroman.errors import InapplicableError
from wroman.generators import complete_graph, cycle_graph, empty_graph, matching_graph, path_graph
from wroman.graph import build_graph, disjoint_union


def test_sandwich_examples(p3, k3):
    sw = sandwich_check(p3)
    assert (sw.gamma_w, sw.gamma_wR) == (2, 3) and sw.ok
    sw = sandwich_check(k3)
    assert (sw.gamma_w, sw.gamma_wR) == (1, 2) and sw.ok
    sw = sandwich_check(empty_graph(3, [1, 2, 3]))
    assert sw.equality and sw.edgeless and sw.ok


def test_degree_bound_examples(k3):
    db = degree_lower_bound(k3)
    assert db.raw == 2 and db.ceiled == 2
    frac = build_graph(2, [(0, 1)], ["1/2", "3/2"])
    assert degree_lower_bound(frac).ceiled is None
    with pytest.raises(InapplicableError):
        degree_lower_bound(empty_graph(2))


def test_degree_bound_tight_on_complete():
    for n in range(2, 8):
        G = complete_graph(n, [4] * n)
        assert degree_lower_bound(G).raw == bounds_report(G).gamma_wR == 8


def test_weight_bound():
    G = disjoint_union(matching_graph([3, 5], [2]), empty_graph(0))
    assert is_thp_extremal(G)
    rep = bounds_report(G)
    assert rep.gamma_wR == weight_upper_bound(G) == 18
    assert not is_thp_extremal(build_graph(2, [(0, 1)], [1, 2]))
    with pytest.raises(InapplicableError):
        weight_upper_bound(empty_graph(1))


def test_nordhaus_gaddum_c4():
    ng = nordhaus_gaddum(cycle_graph(4))
    assert ng.applicable and (ng.lower, ng.total, ng.upper) == (4, 7, 8)


def test_nordhaus_gaddum_p4_self_complementary():
    ng = nordhaus_gaddum(path_graph(4))
    assert ng.total == 6 and ng.ok


def test_nordhaus_gaddum_inapplicable():
    assert not nordhaus_gaddum(empty_graph(4)).applicable
    assert not nordhaus_gaddum(complete_graph(4)).applicable
    assert not nordhaus_gaddum(complete_graph(2)).applicable


def test_bounds_report_fields(p3):
    rep = bounds_report(p3)
    assert rep.gamma_w == 2 and rep.gamma_wR == 3
    assert rep.degree_lower_bound == Fraction(7, 3) and rep.ceiled_degree_lower_bound == 3
    assert rep.weight_upper_bound == 7 and not rep.thp_extremal
    assert rep.ng_triple is not None and rep.ok


@settings(max_examples=80, deadline=None)
@given(weighted_graphs(max_n=7))
def test_report_always_ok(G):
    assert bounds_report(G).ok
