import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wroman.graph import build_graph  # noqa: E402

weights_st = st.one_of(
    st.integers(1, 9).map(Fraction),
    st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=6).filter(lambda x: x > 0),
)


@st.composite
def weighted_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    ws = draw(st.lists(weights_st, min_size=n, max_size=n))
    return build_graph(n, edges, ws)


@pytest.fixture
def p3():
    return build_graph(3, [(0, 1), (1, 2)], [1, 5, 1])


@pytest.fixture
def k3():
    return build_graph(3, [(0, 1), (0, 2), (1, 2)], [1, 2, 3])
