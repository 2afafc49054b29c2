import pytest

from wroman import wrd
from wroman.errors import ParseError
from wroman.generators import IntegerWeights, MixedWeights, generate
from wroman.graph import build_graph

P3_TEXT = "c path\np wrd 3 2\nv 1 1\nv 2 5\nv 3 1\ne 1 2\ne 2 3\n"


def test_parse_p3():
    G, comments = wrd.loads_document(P3_TEXT)
    assert G == build_graph(3, [(0, 1), (1, 2)], [1, 5, 1])
    assert comments == ["path"]


def test_decimal_and_ratio_weights():
    G = wrd.loads("p wrd 2 1\nv 1 2.5\nv 2 5/2\ne 1 2\n")
    assert G.weights[0] == G.weights[1]
    assert wrd.dumps(G) == "p wrd 2 1\nv 1 5/2\nv 2 5/2\ne 1 2\n"


def test_round_trip_byte_identical():
    assert wrd.dumps(*wrd.loads_document(P3_TEXT)) == P3_TEXT


@pytest.mark.parametrize("seed", range(5))
def test_generated_round_trip(seed, tmp_path):
    G = generate("random", {"n": 9, "p": 0.4}, seed=seed, weights=MixedWeights())
    text = wrd.dumps(G, ["kind=random seed=%d" % seed])
    path = tmp_path / "g.wrd"
    path.write_text(text)
    assert wrd.read(path) == G
    assert wrd.dumps(*wrd.loads_document(text)) == text


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("p wrd 2 1\nv 1 1\nv 2 1\ne 1 1\n", 4, "loop"),
        ("p wrd 2 1\nv 1 1\nv 1 1\ne 1 2\n", 3, "duplicate vertex"),
        ("p wrd 3 2\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 1 2\n", 6, "duplicate edge"),
        ("p wrd 2 0\nv 1 1\nv 2 0\n", 3, "not positive"),
        ("p wrd 2 0\nv 1 1\nv 2 -3\n", 3, "not positive"),
        ("p wrd 2 1\nv 1 1\ne 1 2\n", 3, "vertex lines"),
        ("p wrd 2 1\nv 1 1\nv 2 1\n", 4, "edge lines"),
        ("v 1 1\np wrd 1 0\n", 1, "out of order"),
        ("p wrd 2 1\nv 1 1\nv 2 1\ne 2 1\n", 4, "u < v"),
        ("p wrd 2 0\nv 1 1\nv 2 x\n", 3, "bad weight"),
        ("p wrd 2 0\nv 1 1\nv 2 1\nc late\n", 4, "comment"),
        ("p edge 2 0\n", 1, "p wrd"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as info:
        wrd.loads(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        wrd.loads("p wrd 2 0\nv 1 1\nv 2   0\n")
    assert info.value.column == 7


def test_integer_corpus_round_trip():
    G = generate("random", {"n": 6, "p": 0.5}, seed=2, weights=IntegerWeights(1, 9))
    assert wrd.loads(wrd.dumps(G)) == G
