"""Weighted-DIMACS (``p wrd``) reader and writer.

Layout, in this order::

    c <comment>          (any number)
    p wrd <n> <m>
    v <id> <weight>      (exactly n lines, ids 1..n, each once)
    e <u> <v>            (exactly m lines, u < v, each pair once)

Weights are decimals (``2.5``) or ratios (``5/2``).  The writer always emits
the canonical ratio form, so ``dumps(*loads_document(text)) == text`` for
files it produced.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import WeightedGraph, format_rational, parse_weight


def _int_token(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno, col) from None


def _columns(line: str) -> list[tuple[str, int]]:
    """Tokens with their 1-based starting columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def loads_document(text: str) -> tuple[WeightedGraph, list[str]]:
    """Parse ``text`` into a graph plus its comment lines (without ``c ``)."""
    comments: list[str] = []
    header: tuple[int, int] | None = None
    weights: dict[int, Fraction] = {}
    edges: set[tuple[int, int]] = set()
    stage = "c"
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        toks = _columns(raw)
        kind, col = toks[0]
        if kind == "c":
            if stage != "c":
                raise ParseError("comment after the problem line", lineno, col)
            comments.append(raw[2:] if raw.startswith("c ") else raw[1:].lstrip())
        elif kind == "p":
            if stage != "c":
                raise ParseError("second problem line", lineno, col)
            if len(toks) != 4 or toks[1][0] != "wrd":
                raise ParseError("expected 'p wrd <n> <m>'", lineno, col)
            n = _int_token(toks[2][0], lineno, toks[2][1], "n")
            m = _int_token(toks[3][0], lineno, toks[3][1], "m")
            if n < 0 or m < 0:
                raise ParseError("negative count", lineno, toks[2][1])
            header = (n, m)
            stage = "v"
        elif kind == "v":
            if stage != "v":
                raise ParseError("vertex line out of order", lineno, col)
            if len(toks) != 3:
                raise ParseError("expected 'v <id> <weight>'", lineno, col)
            vid = _int_token(toks[1][0], lineno, toks[1][1], "vertex id")
            if not 1 <= vid <= header[0]:
                raise ParseError(f"vertex id {vid} outside 1..{header[0]}", lineno, toks[1][1])
            if vid in weights:
                raise ParseError(f"duplicate vertex line for {vid}", lineno, toks[1][1])
            try:
                w = parse_weight(toks[2][0])
            except GraphError:
                raise ParseError(f"bad weight {toks[2][0]!r}", lineno, toks[2][1]) from None
            if w <= 0:
                raise ParseError(f"weight {toks[2][0]} is not positive", lineno, toks[2][1])
            weights[vid] = w
        elif kind == "e":
            if stage == "v":
                if len(weights) != header[0]:
                    raise ParseError(
                        f"{len(weights)} vertex lines, expected {header[0]}", lineno, col
                    )
                stage = "e"
            if stage != "e":
                raise ParseError("edge line out of order", lineno, col)
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno, col)
            u = _int_token(toks[1][0], lineno, toks[1][1], "endpoint")
            v = _int_token(toks[2][0], lineno, toks[2][1], "endpoint")
            n = header[0]
            for x, c in ((u, toks[1][1]), (v, toks[2][1])):
                if not 1 <= x <= n:
                    raise ParseError(f"endpoint {x} outside 1..{n}", lineno, c)
            if u == v:
                raise ParseError(f"loop edge at {u}", lineno, toks[1][1])
            if u > v:
                raise ParseError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno, toks[1][1])
            if (u, v) in edges:
                raise ParseError(f"duplicate edge {u} {v}", lineno, toks[1][1])
            edges.add((u, v))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, col)
    if header is None:
        raise ParseError("missing problem line", lineno + 1)
    n, m = header
    if len(weights) != n:
        raise ParseError(f"{len(weights)} vertex lines, expected {n}", lineno + 1)
    if len(edges) != m:
        raise ParseError(f"{len(edges)} edge lines, expected {m}", lineno + 1)
    G = WeightedGraph(
        n,
        frozenset((u - 1, v - 1) for u, v in edges),
        tuple(weights[i] for i in range(1, n + 1)),
    )
    return G, comments


def loads(text: str) -> WeightedGraph:
    return loads_document(text)[0]


def dumps(G: WeightedGraph, comments: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p wrd {G.n} {G.m}")
    lines.extend(f"v {i + 1} {format_rational(w)}" for i, w in enumerate(G.weights))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


def read(path: str | Path) -> WeightedGraph:
    return loads(Path(path).read_text())


def write(G: WeightedGraph, path: str | Path, comments: list[str] | tuple[str, ...] = ()) -> None:
    Path(path).write_text(dumps(G, comments))
