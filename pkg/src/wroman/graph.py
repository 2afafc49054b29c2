"""Vertex-weighted simple graphs with exact rational weights.

Vertices are ``0..n-1`` inside the library; the weighted-DIMACS reader and
writer translate to the 1-based ids used on disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence

from .errors import (
    ArityMismatchError,
    DuplicateEdgeError,
    GraphError,
    LoopEdgeError,
    NonPositiveWeightError,
    VertexRangeError,
)

WeightLike = int | str | Fraction


def parse_weight(value: WeightLike | float) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction` (sign is not checked).

    Strings may be decimals (``"2.5"``) or ratios (``"5/2"``).  Floats are
    read through their shortest repr so ``0.1`` means one tenth.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a weight")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise NonPositiveWeightError(f"non-finite weight {value!r}")
        return Fraction(repr(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"cannot parse weight {value!r}") from exc
    raise TypeError(f"unsupported weight type {type(value).__name__}")


def format_rational(x: Fraction) -> str:
    """``"p/q"`` in lowest terms, or a bare integer string."""
    return str(Fraction(x))


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable simple undirected graph with positive vertex weights.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.  Build instances with
    :func:`build_graph`, which validates input; the constructor trusts it.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    weights: tuple[Fraction, ...]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self, v)
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def weight_of(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        ws = ",".join(format_rational(w) for w in self.weights)
        return f"WeightedGraph(n={self.n}, edges={self.sorted_edges()}, weights=[{ws}])"


def _check_vertex(G: WeightedGraph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < G.n:
        raise VertexRangeError(f"vertex {v!r} outside 0..{G.n - 1}")


def check_vertex_set(G: WeightedGraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        _check_vertex(G, v)
    return S


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    weights: Sequence[WeightLike | float],
) -> WeightedGraph:
    """Validate and build a weighted graph on vertices ``0..n-1``.

    Raises a distinct :class:`GraphError` subclass for a loop, a duplicate
    edge, a non-positive weight, a weight-count mismatch and an endpoint
    out of range.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if len(weights) != n:
        raise ArityMismatchError(f"{len(weights)} weights for {n} vertices")
    ws = tuple(parse_weight(w) for w in weights)
    for i, w in enumerate(ws):
        if w <= 0:
            raise NonPositiveWeightError(f"vertex {i} has weight {w}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        for x in (u, v):
            if not isinstance(x, int) or not 0 <= x < n:
                raise VertexRangeError(f"endpoint {x!r} outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} given twice")
        seen.add(key)
    return WeightedGraph(n, frozenset(seen), ws)


def total_weight(G: WeightedGraph) -> Fraction:
    return sum(G.weights, Fraction(0))


def is_normed(G: WeightedGraph) -> bool:
    """True when the vertex weights sum to the vertex count."""
    return total_weight(G) == G.n


def weighted_degree(G: WeightedGraph, v: int) -> Fraction:
    """Weight of the open neighbourhood of ``v`` divided by ``w(v)``."""
    _check_vertex(G, v)
    return G.weight_of(G.adjacency[v]) / G.weights[v]


def max_weighted_degree(G: WeightedGraph) -> Fraction:
    if G.n == 0:
        raise GraphError("weighted degree extrema need at least one vertex")
    return max(weighted_degree(G, v) for v in G.vertices())


def min_weighted_degree(G: WeightedGraph) -> Fraction:
    if G.n == 0:
        raise GraphError("weighted degree extrema need at least one vertex")
    return min(weighted_degree(G, v) for v in G.vertices())


def has_edge_set(G: WeightedGraph) -> bool:
    """The "non-trivial" predicate used by every bound: at least one edge."""
    return G.m > 0


def complement(G: WeightedGraph) -> WeightedGraph:
    edges = frozenset(
        (u, v) for u in range(G.n) for v in range(u + 1, G.n) if (u, v) not in G.edges
    )
    return WeightedGraph(G.n, edges, G.weights)


def induced_subgraph(G: WeightedGraph, S: Iterable[int]) -> WeightedGraph:
    """Subgraph on ``S`` relabelled to ``0..|S|-1`` in increasing vertex order."""
    keep = sorted(check_vertex_set(G, S))
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    )
    return WeightedGraph(len(keep), edges, tuple(G.weights[v] for v in keep))


def disjoint_union(*graphs: WeightedGraph) -> WeightedGraph:
    offset = 0
    edges: set[tuple[int, int]] = set()
    weights: list[Fraction] = []
    for H in graphs:
        edges.update((u + offset, v + offset) for u, v in H.edges)
        weights.extend(H.weights)
        offset += H.n
    return WeightedGraph(offset, frozenset(edges), tuple(weights))


def remove_vertex(G: WeightedGraph, v: int) -> WeightedGraph:
    return induced_subgraph(G, (u for u in G.vertices() if u != v))


def remove_edge(G: WeightedGraph, u: int, v: int) -> WeightedGraph:
    return WeightedGraph(G.n, G.edges - {(min(u, v), max(u, v))}, G.weights)


def connected_components(G: WeightedGraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * G.n
    comps = []
    adj = G.adjacency
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for x in adj[u]:
                if not seen[x]:
                    seen[x] = True
                    stack.append(x)
        comps.append(sorted(comp))
    return comps


def is_independent(G: WeightedGraph, S: Iterable[int]) -> bool:
    S = set(S)
    return not any(u in S and v in S for u, v in G.edges)


def mask_of(S: Iterable[int]) -> int:
    m = 0
    for v in S:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def integer_weights(G: WeightedGraph) -> tuple[list[int], int]:
    """Weights scaled by the lcm of their denominators.

    Returns ``(ints, scale)`` with ``weights[v] == Fraction(ints[v], scale)``;
    exhaustive solvers compare plain ints and divide once at the end.
    """
    scale = math.lcm(*{w.denominator for w in G.weights}) if G.n else 1
    if scale == 1:
        return [w.numerator for w in G.weights], 1
    return [w.numerator * (scale // w.denominator) for w in G.weights], scale
