"""Deterministic graph generators.

Randomness comes from :class:`random.Random` (Mersenne Twister) seeded with
the caller's seed.  For ``random`` graphs the pairs ``(u, v)``, ``u < v``, are
visited in lexicographic order and kept when ``rng.random() < p``; vertex
weights are drawn afterwards, vertex by vertex.  The same (kind, params,
seed) therefore always yields the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import GraphError
from .graph import WeightedGraph, build_graph, disjoint_union, parse_weight

WeightSampler = Callable[[random.Random, int], list[Fraction]]


@dataclass(frozen=True)
class ConstWeights:
    value: Fraction = Fraction(1)

    def __call__(self, rng: random.Random, n: int) -> list[Fraction]:
        return [Fraction(self.value)] * n


@dataclass(frozen=True)
class IntegerWeights:
    """Uniform integers on ``[low, high]``."""

    low: int = 1
    high: int = 9

    def __call__(self, rng: random.Random, n: int) -> list[Fraction]:
        return [Fraction(rng.randint(self.low, self.high)) for _ in range(n)]


@dataclass(frozen=True)
class GridWeights:
    """Uniform on the grid ``{k/denominator}`` between ``low`` and ``high``."""

    low: Fraction = Fraction(1, 3)
    high: Fraction = Fraction(3)
    denominator: int = 3

    def __call__(self, rng: random.Random, n: int) -> list[Fraction]:
        lo = int(Fraction(self.low) * self.denominator)
        hi = int(Fraction(self.high) * self.denominator)
        return [Fraction(rng.randint(lo, hi), self.denominator) for _ in range(n)]


@dataclass(frozen=True)
class MixedWeights:
    """Each vertex independently integer-valued or grid-valued."""

    integers: IntegerWeights = IntegerWeights()
    grid: GridWeights = GridWeights()

    def __call__(self, rng: random.Random, n: int) -> list[Fraction]:
        out = []
        for _ in range(n):
            sampler = self.integers if rng.random() < 0.5 else self.grid
            out.extend(sampler(rng, 1))
        return out


def _resolve_weights(weights, rng: random.Random, n: int) -> list[Fraction]:
    if weights is None:
        return [Fraction(1)] * n
    if callable(weights):
        return weights(rng, n)
    if isinstance(weights, (int, str, Fraction)):
        return [parse_weight(weights)] * n
    ws = [parse_weight(w) for w in weights]
    if len(ws) != n:
        raise GraphError(f"{len(ws)} weights for {n} vertices")
    return ws


def path_graph(n: int, weights=None, seed: int | None = None) -> WeightedGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    rng = random.Random(seed)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], _resolve_weights(weights, rng, n))


def cycle_graph(n: int, weights=None, seed: int | None = None) -> WeightedGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return build_graph(n, edges, _resolve_weights(weights, rng, n))


def complete_graph(n: int, weights=None, seed: int | None = None) -> WeightedGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, edges, _resolve_weights(weights, rng, n))


def complete_bipartite_graph(
    s: int, t: int, weights=None, seed: int | None = None
) -> WeightedGraph:
    """``K_{s,t}`` with side X = ``0..s-1`` and side Y = ``s..s+t-1``."""
    if s < 1 or t < 1:
        raise GraphError("complete bipartite graph needs s, t >= 1")
    rng = random.Random(seed)
    edges = [(x, s + y) for x in range(s) for y in range(t)]
    return build_graph(s + t, edges, _resolve_weights(weights, rng, s + t))


def star_graph(leaves: int, weights=None, seed: int | None = None) -> WeightedGraph:
    """``K_{1,leaves}``; vertex 0 is the centre."""
    return complete_bipartite_graph(1, leaves, weights, seed)


def empty_graph(n: int, weights=None, seed: int | None = None) -> WeightedGraph:
    if n < 0:
        raise GraphError("empty graph needs n >= 0")
    rng = random.Random(seed)
    return build_graph(n, [], _resolve_weights(weights, rng, n))


def gnp_graph(n: int, p, weights=None, seed: int | None = None) -> WeightedGraph:
    """Erdos-Renyi ``G(n, p)``; ``p`` may be a float or an exact Fraction."""
    pf = float(Fraction(p)) if isinstance(p, str) else float(p)
    if not 0 <= pf <= 1 or n < 0:
        raise GraphError(f"invalid G(n,p) parameters n={n}, p={p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < pf]
    return build_graph(n, edges, _resolve_weights(weights, rng, n))


def matching_graph(
    pair_weights: Sequence, isolated_weights: Sequence = ()
) -> WeightedGraph:
    """Disjoint edges whose endpoints share a weight, plus isolated vertices."""
    parts = [build_graph(2, [(0, 1)], [w, w]) for w in pair_weights]
    parts += [build_graph(1, [], [w]) for w in isolated_weights]
    return disjoint_union(*parts)


_KINDS = {
    "path": lambda p, w, s: path_graph(p["n"], w, s),
    "cycle": lambda p, w, s: cycle_graph(p["n"], w, s),
    "complete": lambda p, w, s: complete_graph(p["n"], w, s),
    "complete_bipartite": lambda p, w, s: complete_bipartite_graph(p["s"], p["t"], w, s),
    "star": lambda p, w, s: star_graph(p["t"] if "t" in p else p["n"] - 1, w, s),
    "empty": lambda p, w, s: empty_graph(p["n"], w, s),
    "random": lambda p, w, s: gnp_graph(p["n"], p["p"], w, s),
    "disjoint_union": lambda p, w, s: disjoint_union(*p["parts"]),
}

KINDS = tuple(_KINDS)


def generate(kind: str, params: dict | None = None, seed: int | None = 0, weights=None) -> WeightedGraph:
    """Build a graph of the named ``kind``.

    ``weights`` is a constant, an explicit list, or a sampler such as
    :class:`IntegerWeights`; the default is all ones.
    """
    if kind not in _KINDS:
        raise GraphError(f"unknown graph kind {kind!r}; choose from {', '.join(KINDS)}")
    params = dict(params or {})
    try:
        return _KINDS[kind](params, weights, seed)
    except KeyError as exc:
        raise GraphError(f"kind {kind!r} is missing parameter {exc.args[0]!r}") from None
