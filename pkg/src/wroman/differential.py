"""External boundaries, set differentials and the graph differential.

The differential of ``S`` is ``w(B(S)) - w(S)`` where ``B(S)`` are the
vertices outside ``S`` with a neighbour inside it.  Its maximum over all
subsets (the empty set included) determines the weighted Roman domination
number: ``gamma_wR(G) = w(G) - differential(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import SizeGuardError, TheoremViolation
from .graph import WeightedGraph, check_vertex_set, integer_weights, total_weight

DEFAULT_SUBSET_GUARD = 20


@dataclass(frozen=True)
class DifferentialResult:
    best_set: frozenset[int]
    value: Fraction
    boundary: frozenset[int]


def boundary(G: WeightedGraph, S: Iterable[int]) -> frozenset[int]:
    S = check_vertex_set(G, S)
    adj = G.adjacency
    out: set[int] = set()
    for v in S:
        out.update(adj[v])
    return frozenset(out - S)


def differential_of_set(G: WeightedGraph, S: Iterable[int]) -> Fraction:
    S = check_vertex_set(G, S)
    return G.weight_of(boundary(G, S)) - G.weight_of(S)


def _tie_key(S: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return len(S), tuple(sorted(S))


def differential_of_graph(G: WeightedGraph, max_n: int = DEFAULT_SUBSET_GUARD) -> DifferentialResult:
    """Maximise the set differential over all ``2**n`` subsets.

    Subsets are visited in reflected Gray-code order; flipping one vertex
    updates the boundary weight in time proportional to its degree.  Ties
    go to the smallest set, then the lexicographically first one.
    """
    n = G.n
    if n > max_n:
        raise SizeGuardError(f"differential enumeration limited to n <= {max_n}, got {n}")
    w, scale = integer_weights(G)
    adj = [tuple(a) for a in G.adjacency]
    inside = [False] * n
    hits = [0] * n  # neighbours of v currently inside S
    bw = 0  # w(B(S))
    sw = 0  # w(S)
    best = 0
    best_gray = 0
    best_key = (0, ())
    prev = 0
    for i in range(1, 1 << n):
        gray = i ^ (i >> 1)
        v = (gray ^ prev).bit_length() - 1
        prev = gray
        if not inside[v]:
            inside[v] = True
            sw += w[v]
            if hits[v]:
                bw -= w[v]
            for x in adj[v]:
                hits[x] += 1
                if hits[x] == 1 and not inside[x]:
                    bw += w[x]
        else:
            inside[v] = False
            sw -= w[v]
            if hits[v]:
                bw += w[v]
            for x in adj[v]:
                hits[x] -= 1
                if hits[x] == 0 and not inside[x]:
                    bw -= w[x]
        value = bw - sw
        if value > best:
            best, best_gray = value, gray
            best_key = None
        elif value == best:
            key = _tie_key(_gray_set(gray))
            if best_key is None:
                best_key = _tie_key(_gray_set(best_gray))
            if key < best_key:
                best_gray, best_key = gray, key
    S = _gray_set(best_gray)
    return DifferentialResult(S, Fraction(best, scale), boundary(G, S))


def _gray_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def labeling_from_set(G: WeightedGraph, S: Iterable[int]):
    """2 on ``S``, 0 on its boundary, 1 everywhere else."""
    from .roman import RomanLabeling

    S = check_vertex_set(G, S)
    B = boundary(G, S)
    return RomanLabeling(tuple(2 if v in S else 0 if v in B else 1 for v in G.vertices()))


def check_duality(G: WeightedGraph, max_n: int = 14) -> bool:
    """Compare exhaustive ``gamma_wR`` with ``w(G) - differential(G)``.

    Returns True; a mismatch raises :class:`TheoremViolation` with a dump.
    """
    from .solvers import SolveOptions, gamma_wR_bruteforce
    from .wrd import dumps

    brute = gamma_wR_bruteforce(G, SolveOptions(max_n_ternary=max_n))
    diff = differential_of_graph(G)
    rhs = total_weight(G) - diff.value
    if brute.value != rhs:
        raise TheoremViolation(
            f"gamma_wR={brute.value} but w(G)-differential={rhs}",
            dumps(G, [f"witness {brute.witness}", f"best_set {sorted(diff.best_set)}"]),
        )
    return True
