"""Closed forms and explicit labelings for complete, bipartite and cycle graphs.

Every function takes plain weight lists; vertex order in the returned
witnesses follows the matching generator in :mod:`wroman.generators`
(``K_{s,t}`` lists side X first, then side Y).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GraphError
from .graph import parse_weight
from .roman import RomanLabeling


@dataclass(frozen=True)
class FamilyResult:
    value: Fraction
    witness: RomanLabeling
    branch: str


@dataclass(frozen=True)
class CycleConstruction:
    """One rotated labeling of the cycle; ``m`` is its 0-based start vertex."""

    m: int
    labeling: RomanLabeling
    weight: Fraction
    residue: int


@dataclass(frozen=True)
class CycleBound:
    bound: Fraction
    constructive: Fraction
    best: CycleConstruction


def _weights(ws: Sequence) -> list[Fraction]:
    out = [parse_weight(w) for w in ws]
    if any(w <= 0 for w in out):
        raise GraphError("weights must be positive")
    return out


def _argmin(ws: list[Fraction]) -> int:
    return min(range(len(ws)), key=lambda i: (ws[i], i))


def gamma_wR_complete(weights: Sequence) -> FamilyResult:
    """Twice the smallest weight: a 2 on a lightest vertex dominates ``K_n``."""
    ws = _weights(weights)
    if len(ws) < 2:
        raise GraphError("complete graph formula needs n >= 2")
    i = _argmin(ws)
    labels = [0] * len(ws)
    labels[i] = 2
    return FamilyResult(2 * ws[i], RomanLabeling(tuple(labels)), "2*min")


def gamma_wR_complete_bipartite(x_weights: Sequence, y_weights: Sequence) -> FamilyResult:
    """Exact value on ``K_{s,t}`` from the lightest vertex and total of each side.

    Input order is free (only the lightest vertex and the total of each side
    matter) and the sides are oriented so that ``s <= t``.  Candidates:

    * ``x1 + w(X)``: 2 on the lightest X vertex, 1 on the rest of X;
    * ``y1 + w(Y)``: the same with the sides swapped;
    * ``2 (x1 + y1)``: a 2 on the lightest vertex of each side (``s >= 2``).

    With ``s = 1`` the first candidate reads ``2 x1`` and the third is never
    smaller, so one expression covers both cases.
    """
    X = _weights(x_weights)
    Y = _weights(y_weights)
    if not X or not Y:
        raise GraphError("both sides of K_{s,t} need at least one vertex")
    s, t = len(X), len(Y)
    swapped = s > t
    if swapped:
        X, Y = Y, X
        s, t = t, s
    ix, iy = _argmin(X), _argmin(Y)
    x1, y1 = X[ix], Y[iy]
    wX, wY = sum(X, Fraction(0)), sum(Y, Fraction(0))
    candidates = [(x1 + wX, "x1+w(X)"), (y1 + wY, "y1+w(Y)")]
    if s >= 2:
        candidates.append((2 * (x1 + y1), "2(x1+y1)"))
    value, branch = min(candidates, key=lambda c: c[0])

    lx, ly = [0] * s, [0] * t
    if branch == "x1+w(X)":
        lx = [1] * s
        lx[ix] = 2
    elif branch == "y1+w(Y)":
        ly = [1] * t
        ly[iy] = 2
    else:
        lx[ix] = 2
        ly[iy] = 2
    if swapped:
        lx, ly = ly, lx
    return FamilyResult(value, RomanLabeling(tuple(lx + ly)), branch)


def gamma_wR_star(center_weight, leaf_weights: Sequence) -> FamilyResult:
    """``K_{1,t}``: centre is vertex 0, leaves follow."""
    return gamma_wR_complete_bipartite([center_weight], leaf_weights)


def _cycle_pattern(n: int, m: int) -> list[int]:
    k, r = divmod(n, 3)
    labels = [0] * n
    if r == 0:
        for i in range(k):
            labels[(m + 3 * i) % n] = 2
    elif r == 1:
        labels[m] = 1
        for i in range(k):
            labels[(m + 2 + 3 * i) % n] = 2
    else:
        for i in range(k + 1):
            labels[(m + 3 * i) % n] = 2
    return labels


def cycle_constructions(weights: Sequence) -> list[CycleConstruction]:
    """The ``n`` rotations of the residue-class pattern on ``C_n``.

    ``n = 3k``: 2 on every third vertex.  ``n = 3k+1``: 1 at the start and
    2 on every third vertex from two steps later.  ``n = 3k+2``: 2 on
    ``k+1`` vertices spaced by three.
    """
    ws = _weights(weights)
    n = len(ws)
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    out = []
    for m in range(n):
        labels = _cycle_pattern(n, m)
        weight = sum((x * w for x, w in zip(labels, ws)), Fraction(0))
        out.append(CycleConstruction(m, RomanLabeling(tuple(labels)), weight, n % 3))
    return out


def cycle_label_total(n: int) -> int:
    """Sum of labels in one construction: ``2k``, ``2k+1`` or ``2k+2``."""
    k, r = divmod(n, 3)
    return 2 * k + r


def cycle_upper_bound(weights: Sequence) -> CycleBound:
    """``(1 - k/n) w(C_n)`` with ``k = n // 3``, plus the best construction."""
    ws = _weights(weights)
    n = len(ws)
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    k = n // 3
    bound = (1 - Fraction(k, n)) * sum(ws, Fraction(0))
    best = min(cycle_constructions(ws), key=lambda c: (c.weight, c.m))
    return CycleBound(bound, best.weight, best)


def gamma_wR_equal_cycle(n: int, p) -> Fraction:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    p = parse_weight(p)
    if p <= 0:
        raise GraphError("weight must be positive")
    return math.ceil(Fraction(2 * n, 3)) * p
