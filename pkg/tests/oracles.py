"""Naive reference computations, independent of the package's solvers.

They read only ``n``, ``edges`` and ``weights`` and enumerate literally.
"""

from fractions import Fraction
from itertools import combinations, product


def neighbours(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def roman_labelings(n, edges):
    adj = neighbours(n, edges)
    for f in product((0, 1, 2), repeat=n):
        if all(f[v] != 0 or any(f[u] == 2 for u in adj[v]) for v in range(n)):
            yield f


def roman_optima(n, edges, weights):
    """(minimum weight, sorted list of all minimising labelings)."""
    best, arg = None, []
    for f in roman_labelings(n, edges):
        c = sum(Fraction(x) * w for x, w in zip(f, weights))
        if best is None or c < best:
            best, arg = c, [f]
        elif c == best:
            arg.append(f)
    return best, sorted(arg)


def gamma_w(n, edges, weights):
    adj = neighbours(n, edges)
    best = None
    for k in range(n + 1):
        for D in combinations(range(n), k):
            Ds = set(D)
            if all(v in Ds or adj[v] & Ds for v in range(n)):
                c = sum((Fraction(weights[v]) for v in D), Fraction(0))
                if best is None or c < best:
                    best = c
    return best


def differential(n, edges, weights):
    adj = neighbours(n, edges)
    best = Fraction(0)
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            Ss = set(S)
            B = set().union(*(adj[v] for v in S)) - Ss
            val = sum((Fraction(weights[v]) for v in B), Fraction(0)) - sum(
                (Fraction(weights[v]) for v in S), Fraction(0)
            )
            best = max(best, val)
    return best
