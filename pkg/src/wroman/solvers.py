"""Exact solvers for the weighted Roman domination number and ``gamma_w``.

All solvers work on integer-scaled weights (see
:func:`wroman.graph.integer_weights`) and convert back to exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .differential import differential_of_graph, labeling_from_set
from .errors import GraphError, SizeGuardError
from .graph import WeightedGraph, integer_weights, total_weight
from .roman import RomanLabeling

Method = Literal["brute", "bnb", "dp", "diff"]


@dataclass(frozen=True)
class SolveOptions:
    method: Method = "brute"
    enumerate_all_optima: bool = False
    tie_break_min_V1: bool = False
    max_n_ternary: int = 14  # 3**n labelings
    max_n_binary: int = 20  # 2**n subsets


@dataclass(frozen=True)
class SolveResult:
    value: Fraction
    witness: RomanLabeling | frozenset[int]
    method: str
    all_optima: tuple[RomanLabeling, ...] | None = field(default=None, compare=False)


def _subset_tables(n: int, w: list[int], closed: list[int]):
    """Per-mask weight, closed-neighbourhood cover and base-3 digit sum."""
    size = 1 << n
    W = [0] * size
    C = [0] * size
    K = [0] * size
    pow3 = [3**i for i in range(n)]
    for m in range(1, size):
        low = m & -m
        i = low.bit_length() - 1
        rest = m ^ low
        W[m] = W[rest] + w[i]
        C[m] = C[rest] | closed[i]
        K[m] = K[rest] + pow3[i]
    return W, C, K


def _labeling(n: int, V1: int, V2: int) -> RomanLabeling:
    return RomanLabeling(tuple(2 if V2 >> i & 1 else 1 if V1 >> i & 1 else 0 for i in range(n)))


def _ternary_search(G: WeightedGraph, opts: SolveOptions, collect_all: bool):
    n = G.n
    if n > opts.max_n_ternary:
        raise SizeGuardError(f"3**n enumeration limited to n <= {opts.max_n_ternary}, got {n}")
    w, scale = integer_weights(G)
    nb = G.neighbor_masks
    closed = [nb[i] | 1 << i for i in range(n)]
    W, C, K = _subset_tables(n, w, closed)
    full = (1 << n) - 1
    min_v1 = opts.tie_break_min_V1
    best = W[full] + 1
    best_key = None
    best_pair = (full, 0)
    optima: list[tuple[int, int]] = []
    for V2 in range(1 << n):
        c2 = 2 * W[V2]
        if c2 > best:
            continue
        rest = full ^ V2
        forced = rest & ~C[V2]  # no 2-neighbour, so label 0 is not allowed
        base = c2 + W[forced]
        if base > best:
            continue
        free = rest ^ forced
        t = free
        while True:
            V1 = forced | t
            c = base + W[t]
            if c <= best:
                key = (c, V1.bit_count() if min_v1 else 0, K[V1] + 2 * K[V2])
                if c < best:
                    best = c
                    best_key = key
                    best_pair = (V1, V2)
                    if collect_all:
                        optima = [(V1, V2)]
                else:
                    if collect_all:
                        optima.append((V1, V2))
                    if key < best_key:
                        best_key = key
                        best_pair = (V1, V2)
            if t == 0:
                break
            t = (t - 1) & free
    value = Fraction(best, scale)
    witness = _labeling(n, *best_pair)
    all_optima = None
    if collect_all:
        optima.sort(key=lambda p: K[p[0]] + 2 * K[p[1]])
        all_optima = tuple(_labeling(n, a, b) for a, b in optima)
    return value, witness, all_optima


def gamma_wR_bruteforce(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Minimum labeling weight over every Roman labeling of ``G``.

    Labelings are enumerated as pairs (2-set, 1-set); a whole 2-set block is
    skipped once its committed weight exceeds the incumbent.  The witness
    is the first optimum in mixed-radix counter order, vertex 0 being the
    least significant digit; with ``tie_break_min_V1`` the optimum with
    fewest 1-labels wins first.
    """
    if G.n < 1:
        raise GraphError("need at least one vertex")
    value, witness, optima = _ternary_search(G, opts, opts.enumerate_all_optima)
    return SolveResult(value, witness, "brute", optima)


def enumerate_all_optima(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    if G.n < 1:
        raise GraphError("need at least one vertex")
    value, witness, optima = _ternary_search(G, opts, True)
    return SolveResult(value, witness, "brute", optima)


def gamma_w_bruteforce(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Minimum weight of a dominating set, by enumerating all subsets."""
    n = G.n
    if n > opts.max_n_binary:
        raise SizeGuardError(f"2**n enumeration limited to n <= {opts.max_n_binary}, got {n}")
    w, scale = integer_weights(G)
    nb = G.neighbor_masks
    closed = [nb[i] | 1 << i for i in range(n)]
    full = (1 << n) - 1
    size = 1 << n
    W = [0] * size
    C = [0] * size
    best, best_mask = sum(w), full
    for m in range(1, size):
        low = m & -m
        i = low.bit_length() - 1
        W[m] = W[m ^ low] + w[i]
        C[m] = C[m ^ low] | closed[i]
        if C[m] == full and W[m] < best:
            best, best_mask = W[m], m
    witness = frozenset(i for i in range(n) if best_mask >> i & 1)
    return SolveResult(Fraction(best, scale), witness, "brute")


def gamma_wR_via_differential(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """``w(G)`` minus the graph differential; witness 2/0/1 on S*, B(S*), rest."""
    d = differential_of_graph(G, max_n=opts.max_n_binary)
    return SolveResult(total_weight(G) - d.value, labeling_from_set(G, d.best_set), "diff")


# -- degree <= 2 dynamic programme ------------------------------------------

# states for the vertex just processed
_TWO, _ONE, _ZERO_OK, _ZERO_OPEN = 0, 1, 2, 3
_LABEL_OF_STATE = (2, 1, 0, 0)


def _chain_values(ws: list[int], start: list[int]) -> list[int]:
    """Final cost of each state after sweeping ``ws`` (value only).

    ``_ZERO_OPEN`` means "labelled 0, no 2-neighbour yet": the next vertex
    must take label 2.
    """
    a, b, c, u = start
    for i in range(1, len(ws)):
        x = ws[i]
        m3 = a if a <= b else b
        if c < m3:
            m3 = c
        m4 = u if u < m3 else m3
        m2 = b if b <= c else c
        a, b, c, u = m4 + 2 * x, m3 + x, a, m2
    return [a, b, c, u]


def _chain_labels(ws: list[int], start: list[int], final_state: int) -> list[int]:
    """Rerun the sweep keeping back-pointers and recover optimal labels."""
    a, b, c, u = start
    back_two = bytearray(len(ws))
    back_one = bytearray(len(ws))
    back_open = bytearray(len(ws))
    for i in range(1, len(ws)):
        x = ws[i]
        if a <= b:
            m3, p3 = a, 0
        else:
            m3, p3 = b, 1
        if c < m3:
            m3, p3 = c, 2
        if u < m3:
            m4, p4 = u, 3
        else:
            m4, p4 = m3, p3
        if b <= c:
            m2, p2 = b, 1
        else:
            m2, p2 = c, 2
        back_two[i] = p4
        back_one[i] = p3
        back_open[i] = p2
        a, b, c, u = m4 + 2 * x, m3 + x, a, m2
    labels = [0] * len(ws)
    state = final_state
    for i in range(len(ws) - 1, 0, -1):
        labels[i] = _LABEL_OF_STATE[state]
        if state == _TWO:
            state = back_two[i]
        elif state == _ONE:
            state = back_one[i]
        elif state == _ZERO_OK:
            state = _TWO
        else:
            state = back_open[i]
    labels[0] = _LABEL_OF_STATE[state]
    return labels


def _chains(G: WeightedGraph) -> list[tuple[list[int], bool]]:
    """Split a max-degree-2 graph into (vertex order, is_cycle) chains."""
    adj = G.adjacency
    seen = bytearray(G.n)
    chains = []

    def walk(s: int) -> list[int]:
        order = []
        cur = s
        while cur >= 0:
            seen[cur] = 1
            order.append(cur)
            nxt = -1
            for x in adj[cur]:
                if not seen[x] and (nxt < 0 or x < nxt):
                    nxt = x
            cur = nxt
        return order

    for s in range(G.n):
        if not seen[s] and len(adj[s]) < 2:
            chains.append((walk(s), False))
    for s in range(G.n):
        if not seen[s]:
            chains.append((walk(s), True))
    return chains


def gamma_wR_dp(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Linear-time exact solver for disjoint unions of paths and cycles."""
    adj = G.adjacency
    for v in G.vertices():
        if len(adj[v]) > 2:
            raise GraphError(f"vertex {v} has degree {len(adj[v])}; dp needs max degree <= 2")
    w, scale = integer_weights(G)
    inf = 2 * sum(w) + 1  # exceeds every feasible cost
    labels = [0] * G.n
    total = 0
    for order, is_cycle in _chains(G):
        ws = [w[v] for v in order]
        x = ws[0]
        if not is_cycle:
            cases = [([2 * x, x, inf, 0], (_TWO, _ONE, _ZERO_OK))]
        else:
            cases = [
                ([2 * x, inf, inf, inf], (_TWO, _ONE, _ZERO_OK, _ZERO_OPEN)),
                ([inf, x, inf, inf], (_TWO, _ONE, _ZERO_OK)),
                # first vertex 0, dominated by the last one
                ([inf, inf, 0, inf], (_TWO,)),
                # first vertex 0, dominated by the second one
                ([inf, inf, inf, 0], (_TWO, _ONE, _ZERO_OK)),
            ]
        best = None
        for start, accept in cases:
            final = _chain_values(ws, start)
            state = min(accept, key=lambda s: (final[s], s))
            if best is None or final[state] < best[0]:
                best = (final[state], start, state)
        cost, start, state = best
        total += cost
        for v, lab in zip(order, _chain_labels(ws, start, state)):
            labels[v] = lab
    return SolveResult(Fraction(total, scale), RomanLabeling(tuple(labels)), "dp")


# -- branch and bound --------------------------------------------------------


class _MaskWeigher:
    """Weight of a vertex mask via byte-sized lookup tables."""

    def __init__(self, w: list[int]):
        self.tables = []
        for lo in range(0, len(w), 8):
            chunk = w[lo:lo + 8]
            t = [0] * (1 << len(chunk))
            for m in range(1, len(t)):
                low = m & -m
                t[m] = t[m ^ low] + chunk[low.bit_length() - 1]
            self.tables.append(t)

    def __call__(self, m: int) -> int:
        s = 0
        for t in self.tables:
            s += t[m & 255]
            m >>= 8
            if not m:
                break
        return s


def _greedy_differential_set(n: int, w: list[int], nb: list[int], weigh: _MaskWeigher) -> int:
    S = 0
    B = 0
    value = 0
    while True:
        best_gain, best_v = 0, -1
        for v in range(n):
            if S >> v & 1:
                continue
            S2 = S | 1 << v
            B2 = (B | nb[v]) & ~S2
            gain = weigh(B2) - weigh(S2) - value
            if gain > best_gain:
                best_gain, best_v = gain, v
        if best_v < 0:
            return S
        S |= 1 << best_v
        B = (B | nb[best_v]) & ~S
        value += best_gain


def gamma_wR_branch_and_bound(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Depth-first branch and bound over labels 2, 0, 1.

    Vertices are branched on in order of decreasing weighted degree.  The
    bound on the undecided part is ``2 w(R) / (max(D, 1) + 1)`` where ``R``
    holds the vertices still needing a label or a 2-neighbour and ``D`` is
    the largest ``w(N(u) & R) / w(u)`` over undecided ``u``.  It is admissible
    for the same counting reason as the global degree bound.
    """
    n = G.n
    if n < 1:
        raise GraphError("need at least one vertex")
    w, scale = integer_weights(G)
    nb = list(G.neighbor_masks)
    closed = [nb[i] | 1 << i for i in range(n)]
    weigh = _MaskWeigher(w)
    full = (1 << n) - 1

    # incumbent from a greedy differential set
    S = _greedy_differential_set(n, w, nb, weigh)
    cover = 0
    for v in range(n):
        if S >> v & 1:
            cover |= closed[v]
    B = cover & ~S
    best = [2 * weigh(S) + weigh(full & ~cover), (full & ~cover, S)]

    # ratio comparisons w(N(v))*w(u) vs w(N(u))*w(v) without fractions
    nbw = [weigh(nb[v]) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-Fraction(nbw[v], w[v]), v))

    def search(depth: int, undecided: int, d0: int, d1: int, d2: int, cov: int, committed: int):
        open0 = d0 & ~cov
        if depth == n:
            if not open0 and committed < best[0]:
                best[0] = committed
                best[1] = (d1, d2)
            return
        R = (undecided | open0) & ~cov
        if R:
            rw = weigh(R)
            num, den = 1, 1
            m = undecided
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                a = weigh(nb[u] & R)
                if a * den > num * w[u]:
                    num, den = a, w[u]
            # committed + ceil(2 rw den / (num + den)) >= best  -> prune
            if 2 * rw * den > (best[0] - committed - 1) * (num + den):
                return
            # an open zero needs an undecided neighbour
            m = open0
            while m:
                low = m & -m
                if not nb[low.bit_length() - 1] & undecided:
                    return
                m ^= low
        elif committed >= best[0]:
            return
        v = order[depth]
        bit = 1 << v
        rest = undecided & ~bit
        x = w[v]
        search(depth + 1, rest, d0, d1, d2 | bit, cov | closed[v], committed + 2 * x)
        if cov & bit or nb[v] & rest:
            search(depth + 1, rest, d0 | bit, d1, d2, cov, committed)
        if not cov & bit:
            search(depth + 1, rest, d0, d1 | bit, d2, cov, committed + x)

    search(0, full, 0, 0, 0, 0, 0)
    d1, d2 = best[1]
    return SolveResult(Fraction(best[0], scale), _labeling(n, d1, d2), "bnb")


_METHODS = {
    "brute": gamma_wR_bruteforce,
    "bnb": gamma_wR_branch_and_bound,
    "dp": gamma_wR_dp,
    "diff": gamma_wR_via_differential,
}


def solve(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Dispatch on ``opts.method``; all-optima requests always go exhaustive."""
    if opts.enumerate_all_optima:
        return enumerate_all_optima(G, opts)
    try:
        fn = _METHODS[opts.method]
    except KeyError:
        raise ValueError(f"unknown method {opts.method!r}") from None
    return fn(G, opts)
