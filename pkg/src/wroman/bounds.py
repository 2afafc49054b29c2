"""Bounds on the weighted Roman domination number, checked with exact values.

A bound whose check fails on exactly computed values is a bug somewhere in
this package, so :func:`bounds_report` raises :class:`TheoremViolation` rather
than returning a false flag (pass ``strict=False`` to inspect it instead).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphError, InapplicableError, TheoremViolation
from .graph import (
    WeightedGraph,
    complement,
    connected_components,
    has_edge_set,
    max_weighted_degree,
    total_weight,
)
from .solvers import SolveOptions, gamma_w_bruteforce, gamma_wR_bruteforce
from .wrd import dumps


@dataclass(frozen=True)
class DegreeBound:
    raw: Fraction
    ceiled: Fraction | None  # only with all-integer weights


@dataclass(frozen=True)
class SandwichCheck:
    gamma_w: Fraction
    gamma_wR: Fraction
    lower_ok: bool
    upper_ok: bool
    edgeless: bool
    equality: bool

    @property
    def characterization_ok(self) -> bool:
        """Equality of the two parameters exactly on edgeless graphs."""
        return self.equality == self.edgeless

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.characterization_ok


@dataclass(frozen=True)
class NordhausGaddum:
    applicable: bool
    lower: Fraction | None = None
    total: Fraction | None = None
    upper: Fraction | None = None
    lower_ok: bool = True
    upper_ok: bool = True
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


@dataclass(frozen=True)
class BoundsReport:
    gamma_w: Fraction | None
    gamma_wR: Fraction | None
    degree_lower_bound: Fraction | None
    ceiled_degree_lower_bound: Fraction | None
    weight_upper_bound: Fraction
    sandwich_ok: bool
    degree_ok: bool
    weight_ok: bool
    thp_extremal: bool
    ng_triple: tuple[Fraction, Fraction, Fraction] | None
    ng_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.sandwich_ok and self.degree_ok and self.weight_ok and self.ng_ok


def degree_lower_bound(G: WeightedGraph) -> DegreeBound:
    """``2 w(G) / (max weighted degree + 1)``; ceiled only for integer weights."""
    if not has_edge_set(G):
        raise InapplicableError("degree bound needs at least one edge")
    raw = 2 * total_weight(G) / (max_weighted_degree(G) + 1)
    ceiled = None
    if all(w.denominator == 1 for w in G.weights):
        ceiled = Fraction(math.ceil(raw))
    return DegreeBound(raw, ceiled)


def sandwich_check(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> SandwichCheck:
    gw = gamma_w_bruteforce(G, opts).value
    gr = gamma_wR_bruteforce(G, opts).value
    return SandwichCheck(
        gamma_w=gw,
        gamma_wR=gr,
        lower_ok=gw <= gr,
        upper_ok=gr <= 2 * gw,
        edgeless=not has_edge_set(G),
        equality=gw == gr,
    )


def weight_upper_bound(G: WeightedGraph) -> Fraction:
    if G.n < 2:
        raise InapplicableError("weight bound is stated for n >= 2")
    return total_weight(G)


def is_thp_extremal(G: WeightedGraph) -> bool:
    """Every component is an isolated vertex or an edge with equal end weights.

    Purely structural; it characterises ``gamma_wR(G) == w(G)``.
    """
    if G.n < 2:
        raise InapplicableError("weight bound is stated for n >= 2")
    for comp in connected_components(G):
        if len(comp) == 1:
            continue
        if len(comp) != 2 or G.weights[comp[0]] != G.weights[comp[1]]:
            return False
    return True


def nordhaus_gaddum(G: WeightedGraph, opts: SolveOptions = SolveOptions()) -> NordhausGaddum:
    """``4 min w <= gamma_wR(G) + gamma_wR(complement) < 2 w(G)``.

    Needs ``n >= 3`` and an edge in both the graph and its complement;
    otherwise the result is marked inapplicable rather than failed.
    """
    if G.n < 3:
        return NordhausGaddum(False, reason="needs n >= 3")
    H = complement(G)
    if not has_edge_set(G) or not has_edge_set(H):
        return NordhausGaddum(False, reason="graph or complement is edgeless")
    lower = 4 * min(G.weights)
    total = gamma_wR_bruteforce(G, opts).value + gamma_wR_bruteforce(H, opts).value
    upper = 2 * total_weight(G)
    return NordhausGaddum(True, lower, total, upper, lower <= total, total < upper)


def bounds_report(G: WeightedGraph, opts: SolveOptions = SolveOptions(), strict: bool = True) -> BoundsReport:
    """Evaluate every bound for ``G``; exact values need ``n`` within the guards."""
    if G.n < 1:
        raise GraphError("need at least one vertex")
    exact = G.n <= opts.max_n_ternary
    gw = gr = None
    sandwich_ok = True
    if exact:
        sw = sandwich_check(G, opts)
        gw, gr = sw.gamma_w, sw.gamma_wR
        sandwich_ok = sw.ok
    raw = ceiled = None
    degree_ok = True
    if has_edge_set(G):
        db = degree_lower_bound(G)
        raw, ceiled = db.raw, db.ceiled
        if gr is not None:
            degree_ok = raw <= gr and (ceiled is None or ceiled <= gr)
    wub = total_weight(G)
    thp = is_thp_extremal(G) if G.n >= 2 else True
    weight_ok = True
    if gr is not None and G.n >= 2:
        weight_ok = gr <= wub and (gr == wub) == thp
    ng_triple = None
    ng_ok = True
    if exact:
        ng = nordhaus_gaddum(G, opts)
        if ng.applicable:
            ng_triple = (ng.lower, ng.total, ng.upper)
            ng_ok = ng.ok
    report = BoundsReport(gw, gr, raw, ceiled, wub, sandwich_ok, degree_ok, weight_ok, thp, ng_triple, ng_ok)
    if strict and not report.ok:
        raise TheoremViolation(f"bound violated: {report}", dumps(G))
    return report
