"""Falsification harness: run every theorem check on graphs and corpora.

Each check looks at exact solver output for one graph and returns
``(applicable, passed, detail)``.  Checks quantified over *every* optimal
labeling run over the full list from :func:`enumerate_all_optima`; the
independence of the 1-set is only claimed for *some* optimum, so it runs
over the optima with the fewest 1-labels.

A failing check is shrunk by greedily deleting vertices and edges while it
keeps failing, and the small graph is kept as the counterexample.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Callable

from .differential import differential_of_graph, labeling_from_set
from .errors import GraphError, SizeGuardError
from .families import cycle_constructions, cycle_label_total, cycle_upper_bound
from .generators import IntegerWeights, MixedWeights, cycle_graph, gnp_graph, matching_graph
from .graph import (
    WeightedGraph,
    complement,
    format_rational,
    has_edge_set,
    induced_subgraph,
    is_independent,
    max_weighted_degree,
    remove_edge,
    remove_vertex,
    total_weight,
)
from .bounds import is_thp_extremal
from .roman import RomanLabeling, is_dominating, is_wrdf, labeling_weight
from .solvers import (
    SolveOptions,
    SolveResult,
    enumerate_all_optima,
    gamma_w_bruteforce,
    gamma_wR_bruteforce,
    gamma_wR_dp,
)
from .wrd import dumps

Solver = Callable[[WeightedGraph], SolveResult]


@dataclass
class TheoremCheck:
    id: str
    applicable: bool
    passed: bool
    detail: str = ""
    counterexample: str | None = None
    trial: int | None = None
    seed: int | str | None = None

    @property
    def status(self) -> str:
        if not self.applicable:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


@dataclass
class VerificationReport:
    entries: list[TheoremCheck] = field(default_factory=list)
    trials: int = 1
    seed: int | str | None = None

    @property
    def failures(self) -> list[TheoremCheck]:
        return [e for e in self.entries if e.applicable and not e.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: VerificationReport) -> None:
        self.entries.extend(other.entries)

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for e in self.entries:
            row = out.setdefault(e.id, {"PASS": 0, "FAIL": 0, "SKIP": 0})
            row[e.status] += 1
        return out

    def to_text(self) -> str:
        lines = []
        if self.trials == 1 and self.entries and self.entries[0].trial is None:
            for e in self.entries:
                lines.append(f"{e.status} {e.id}" + (f"  ({e.detail})" if e.detail else ""))
        else:
            lines.append(f"trials={self.trials} seed={self.seed} failures={len(self.failures)}")
            for tid, row in self.summary().items():
                lines.append(f"{tid}: pass={row['PASS']} fail={row['FAIL']} skip={row['SKIP']}")
        for e in self.failures:
            lines.append(f"--- counterexample for {e.id} (trial={e.trial}, seed={e.seed}): {e.detail}")
            if e.counterexample:
                lines.append(e.counterexample.rstrip("\n"))
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [asdict(e) | {"status": e.status} for e in self.entries]

    def to_json(self) -> str:
        doc = {
            "trials": self.trials,
            "seed": self.seed,
            "failures": len(self.failures),
            "records": self.to_records(),
        }
        return json.dumps(doc, indent=2)


class _Context:
    """Lazily computed exact quantities shared by the checks of one graph."""

    def __init__(self, G: WeightedGraph, solver: Solver, opts: SolveOptions):
        self.G = G
        self.solver = solver
        self.opts = opts

    @cached_property
    def reported(self) -> SolveResult:
        return self.solver(self.G)

    @cached_property
    def optima(self) -> SolveResult:
        return enumerate_all_optima(self.G, self.opts)

    @cached_property
    def gamma_wR(self) -> Fraction:
        return self.optima.value

    @cached_property
    def gamma_w(self) -> Fraction:
        return gamma_w_bruteforce(self.G, self.opts).value

    @cached_property
    def differential(self):
        return differential_of_graph(self.G, self.opts.max_n_binary)

    @cached_property
    def w(self) -> Fraction:
        return total_weight(self.G)


def _fmt(x) -> str:
    return format_rational(x) if isinstance(x, Fraction) else str(x)


def _check_witness(c: _Context):
    r = c.reported
    f = r.witness
    if not isinstance(f, RomanLabeling):
        return True, False, "solver returned no labeling"
    if not is_wrdf(c.G, f):
        return True, False, f"witness {f} is not a Roman labeling"
    wt = labeling_weight(c.G, f)
    return True, wt == r.value, f"witness weight {_fmt(wt)} vs reported {_fmt(r.value)}"


def _check_optimality(c: _Context):
    r = c.reported
    g = labeling_from_set(c.G, c.differential.best_set)
    gw = labeling_weight(c.G, g)
    ok = gw >= r.value and c.gamma_wR == r.value
    return True, ok, f"reported {_fmt(r.value)}, exhaustive {_fmt(c.gamma_wR)}, differential labeling {g} of weight {_fmt(gw)}"


def _check_duality(c: _Context):
    rhs = c.w - c.differential.value
    g = labeling_from_set(c.G, c.differential.best_set)
    ok = c.gamma_wR == rhs and is_wrdf(c.G, g) and labeling_weight(c.G, g) == rhs
    return True, ok, f"{_fmt(c.gamma_wR)} vs {_fmt(c.w)} - {_fmt(c.differential.value)}"


def _check_sandwich(c: _Context):
    ok = c.gamma_w <= c.gamma_wR <= 2 * c.gamma_w
    return True, ok, f"{_fmt(c.gamma_w)} <= {_fmt(c.gamma_wR)} <= {_fmt(2 * c.gamma_w)}"


def _check_empty_graph(c: _Context):
    edgeless = not has_edge_set(c.G)
    eq = c.gamma_w == c.gamma_wR
    return True, eq == edgeless, f"edgeless={edgeless}, equal={eq}"


def _check_degree_bound(c: _Context):
    if not has_edge_set(c.G):
        return False, True, "no edges"
    raw = 2 * c.w / (max_weighted_degree(c.G) + 1)
    ok = raw <= c.gamma_wR
    if all(x.denominator == 1 for x in c.G.weights):
        ok = ok and -(-raw.numerator // raw.denominator) <= c.gamma_wR
    return True, ok, f"bound {_fmt(raw)} vs {_fmt(c.gamma_wR)}"


def _over_optima(c: _Context, pred, label: str):
    for f in c.optima.all_optima:
        if not pred(f):
            return True, False, f"{label} fails for optimum {f}"
    return True, True, f"{len(c.optima.all_optima)} optima"


def _check_prop_a(c: _Context):
    G, W = c.G, c.G.weights

    def pred(f):
        V1 = f.V1
        return all(W[u] == W[v] for u, v in G.edges if u in V1 and v in V1)

    return _over_optima(c, pred, "adjacent 1-labels with unequal weights")


def _check_prop_b(c: _Context):
    def pred(f):
        lab = f.labels
        return not any({lab[u], lab[v]} == {1, 2} for u, v in c.G.edges)

    return _over_optima(c, pred, "edge between 1-set and 2-set")


def _check_prop_c(c: _Context):
    def pred(f):
        keep = sorted(f.V0 | f.V2)
        H = induced_subgraph(c.G, keep)
        index = {v: i for i, v in enumerate(keep)}
        D = {index[v] for v in f.V2}
        if not is_dominating(H, D):
            return False
        return gamma_w_bruteforce(H, c.opts).value == H.weight_of(D)

    return _over_optima(c, pred, "2-set is not a minimum dominating set of G[V0+V2]")


def _check_remark(c: _Context):
    opt = c.optima.all_optima
    fewest = min(len(f.V1) for f in opt)
    for f in opt:
        if len(f.V1) == fewest and not is_independent(c.G, f.V1):
            return True, False, f"optimum {f} with fewest 1-labels has adjacent 1-labels"
    tb = gamma_wR_bruteforce(c.G, SolveOptions(tie_break_min_V1=True, max_n_ternary=c.opts.max_n_ternary))
    if not is_independent(c.G, tb.witness.V1):
        return True, False, f"tie-broken witness {tb.witness} has adjacent 1-labels"
    return True, True, f"min |V1| = {fewest}"


def _check_weight_bound(c: _Context):
    if c.G.n < 2:
        return False, True, "needs n >= 2"
    return True, c.gamma_wR <= c.w, f"{_fmt(c.gamma_wR)} <= {_fmt(c.w)}"


def _check_thp(c: _Context):
    if c.G.n < 2:
        return False, True, "needs n >= 2"
    ext = is_thp_extremal(c.G)
    eq = c.gamma_wR == c.w
    return True, ext == eq, f"extremal={ext}, gamma_wR==w(G): {eq}"


def _check_lemma(c: _Context):
    if not has_edge_set(c.G) or c.gamma_wR != c.w:
        return False, True, "needs an edge and gamma_wR == w(G)"
    G, W, adj = c.G, c.G.weights, c.G.adjacency

    def pred(f):
        V0, V2 = f.V0, f.V2
        for u in V2:
            if W[u] != sum((W[v] for v in adj[u] if v in V0), Fraction(0)):
                return False
        if not is_independent(G, V2):
            return False
        for u in V2:
            for v in adj[u]:
                if v in V0 and not (adj[u] == {v} and adj[v] == {u}):
                    return False
        return True

    return _over_optima(c, pred, "isolated-edge structure")


def _check_nordhaus_gaddum(c: _Context):
    G = c.G
    if G.n < 3:
        return False, True, "needs n >= 3"
    H = complement(G)
    if not has_edge_set(G) or not has_edge_set(H):
        return False, True, "graph or complement is edgeless"
    lower = 4 * min(G.weights)
    total = c.gamma_wR + gamma_wR_bruteforce(H, c.opts).value
    upper = 2 * c.w
    return True, lower <= total < upper, f"{_fmt(lower)} <= {_fmt(total)} < {_fmt(upper)}"


CHECKS: dict[str, Callable[[_Context], tuple[bool, bool, str]]] = {
    "witness": _check_witness,
    "optimality": _check_optimality,
    "duality": _check_duality,
    "sandwich": _check_sandwich,
    "empty-graph": _check_empty_graph,
    "degree-bound": _check_degree_bound,
    "prop-a-equal-v1-weights": _check_prop_a,
    "prop-b-no-v1-v2-edge": _check_prop_b,
    "prop-c-v2-min-dominating": _check_prop_c,
    "remark-v1-independent": _check_remark,
    "weight-bound": _check_weight_bound,
    "thp-characterization": _check_thp,
    "lemma-isolated-edge": _check_lemma,
    "nordhaus-gaddum": _check_nordhaus_gaddum,
}


def _fails(check, G: WeightedGraph, solver: Solver, opts: SolveOptions) -> bool:
    if G.n < 1:
        return False
    try:
        applicable, passed, _ = check(_Context(G, solver, opts))
    except GraphError:
        return False
    return applicable and not passed


def shrink(G: WeightedGraph, fails: Callable[[WeightedGraph], bool], max_steps: int = 200) -> WeightedGraph:
    """Greedily delete vertices, then edges, while ``fails`` stays true."""
    steps = 0
    changed = True
    while changed and steps < max_steps:
        changed = False
        for v in range(G.n):
            H = remove_vertex(G, v)
            steps += 1
            if H.n >= 1 and fails(H):
                G, changed = H, True
                break
        if changed:
            continue
        for u, v in G.sorted_edges():
            H = remove_edge(G, u, v)
            steps += 1
            if fails(H):
                G, changed = H, True
                break
    return G


def _default_solver(opts: SolveOptions) -> Solver:
    return lambda G: gamma_wR_bruteforce(G, opts)


def verify_graph(
    G: WeightedGraph,
    opts: SolveOptions = SolveOptions(max_n_ternary=10),
    solver: Solver | None = None,
    shrink_failures: bool = True,
) -> VerificationReport:
    """Run every check on ``G``.

    ``solver`` is the routine under test (default: exhaustive search); the
    remaining checks always use the independent exhaustive routes.
    """
    if G.n < 1:
        raise GraphError("need at least one vertex")
    solver = solver or _default_solver(opts)
    if G.n > opts.max_n_ternary:
        raise SizeGuardError(f"verification limited to n <= {opts.max_n_ternary}, got {G.n}")
    ctx = _Context(G, solver, opts)
    report = VerificationReport()
    for cid, check in CHECKS.items():
        applicable, passed, detail = check(ctx)
        entry = TheoremCheck(cid, applicable, passed, detail)
        if applicable and not passed:
            small = G
            if shrink_failures:
                small = shrink(G, lambda H: _fails(check, H, solver, opts))
            comments = [f"failed check {cid}: {detail}"]
            if small is not G:
                comments.append(f"shrunk from n={G.n}, m={G.m}")
            entry.counterexample = dumps(small, comments)
        report.entries.append(entry)
    return report


@dataclass(frozen=True)
class CorpusParams:
    """Random corpus description; ``family`` is ``random`` or ``matching``.

    ``matching`` graphs are disjoint equal-weight edges plus isolated
    vertices, the extremal family of the weight bound.
    """

    n_range: tuple[int, int] = (3, 9)
    edge_prob: float | Fraction = Fraction(1, 2)
    weights: Callable = IntegerWeights(1, 9)
    trials: int = 200
    seed: int = 42
    family: str = "random"


def trial_seed(seed: int, trial: int) -> str:
    return f"{seed}:{trial}"


def corpus_graph(params: CorpusParams, trial: int) -> WeightedGraph:
    """The graph of one trial, rebuilt from ``(params, trial)`` alone."""
    s = trial_seed(params.seed, trial)
    rng = random.Random(s)
    lo, hi = params.n_range
    n = rng.randint(lo, hi)
    if params.family == "random":
        return gnp_graph(n, params.edge_prob, params.weights, seed=s)
    if params.family == "matching":
        pairs = rng.randint(0, n // 2)
        ws = params.weights(rng, pairs + (n - 2 * pairs))
        return matching_graph(ws[:pairs], ws[pairs:])
    raise GraphError(f"unknown corpus family {params.family!r}")


def verify_corpus(
    params: CorpusParams,
    opts: SolveOptions = SolveOptions(max_n_ternary=10),
    out_dir: str | Path | None = None,
) -> VerificationReport:
    """Run :func:`verify_graph` on every trial; failing graphs go to ``out_dir``."""
    lo, hi = params.n_range
    if lo < 1 or hi < lo or hi > opts.max_n_ternary or params.trials < 0:
        raise GraphError(f"invalid corpus parameters {params}")
    report = VerificationReport(trials=params.trials, seed=params.seed)
    for i in range(params.trials):
        G = corpus_graph(params, i)
        sub = verify_graph(G, opts)
        for e in sub.entries:
            e.trial, e.seed = i, trial_seed(params.seed, i)
            if not e.passed and out_dir is not None:
                path = Path(out_dir)
                path.mkdir(parents=True, exist_ok=True)
                (path / f"trial{i:04d}-{e.id}.wrd").write_text(e.counterexample or dumps(G))
        report.merge(sub)
    return report


def verify_cycle_theorems(
    n_range: tuple[int, int] = (3, 12),
    trials: int = 20,
    seed: int = 0,
    weights: Callable = MixedWeights(),
    opts: SolveOptions = SolveOptions(),
) -> VerificationReport:
    """Cycle bound, equality characterisation, constructions and DP agreement.

    For each ``n`` the unit-weight cycle is checked first, then ``trials``
    random weightings.
    """
    lo, hi = n_range
    if lo < 3 or hi > opts.max_n_ternary:
        raise GraphError(f"cycle range {n_range} outside 3..{opts.max_n_ternary}")
    report = VerificationReport(trials=0, seed=seed)
    for n in range(lo, hi + 1):
        samples = [[Fraction(1)] * n]
        for i in range(trials):
            samples.append(weights(random.Random(f"{seed}:{n}:{i}"), n))
        for i, ws in enumerate(samples):
            G = cycle_graph(n, ws)
            gamma = gamma_wR_bruteforce(G, opts).value
            cb = cycle_upper_bound(ws)
            constant = len(set(ws)) == 1
            cons = cycle_constructions(ws)
            total = sum((c.weight for c in cons), Fraction(0))
            rows = [
                ("cycle-bound", True, gamma <= cb.constructive <= cb.bound,
                 f"{_fmt(gamma)} <= {_fmt(cb.bound)}"),
                ("cycle-constructions", True, all(is_wrdf(G, c.labeling) for c in cons), f"{n} rotations"),
                ("cycle-averaging", True, total == cycle_label_total(n) * total_weight(G),
                 f"sum {_fmt(total)} = {cycle_label_total(n)} * {_fmt(total_weight(G))}"),
                ("cycle-constant-equality", constant, gamma == cb.bound, f"{_fmt(gamma)} vs {_fmt(cb.bound)}"),
                ("cycle-equality-iff-constant", n % 3 != 0, (gamma == cb.bound) == constant,
                 f"equal={gamma == cb.bound}, constant={constant}"),
                ("cycle-dp", True, gamma_wR_dp(G).value == gamma, "dp vs exhaustive"),
            ]
            for cid, applicable, passed, detail in rows:
                entry = TheoremCheck(cid, applicable, passed, detail, trial=report.trials, seed=f"{seed}:{n}:{i}")
                if applicable and not passed:
                    entry.counterexample = dumps(G, [f"failed check {cid}: {detail}"])
                report.entries.append(entry)
            report.trials += 1
    return report
