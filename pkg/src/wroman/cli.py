"""Command-line entry point: ``wroman solve|bounds|diff|family|verify|gen``.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 size guard, 4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import wrd
from .bounds import bounds_report
from .differential import differential_of_graph
from .errors import GraphError, ParseError, SizeGuardError, TheoremViolation
from .families import (
    cycle_upper_bound,
    gamma_wR_complete,
    gamma_wR_complete_bipartite,
    gamma_wR_equal_cycle,
)
from .generators import (
    KINDS,
    ConstWeights,
    GridWeights,
    IntegerWeights,
    MixedWeights,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    generate,
)
from .graph import format_rational, parse_weight, total_weight
from .solvers import SolveOptions, gamma_wR_bruteforce, gamma_wR_dp, solve
from .verify import CorpusParams, verify_corpus, verify_cycle_theorems, verify_graph

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD, EXIT_THEOREM = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _q(x: Fraction) -> str:
    return format_rational(x)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _options(args, **kw) -> SolveOptions:
    return SolveOptions(
        max_n_ternary=args.max_n_ternary,
        max_n_binary=args.max_n_binary,
        **kw,
    )


def _guards(opts: SolveOptions) -> dict:
    return {"max_n_ternary": opts.max_n_ternary, "max_n_binary": opts.max_n_binary}


def _weight_list(text: str) -> list[Fraction]:
    try:
        return [parse_weight(t) for t in text.split(",") if t.strip()]
    except GraphError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sampler(text: str):
    """``int:A:B``, ``grid:LO:HI:DEN``, ``mixed`` or ``const:C``."""
    kind, *rest = text.split(":")
    try:
        if kind == "int":
            return IntegerWeights(int(rest[0]), int(rest[1]))
        if kind == "grid":
            return GridWeights(Fraction(rest[0]), Fraction(rest[1]), int(rest[2]))
        if kind == "mixed":
            return MixedWeights()
        if kind == "const":
            return ConstWeights(Fraction(rest[0]))
    except (IndexError, ValueError):
        pass
    raise argparse.ArgumentTypeError(f"bad weight sampler {text!r}")


def _keyvals(text: str) -> dict[str, str]:
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise argparse.ArgumentTypeError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    return int(text), int(text)


# -- subcommands --------------------------------------------------------------


def cmd_solve(args) -> int:
    G = wrd.read(args.file)
    opts = _options(
        args,
        method=args.method,
        enumerate_all_optima=args.all_optima,
        tie_break_min_V1=args.min_v1,
    )
    r = solve(G, opts)
    doc = {
        "value": _q(r.value),
        "witness": list(r.witness.labels),
        "method": r.method,
        "guards": _guards(opts),
    }
    lines = [f"gamma_wR = {_q(r.value)}", f"witness = {r.witness}", f"method = {r.method}"]
    if r.all_optima is not None:
        doc["all_optima"] = [list(f.labels) for f in r.all_optima]
        lines += [f"optimum = {f}" for f in r.all_optima]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_bounds(args) -> int:
    G = wrd.read(args.file)
    opts = _options(args)
    rep = bounds_report(G, opts)
    opt = lambda x: None if x is None else _q(x)
    doc = {
        "gamma_w": opt(rep.gamma_w),
        "gamma_wR": opt(rep.gamma_wR),
        "degree_lower_bound": opt(rep.degree_lower_bound),
        "ceiled_degree_lower_bound": opt(rep.ceiled_degree_lower_bound),
        "weight_upper_bound": _q(rep.weight_upper_bound),
        "sandwich_ok": rep.sandwich_ok,
        "degree_ok": rep.degree_ok,
        "weight_ok": rep.weight_ok,
        "thp_extremal": rep.thp_extremal,
        "ng_triple": None if rep.ng_triple is None else [_q(x) for x in rep.ng_triple],
        "guards": _guards(opts),
    }
    text = "\n".join(f"{k} = {v}" for k, v in doc.items() if k != "guards")
    _emit(args, doc, text)
    return EXIT_OK


def cmd_diff(args) -> int:
    G = wrd.read(args.file)
    opts = _options(args)
    d = differential_of_graph(G, opts.max_n_binary)
    w = total_weight(G)
    gamma = gamma_wR_bruteforce(G, opts).value
    if w - d.value != gamma:
        raise TheoremViolation(
            f"w(G) - differential = {_q(w - d.value)} but gamma_wR = {_q(gamma)}", wrd.dumps(G)
        )
    S = "{" + ", ".join(str(v + 1) for v in sorted(d.best_set)) + "}"
    doc = {
        "value": _q(d.value),
        "best_set": [v + 1 for v in sorted(d.best_set)],
        "boundary": [v + 1 for v in sorted(d.boundary)],
        "total_weight": _q(w),
        "gamma_wR": _q(gamma),
        "duality": True,
        "guards": _guards(opts),
    }
    text = f"∂(G) = {_q(d.value)}, S* = {S}, w(G) − ∂(G) = {_q(w - d.value)} = γ_wR ✓"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_family(args) -> int:
    opts = _options(args)
    doc: dict = {"family": args.family, "guards": _guards(opts)}
    if args.family == "complete":
        if not args.weights:
            raise argparse.ArgumentTypeError("complete needs --weights")
        r = gamma_wR_complete(args.weights)
        G = complete_graph(len(args.weights), args.weights)
    elif args.family in ("bipartite", "star"):
        X, Y = args.x, args.y
        if args.family == "star" and X is None and args.weights:
            X, Y = args.weights[:1], args.weights[1:]
        if not X or not Y:
            raise argparse.ArgumentTypeError(f"{args.family} needs --x and --y")
        if args.family == "star" and len(X) != 1:
            raise argparse.ArgumentTypeError("star needs exactly one centre weight")
        r = gamma_wR_complete_bipartite(X, Y)
        G = complete_bipartite_graph(len(X), len(Y), list(X) + list(Y))
    elif args.family == "cycle":
        ws = args.weights
        if not ws:
            raise argparse.ArgumentTypeError("cycle needs --weights")
        cb = cycle_upper_bound(ws)
        G = cycle_graph(len(ws), ws)
        exact = gamma_wR_dp(G).value
        doc |= {
            "value": _q(cb.bound),
            "constructive": _q(cb.constructive),
            "witness": list(cb.best.labeling.labels),
            "gamma_wR": _q(exact),
            "equality": exact == cb.bound,
        }
        lines = [
            f"bound = {_q(cb.bound)}",
            f"constructive = {_q(cb.constructive)}",
            f"witness = {cb.best.labeling}",
            f"gamma_wR = {_q(exact)}",
        ]
        if len(set(ws)) == 1:
            eq = gamma_wR_equal_cycle(len(ws), ws[0])
            doc["equal_weight_value"] = _q(eq)
            lines.append(f"equal_weight_value = {_q(eq)}")
        _emit(args, doc, "\n".join(lines))
        return EXIT_OK
    if G.n <= opts.max_n_ternary:
        brute = gamma_wR_bruteforce(G, opts).value
        check = "ok" if brute == r.value else "MISMATCH"
    else:
        check = "skipped"
    doc |= {"value": _q(r.value), "witness": list(r.witness.labels), "branch": r.branch, "cross_check": check}
    _emit(args, doc, f"{_q(r.value)}\nwitness = {r.witness}\ncross_check = {check}")
    if check == "MISMATCH":
        raise TheoremViolation(f"formula {_q(r.value)} disagrees with exhaustive {_q(brute)}", wrd.dumps(G))
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = _options(args)
    if args.file:
        rep = verify_graph(wrd.read(args.file), opts)
    elif args.cycles is not None:
        kv = _keyvals(args.cycles)
        rep = verify_cycle_theorems(
            _range(kv.get("n", "3..12")),
            int(kv.get("trials", 20)),
            int(kv.get("seed", 0)),
            _sampler(kv.get("weights", "mixed")),
            opts,
        )
    elif args.random is not None:
        kv = _keyvals(args.random)
        params = CorpusParams(
            n_range=_range(kv.get("n", "3..9")),
            edge_prob=Fraction(kv.get("p", "1/2")),
            weights=_sampler(kv.get("weights", "int:1:9")),
            trials=int(kv.get("trials", 200)),
            seed=int(kv.get("seed", 42)),
            family=kv.get("family", "random"),
        )
        rep = verify_corpus(params, opts, args.out)
    else:
        raise argparse.ArgumentTypeError("verify needs a file, --random or --cycles")
    if args.json:
        print(rep.to_json())
    else:
        print(rep.to_text(), end="")
    return EXIT_OK if rep.ok else EXIT_THEOREM


def cmd_gen(args) -> int:
    params = {k: v for k, v in (("n", args.n), ("s", args.s), ("t", args.t)) if v is not None}
    if args.p is not None:
        params["p"] = Fraction(args.p)
    weights = args.weights if args.weights is not None else args.sampler
    G = generate(args.kind, params, args.seed, weights)
    desc = " ".join(f"{k}={v}" for k, v in params.items())
    comments = [f"kind={args.kind} {desc} seed={args.seed}".replace("  ", " ")]
    text = wrd.dumps(G, comments)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wroman", description="Weighted Roman domination toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n-ternary", type=int, default=14, help="size guard for 3^n search")
    common.add_argument("--max-n-binary", type=int, default=20, help="size guard for 2^n search")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="compute gamma_wR")
    s.add_argument("file")
    s.add_argument("--method", choices=["brute", "bnb", "dp", "diff"], default="brute")
    s.add_argument("--all-optima", action="store_true")
    s.add_argument("--min-v1", action="store_true", help="prefer optima with fewest 1-labels")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bounds", parents=[common], help="evaluate every bound")
    b.add_argument("file")
    b.set_defaults(func=cmd_bounds)

    d = sub.add_parser("diff", parents=[common], help="graph differential and duality")
    d.add_argument("file")
    d.set_defaults(func=cmd_diff)

    f = sub.add_parser("family", parents=[common], help="closed forms for graph families")
    f.add_argument("family", choices=["complete", "bipartite", "cycle", "star"])
    f.add_argument("--weights", type=_weight_list)
    f.add_argument("--x", type=_weight_list)
    f.add_argument("--y", type=_weight_list)
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", parents=[common], help="run the theorem checks")
    v.add_argument("file", nargs="?")
    v.add_argument("--random", metavar="n=3..9,p=1/2,trials=200,seed=42")
    v.add_argument("--cycles", metavar="n=3..12,trials=20,seed=0")
    v.add_argument("--out", help="directory for failing graph files")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a generated graph in weighted-DIMACS form")
    g.add_argument("--kind", choices=KINDS[:-1], required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--p")
    g.add_argument("--weights", type=_weight_list, help="explicit comma-separated weights")
    g.add_argument("--sampler", type=_sampler, default=None, help="int:A:B, grid:LO:HI:DEN, mixed, const:C")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (argparse.ArgumentTypeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
