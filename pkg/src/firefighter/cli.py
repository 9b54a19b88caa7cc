"""Command-line front end. JSON goes to stdout, human-readable notes to stderr.

Exit codes: 0 success, 1 a "no" answer or nothing feasible, 2 an error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Optional

from .errors import FirefighterError
from .game import Scenario, burn_time_or_none, outcome_value, parse_strategy, simulate
from .generate import KINDS, generate_instance
from .graph import Graph
from .io import format_graph, load_graph
from .oracle import brute_force_burnt_decision, brute_force_optimal
from .reductions import expand_values, merge_sources, reduce_multi_step, subdivide_weighted
from .solvers import (
    TrialBudget,
    solve_at_most_k_burnt,
    solve_exactly_k_burnt,
    solve_max_k_protection_bounded_degree,
    solve_max_k_step_protection,
    solve_tree_max_k,
    solve_tree_plus_b,
    solve_unicyclic_max_k,
)
from .solvers.coloring import MODES
from .verify import order_and_verify_multi

SEED_ENV = "FIREFIGHTER_SEED"
PROBLEMS = ("at-most-burnt", "exact-burnt", "max-protect")
SOLVERS = ("auto", "tree", "unicyclic", "tree-plus-b", "bounded")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text + "\n")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _load(ref: str, source: Optional[str]) -> tuple[Graph, frozenset]:
    g, sources = load_graph(ref)
    if source is not None:
        sources = frozenset(g.vid(x) for x in source.split(","))
    if not sources:
        raise UsageError("no fire source: add an 's' record or pass --source")
    return g, sources


def _single(g: Graph, sources: frozenset, p: int = 1, h: int = 1) -> tuple[Scenario, Graph, int]:
    sc, _ = merge_sources(Scenario(g, sources, p=p, h=h))
    if len(sources) > 1:
        _note(f"merged {len(sources)} sources into {sc.graph.labels[sc.source]}")
    return sc, sc.graph, sc.source


def _vertex_list(g: Graph, text: str) -> frozenset:
    return frozenset(g.vid(x) for x in text.split(",") if x.strip())


# -- subcommands -------------------------------------------------------------


def _pick_solver(g: Graph, args) -> str:
    if args.solver != "auto":
        return args.solver
    if args.p != 1 or args.h != 1:
        return "bounded"
    if g.is_tree():
        return "tree"
    if args.b is not None:
        return "tree-plus-b"
    if g.is_unicyclic():
        return "unicyclic"
    return "bounded"


def cmd_solve(args) -> int:
    g0, sources = _load(args.graph, args.source)
    sc, g, s = _single(g0, sources, args.p, args.h)
    budget = TrialBudget(mode=args.mode, delta=args.delta, trials=args.trials, seed=args.seed)
    if args.problem in ("at-most-burnt", "exact-burnt"):
        fn = solve_at_most_k_burnt if args.problem == "at-most-burnt" else solve_exactly_k_burnt
        res = fn(g, s, args.k, budget)
        out = res.to_json(g)
        out["problem"] = args.problem
        _emit(out)
        return 0 if res.decision else 1
    solver = _pick_solver(g, args)
    if solver == "bounded":
        if args.p != 1 or args.h != 1:
            res = solve_max_k_step_protection(g, s, args.k, args.p, args.h, budget, d=args.d)
        else:
            res = solve_max_k_protection_bounded_degree(g, s, args.k, budget, d=args.d)
    elif solver == "tree":
        res = solve_tree_max_k(g, s, args.k, None, budget)
    elif solver == "unicyclic":
        res = solve_unicyclic_max_k(g, s, args.k, budget)
    else:
        b = args.b if args.b is not None else g.m - g.n + 1
        res = solve_tree_plus_b(g, s, args.k, b, budget)
    out = res.to_json(g)
    out["problem"] = args.problem
    out["solver"] = solver
    _emit(out)
    _note(f"{solver}: saved {res.value} using {res.trials_used} colorings")
    return 0 if res.strategy is not None else 1


def cmd_oracle(args) -> int:
    g0, sources = _load(args.graph, args.source)
    if args.problem in ("at-most-burnt", "exact-burnt"):
        _, g, s = _single(g0, sources)
        mode = "at-most" if args.problem == "at-most-burnt" else "exact"
        dec, wit = brute_force_burnt_decision(g, s, args.k, mode)
        _emit({"problem": args.problem, "decision": "yes" if dec else "no", "strategy": wit.labels(g) if wit else None})
        return 0 if dec else 1
    sc = Scenario(g0, sources, p=args.p, h=args.h)
    res = brute_force_optimal(sc, args.k)
    _emit(
        {
            "problem": args.problem,
            "value": res.value,
            "strategies": [st.labels(g0) for st in res.strategies],
            "irredundant": [st.labels(g0) for st in res.irredundant],
            "complete": res.complete,
        }
    )
    return 0


def cmd_simulate(args) -> int:
    g, sources = _load(args.graph, args.source)
    sc = Scenario(g, sources, p=args.p, h=args.h)
    st = parse_strategy(args.strategy, g)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        out = simulate(sc, st)
    for w in caught:
        _note(f"warning: {w.message}")
    _emit(
        {
            "burnt": sorted(g.labels[v] for v in out.burnt),
            "saved": sorted(g.labels[v] for v in out.saved),
            "protected": sorted(g.labels[v] for v in out.protected),
            "burn_time": {g.labels[v]: burn_time_or_none(t) for v, t in enumerate(out.burn_time)},
            "value": outcome_value(g, out),
            "saved_count": out.saved_count,
            "rounds_played": out.rounds_played,
            "truncated": out.truncated,
        }
    )
    return 0


def cmd_verify(args) -> int:
    g, sources = _load(args.graph, args.source)
    if len(sources) != 1:
        raise UsageError("verify needs a single source")
    s = next(iter(sources))
    st = order_and_verify_multi(g, s, _vertex_list(g, args.burnt), _vertex_list(g, args.cand), args.p, args.h)
    _emit({"valid": st is not None, "order": None if st is None else [g.labels[v] for v in st.vertices], "rounds": None if st is None else st.labels(g)})
    return 0 if st is not None else 1


def cmd_reduce(args) -> int:
    if args.mode == "multi-step":
        if args.k is None:
            raise UsageError("multi-step needs --k")
        _emit({"mode": args.mode, "k": args.k, "p": args.p, "h": args.h, "k_prime": reduce_multi_step(args.k, args.p, args.h)})
        return 0
    if args.graph is None:
        raise UsageError(f"{args.mode} needs --graph")
    g, sources = load_graph(args.graph)
    if args.mode == "merge-sources":
        if not sources:
            raise UsageError("the graph file has no sources to merge")
        sc, vmap = merge_sources(Scenario(g, sources))
        g2, src2, forbidden = sc.graph, sc.sources, frozenset()
    else:
        red = subdivide_weighted(g) if args.mode == "weighted" else expand_values(g)
        vmap = red.vmap
        g2, forbidden = red.graph, red.forbidden
        src2 = frozenset(vmap[v] for v in sources)
    text = format_graph(g2, src2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _note(f"wrote {args.out}")
    _emit(
        {
            "mode": args.mode,
            "graph": text,
            "map": {g.labels[v]: g2.labels[vmap[v]] for v in range(g.n)},
            "forbidden": sorted(g2.labels[v] for v in forbidden),
        }
    )
    return 0


def cmd_gen(args) -> int:
    g, s = generate_instance(args.kind, args.n, d=args.d, b=args.b, seed=args.seed)
    text = format_graph(g, [s])
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _note(f"wrote {args.out}")
    _emit({"kind": args.kind, "n": g.n, "m": g.m, "source": g.labels[s], "graph": text})
    return 0


def cmd_bench(args) -> int:
    from .acceptance import run_all

    only = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_all(only, echo=_note)
    _emit({"criteria": [r.to_json() for r in results], "all_passed": all(r.passed for r in results)})
    return 0 if all(r.passed for r in results) else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    parser = _Parser(prog="firefighter", description="Firefighter game solvers, simulator and oracle.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def graph_args(p, required=True):
        p.add_argument("--graph", required=required, help="graph file or fixture name (P4, STAR4, SPIDER, UNI6, C4)")
        p.add_argument("--source", help="comma-separated source vertices (overrides the file)")

    def game_args(p):
        p.add_argument("--p", type=int, default=1, help="protections per round")
        p.add_argument("--h", type=int, default=1, help="spread layers per round")

    p = sub.add_parser("solve", help="run a random-separation solver")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, help="degree bound (defaults to the max degree)")
    p.add_argument("--b", type=int, help="extra edges over a spanning tree")
    p.add_argument("--solver", choices=SOLVERS, default="auto")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--trials", type=int, help="fixed trial count for randomized mode")
    p.add_argument("--mode", choices=MODES, default="randomized")
    graph_args(p)
    game_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive search on small instances")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--k", type=int, required=True)
    graph_args(p)
    game_args(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("simulate", help="play a strategy")
    p.add_argument("--strategy", required=True, help="rounds split by ',', vertices in a round by ';'")
    graph_args(p)
    game_args(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="order a candidate set around a burnt region")
    p.add_argument("--burnt", required=True)
    p.add_argument("--cand", required=True)
    graph_args(p)
    game_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="transform an instance")
    p.add_argument("--mode", choices=("weighted", "valued", "merge-sources", "multi-step"), required=True)
    p.add_argument("--graph")
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    game_args(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run the acceptance checks")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Optional[list] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _note(f"usage error: {exc}")
        return 2
    except (FirefighterError, ValueError, OSError) as exc:
        _note(f"error: {exc}")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
