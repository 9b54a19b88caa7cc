"""Maximum k-vertex protection on graphs of bounded degree.

Three-color random separation: the source and the inner vertices of the
burning tree are red, the protected vertices green, and the tree's other
neighbours yellow. The red BFS from the source then exposes the protected
set as the green boundary.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional

from ..errors import InputError, InvalidStrategyError
from ..game import Scenario, Strategy, strategy_value
from ..graph import Graph, edge_key
from ..reductions import reduce_multi_step
from ..verify import schedule, sorted_candidates
from .coloring import (
    EXHAUSTIVE,
    UNIVERSAL,
    Color,
    SolveResult,
    TrialBudget,
    enumerate_red_components,
    masks_to_set,
    random_colors,
    red_component,
    trial_rng,
)

PALETTE3 = (Color.RED, Color.GREEN, Color.YELLOW)


def min_bfs_burning_tree(g: Graph, s: int, targets: Iterable[int]) -> tuple[frozenset, list]:
    """Union of shortest source-to-target paths, each target kept a leaf.

    The path to target ``v`` is a BFS path in ``g`` with the other targets
    removed (ties resolved towards smaller ids). Returns the vertex set and
    the edge list.
    """
    targets = g.vids(targets)
    if s in targets:
        raise InputError("the source cannot be a target")
    verts = {s}
    edges = set()
    for t in sorted(targets):
        blocked = targets - {t}
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            if u == t:
                break
            for w in g.adj[u]:
                if w not in parent and w not in blocked:
                    parent[w] = u
                    if w != t:
                        queue.append(w)
        if t not in parent:
            raise InputError(f"target {g.labels[t]} is unreachable from the source")
        v = t
        while parent[v] is not None:
            verts.add(v)
            edges.add(edge_key(parent[v], v))
            v = parent[v]
    return frozenset(verts), sorted(edges)


def _search(
    g: Graph,
    s: int,
    k: int,
    max_cand: int,
    p: int,
    h: int,
    budget: TrialBudget,
    p_good: float,
    t_default: int,
) -> SolveResult:
    sc = Scenario.single(g, s, p=p, h=h)
    cache: dict[tuple, Optional[int]] = {}
    best_value = None
    best_st = None

    def consider(region: frozenset, cand: frozenset):
        nonlocal best_value, best_st
        if len(cand) > max_cand:
            return
        seq = schedule(sorted_candidates(g, s, region, cand), p, h)
        if seq is None or math.ceil(len(seq) / p) > k:
            return
        key = tuple(seq)
        if key not in cache:
            try:
                cache[key] = strategy_value(sc, Strategy.sequence(seq, p))
            except InvalidStrategyError:
                cache[key] = None
        val = cache[key]
        if val is not None and (best_value is None or val > best_value):
            best_value, best_st = val, Strategy.sequence(seq, p)

    used = 0
    if budget.mode == EXHAUSTIVE:
        for red, green, mult, complete in enumerate_red_components(g, s, PALETTE3, {}, max_green=max_cand):
            used += mult
            if complete:
                consider(masks_to_set(red), masks_to_set(green))
    else:
        if budget.mode == UNIVERSAL:
            from ..universal import derandomized_colorings

            t = budget.t if budget.t is not None else min(g.n, t_default)
            stream = derandomized_colorings(g.n, t, colors=3, seed=budget.seed)
        else:
            count = budget.trial_count(p_good)
            stream = (random_colors(trial_rng(budget.seed, i), g.n, 3) for i in range(count))
        for colors in stream:
            used += 1
            colors = list(colors)
            colors[s] = Color.RED
            region = red_component(g, s, colors)
            cand = set()
            for v in region:
                cand.update(w for w in g.adj[v] if colors[w] == Color.GREEN)
            consider(region, frozenset(cand))
    return SolveResult(None, best_st, best_value, used, budget.seed, budget.mode)


def _check(g: Graph, s: int, k: int, d: Optional[int]) -> int:
    if not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")
    g.vid(s)
    if d is None:
        d = g.max_degree
    if g.max_degree > d:
        raise InputError(f"degree bound violated: max degree {g.max_degree} > d={d}")
    return d


def solve_max_k_protection_bounded_degree(
    g: Graph, s: int, k: int, budget: TrialBudget = TrialBudget(), d: Optional[int] = None
) -> SolveResult:
    """Maximize saved value protecting at most ``k`` vertices (one per round).

    ``d`` defaults to the graph's maximum degree. Randomized runs are sized
    with good-coloring probability ``3 ** -(k*k*(d+1))``.
    """
    d = _check(g, s, k, d)
    e = k * k * (d + 1)
    return _search(g, s, k, k, 1, 1, budget, 3.0 ** -e, k * k + k * k * d + 1)


def solve_max_k_step_protection(
    g: Graph,
    s: int,
    k: int,
    p: int,
    h: int,
    budget: TrialBudget = TrialBudget(),
    d: Optional[int] = None,
) -> SolveResult:
    """``k`` rounds of ``p`` protections against ``h``-layer spread.

    Candidate sets are capped at ``ceil(k*p/h)`` vertices and checked with
    the multi-step ordering rule.
    """
    d = _check(g, s, k, d)
    kk = reduce_multi_step(k, p, h)
    e = kk * kk * (d + 1)
    return _search(g, s, k, kk, p, h, budget, 3.0 ** -e, kk * kk + kk * kk * d + 1)
