"""Maximum k-vertex protection on trees via two-color random separation.

In a good coloring every protected vertex is green and all of its
ancestors are red, so the green vertices with all-red ancestors form an
antichain containing the solution. Picking from that antichain is a
scheduling problem: candidate ``v`` saves its whole subtree and must be
protected no later than round ``depth(v)``. Unit jobs with deadlines form a
matroid, so adding candidates in decreasing subtree weight while the
schedule stays feasible is optimal for the coloring.

Pins: RED marks vertices that may not be protected, GREEN marks vertices
that must be protected.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from ..errors import InputError, InvalidStrategyError
from ..game import Scenario, Strategy, strategy_value
from ..graph import Graph
from .coloring import (
    EXHAUSTIVE,
    UNIVERSAL,
    Color,
    PinsLike,
    SolveResult,
    TrialBudget,
    normalize_pins,
    random_colors,
    trial_rng,
)


class RootedTree:
    def __init__(self, t: Graph, s: int):
        if not t.is_tree():
            raise InputError("expected a tree")
        if not t.unit_weighted:
            raise InputError("tree solver needs unit edge weights")
        n = t.n
        self.root = s
        self.parent = [-1] * n
        self.depth = [0] * n
        self.children: list[list[int]] = [[] for _ in range(n)]
        order = [s]
        seen = [False] * n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in t.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    self.parent[v] = u
                    self.depth[v] = self.depth[u] + 1
                    self.children[u].append(v)
                    order.append(v)
                    queue.append(v)
        self.weight = list(t.vertex_values)
        # an edge value counts towards every subtree holding both endpoints
        for (u, v), z in t.edge_values.items():
            self.weight[u if self.parent[v] == u else v] += z
        for v in reversed(order):
            if self.parent[v] >= 0:
                self.weight[self.parent[v]] += self.weight[v]


def _feasible_insert(sel: list, v: int, depth) -> Optional[list]:
    out = sorted(sel + [v], key=lambda x: (depth[x], x))
    for i, x in enumerate(out, start=1):
        if depth[x] < i:
            return None
    return out


def select(cands, forced, k: int, tree: RootedTree) -> Optional[list]:
    """Best feasible schedule from the antichain ``cands`` (forced ones first)."""
    depth, weight = tree.depth, tree.weight
    sel: list = []
    for v in forced:
        sel = _feasible_insert(sel, v, depth)
        if sel is None or len(sel) > k:
            return None
    for v in sorted(cands, key=lambda x: (-weight[x], depth[x], x)):
        if len(sel) >= k:
            break
        nxt = _feasible_insert(sel, v, depth)
        if nxt is not None:
            sel = nxt
    return sel


def _antichains(tree: RootedTree, pins: dict):
    """Every (candidates, forced) pair a coloring can produce, lazily."""
    children = tree.children

    def rec(open_list, cands, forced):
        if not open_list:
            yield cands, forced
            return
        v, rest = open_list[0], open_list[1:]
        pin = pins.get(v)
        if pin == Color.RED:
            yield from rec(children[v] + rest, cands, forced)
        elif pin == Color.GREEN:
            yield from rec(rest, cands, forced + (v,))
        else:
            yield from rec(rest, cands + (v,), forced)
            yield from rec(children[v] + rest, cands, forced)

    yield from rec(list(children[tree.root]), (), ())


def _from_colors(tree: RootedTree, colors):
    cands = []
    stack = list(tree.children[tree.root])
    while stack:
        v = stack.pop()
        if colors[v] == Color.GREEN:
            cands.append(v)
        else:
            stack.extend(tree.children[v])
    return cands


def solve_tree_max_k(
    t: Graph,
    s: int,
    k: int,
    pins: PinsLike = None,
    budget: TrialBudget = TrialBudget(),
) -> SolveResult:
    """Maximize saved value on tree ``t`` rooted at ``s`` with at most ``k``
    protections. ``strategy`` is None when the GREEN pins cannot all be
    scheduled within ``k`` rounds."""
    if not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")
    pins = normalize_pins(pins, t.n)
    if pins.get(s) == Color.GREEN:
        raise InputError("the source cannot be pinned green")
    if any(c == Color.YELLOW for c in pins.values()):
        raise InputError("tree colorings use red and green only")
    tree = RootedTree(t, s)
    sc = Scenario.single(t, s)
    forced = tuple(sorted(v for v, c in pins.items() if c == Color.GREEN))
    free = [v for v in range(t.n) if v != s and v not in pins]

    cache: dict = {}
    best_value, best_st = None, None

    def consider(cands, forced_here):
        nonlocal best_value, best_st
        if len(forced_here) != len(forced):
            return  # a forced vertex lies below another green vertex
        sel = select(cands, forced_here, k, tree)
        if sel is None:
            return
        key = tuple(sel)
        if key not in cache:
            try:
                cache[key] = strategy_value(sc, Strategy.sequence(sel))
            except InvalidStrategyError:
                cache[key] = None
        val = cache[key]
        if val is not None and (best_value is None or val > best_value):
            best_value, best_st = val, Strategy.sequence(sel)

    if budget.mode == EXHAUSTIVE:
        for cands, forced_here in _antichains(tree, pins):
            consider(cands, forced_here)
        used = 2 ** len(free)
    else:
        if budget.mode == UNIVERSAL:
            from ..universal import derandomized_colorings

            tt = budget.t if budget.t is not None else min(len(free), k + k * k)
            stream = derandomized_colorings(len(free), max(tt, 0), colors=2, seed=budget.seed) if free else iter([()])
        else:
            count = budget.trial_count(2.0 ** -(k + k * k))
            stream = (random_colors(trial_rng(budget.seed, i), len(free), 2) for i in range(count))
        used = 0
        colors = [Color.RED] * t.n
        for v, c in pins.items():
            colors[v] = c
        for raw in stream:
            used += 1
            for v, c in zip(free, raw):
                colors[v] = c
            cands = _from_colors(tree, colors)
            reached_forced = tuple(v for v in cands if v in pins)
            consider([v for v in cands if v not in pins], reached_forced)
    return SolveResult(None, best_st, best_value, used, budget.seed, budget.mode)
