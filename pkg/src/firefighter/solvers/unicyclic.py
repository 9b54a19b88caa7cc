"""Unicyclic graphs and trees with a few extra edges, reduced to trees.

Each transform returns a :class:`TreeCase`: a tree, its source, color pins
for the tree solver and ``origin`` mapping tree vertices back to ids of the
input graph (None for synthetic vertices). Every case is solved on its tree,
mapped back and re-simulated on the original graph; the best wins.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, combinations_with_replacement
from typing import NamedTuple, Optional, Sequence

from ..errors import InputError, InvalidStrategyError, NotUnicyclicError
from ..game import Scenario, strategy_value
from ..graph import CycleInfo, Graph, bfs_distances, contract_classes, edge_key, find_unique_cycle, two_core
from .coloring import Color, SolveResult, TrialBudget
from .tree import solve_tree_max_k

MAX_B = 3


class TreeCase(NamedTuple):
    graph: Graph
    source: int
    pins: dict
    origin: list


def _subgraph(g: Graph, keep: Sequence[int], drop: Sequence = ()) -> tuple[Graph, list, dict]:
    """Induced subgraph on ``keep`` (in that order) minus the ``drop`` edges."""
    new = {v: i for i, v in enumerate(keep)}
    dropped = {edge_key(u, v) for u, v in drop}
    edges, weights, evalues = [], {}, {}
    for u, v in g.edges():
        if u in new and v in new and (u, v) not in dropped:
            e = (new[u], new[v])
            edges.append(e)
            if g.weight(u, v) != 1:
                weights[e] = g.weight(u, v)
            if g.edge_value(u, v):
                evalues[e] = g.edge_value(u, v)
    sub = Graph(
        len(keep),
        edges,
        weights=weights,
        vertex_values=[g.vertex_values[v] for v in keep],
        edge_values=evalues,
        labels=[g.labels[v] for v in keep],
    )
    return sub, list(keep), new


def _with_pendants(g: Graph, hub: int, count: int) -> Graph:
    labels = list(g.labels)
    taken = set(labels)
    base = labels[hub]
    extra = []
    i = 0
    while len(extra) < count:
        name = f"{base}.{i}"
        i += 1
        if name not in taken:
            extra.append(name)
    n = g.n + count
    edges = g.edges() + [(hub, g.n + j) for j in range(count)]
    return Graph(
        n,
        edges,
        weights=g.weights,
        vertex_values=list(g.vertex_values) + [1] * count,
        edge_values=g.edge_values,
        labels=labels + extra,
    )


def _cycle_info(g: Graph, s: int, info: Optional[CycleInfo]) -> CycleInfo:
    if info is None:
        info = find_unique_cycle(g, s)
    if info is None:
        raise NotUnicyclicError("not unicyclic: the graph is a tree")
    return info


def _contract_to_hub(g: Graph, s: int, core: frozenset, hub: int) -> TreeCase:
    """Contract ``core`` into one vertex carrying 2n forbidden pendants."""
    cls = [hub if v in core else v for v in range(g.n)]
    merged, vmap = contract_classes(g, cls)
    merged = merged.replace(labels=[lab if i != vmap[hub] else g.labels[hub] + "'" for i, lab in enumerate(merged.labels)])
    tree = _with_pendants(merged, vmap[hub], 2 * g.n)
    back = {vmap[v]: v for v in range(g.n) if v not in core}
    back[vmap[hub]] = hub
    origin = [back.get(i) for i in range(tree.n)]
    pins = {merged.n + j: Color.RED for j in range(2 * g.n)}
    return TreeCase(tree, vmap[s], pins, origin)


def transform_case1(g: Graph, s: int, info: Optional[CycleInfo] = None) -> TreeCase:
    """Cycle saved: contract it into ``c0'`` and hang 2n forbidden pendants on it."""
    info = _cycle_info(g, s, info)
    return _contract_to_hub(g, s, frozenset(info.cycle), info.c0)


def transform_case2(g: Graph, s: int, info: Optional[CycleInfo] = None) -> TreeCase:
    """Cycle burnt: drop the edge the fire crosses last; path and cycle pinned red."""
    info = _cycle_info(g, s, info)
    half = info.r // 2
    a, b = info.cycle[half], info.cycle[(half + 1) % (info.r + 1)]
    tree, origin, new = _subgraph(g, range(g.n), [(a, b)])
    pins = {new[v]: Color.RED for v in set(info.path) | set(info.cycle)}
    return TreeCase(tree, new[s], pins, origin)


def _hanging(g: Graph, core: frozenset, roots) -> set:
    """Vertices of the trees hanging off ``roots`` outside ``core`` (roots included)."""
    out = set(roots)
    stack = list(roots)
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in core and v not in out:
                out.add(v)
                stack.append(v)
    return out


def transform_case3(g: Graph, s: int, u1: int, u2: int, info: Optional[CycleInfo] = None) -> TreeCase:
    """Cycle vertices ``u1``, ``u2`` protected, the arc through ``c0`` burnt.

    The opposite arc and everything hanging from it is removed. When the arc
    has no interior vertex (``u1 == u2`` or adjacent), one cycle edge is cut
    so the result is a tree: between adjacent u's the edge joining them, and
    for ``u1 == u2 == c_i`` the edge towards its farther cycle neighbour.
    """
    info = _cycle_info(g, s, info)
    cyc = info.cycle
    r = info.r
    for u in (u1, u2):
        if u not in cyc:
            raise InputError(f"vertex {g.labels[u]} is not on the cycle")
        if u == info.c0:
            raise InputError("u1 and u2 must differ from c0")
    i, j = sorted((info.index(u1), info.index(u2)))
    down = list(cyc[i + 1 : j])
    core = frozenset(cyc)
    removed = _hanging(g, core, down) if down else set()
    drop = []
    if i == j:
        # c_{i-1} is i-1 steps from c0 along the cycle, c_{i+1} is r-i steps
        far = cyc[(i + 1) % (r + 1)] if i - 1 <= r - i else cyc[i - 1]
        drop.append((cyc[i], far))
    elif j == i + 1:
        drop.append((cyc[i], cyc[j]))
    keep = [v for v in range(g.n) if v not in removed]
    tree, origin, new = _subgraph(g, keep, drop)
    up = set(cyc) - set(down) - {u1, u2}
    pins = {new[v]: Color.RED for v in set(info.path) | up}
    pins[new[u1]] = Color.GREEN
    pins[new[u2]] = Color.GREEN
    return TreeCase(tree, new[s], pins, origin)


def _run_case(g: Graph, s: int, k: int, case: TreeCase, budget: TrialBudget):
    res = solve_tree_max_k(case.graph, case.source, k, case.pins, budget)
    if res.strategy is None:
        return res.trials_used, None, None
    st = res.strategy.map(lambda v: case.origin[v])
    try:
        val = strategy_value(Scenario.single(g, s), st)
    except InvalidStrategyError:
        return res.trials_used, None, None
    return res.trials_used, val, st


def _best_of(g: Graph, s: int, k: int, cases, budget: TrialBudget) -> SolveResult:
    best_value, best_st, used = None, None, 0
    for salt, case in enumerate(cases):
        n_used, val, st = _run_case(g, s, k, case, budget.derive(salt))
        used += n_used
        if val is not None and (best_value is None or val > best_value):
            best_value, best_st = val, st
    return SolveResult(None, best_st, best_value, used, budget.seed, budget.mode)


def _check_k(k):
    if not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")


def solve_unicyclic_max_k(g: Graph, s: int, k: int, budget: TrialBudget = TrialBudget()) -> SolveResult:
    """Maximum saved count with at most ``k`` protections on a unicyclic graph."""
    _check_k(k)
    info = find_unique_cycle(g, s)
    if info is None or not g.is_unicyclic():
        raise NotUnicyclicError("not unicyclic")

    def cases():
        if info.l > 0:
            yield transform_case1(g, s, info)
        yield transform_case2(g, s, info)
        for u1, u2 in combinations_with_replacement(info.cycle[1:], 2):
            yield transform_case3(g, s, u1, u2, info)

    return _best_of(g, s, k, cases(), budget)


def _core_cases(g: Graph, s: int, k: int, b: int):
    """Tree cases for a connected graph with ``m = n - 1 + b``."""
    core = two_core(g)
    root_of = {}
    for c in core:
        for v in _hanging(g, core, [c]):
            root_of[v] = c
    c0 = root_of[s]
    dist_s = bfs_distances(g, s)
    path = [c0]
    while path[-1] != s:
        path.append(min(w for w in g.adj[path[-1]] if dist_s[w] == dist_s[path[-1]] - 1))
    side = _hanging(g, core, [c0])
    if s != c0:
        yield _contract_to_hub(g, s, core, c0)
    others = sorted(core - {c0})
    for size in range(0, min(2 * b, k) + 1):
        for U in combinations(others, size):
            Uset = frozenset(U)
            # burnt part of the core: reachable from c0 avoiding U
            dist = {c0: 0}
            parent = {c0: None}
            queue = deque([c0])
            while queue:
                x = queue.popleft()
                for y in g.adj[x]:
                    if y in core and y not in Uset and y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
            attach = {}
            for u in U:
                nbrs = [w for w in g.adj[u] if w in dist]
                if not nbrs:
                    break
                attach[u] = min(nbrs, key=lambda w: (dist[w], w))
            else:
                keep_core = set(dist) | Uset
                keep = side | _hanging(g, core, keep_core)
                tree_edges = {edge_key(x, p) for x, p in parent.items() if p is not None}
                tree_edges |= {edge_key(u, w) for u, w in attach.items()}
                drop = [
                    (x, y)
                    for x, y in g.edges()
                    if x in keep_core and y in keep_core and (x, y) not in tree_edges
                ]
                order = sorted(keep)
                tree, origin, new = _subgraph(g, order, drop)
                pins = {new[v]: Color.RED for v in set(path) | set(dist)}
                for u in U:
                    pins[new[u]] = Color.GREEN
                yield TreeCase(tree, new[s], pins, origin)


def solve_tree_plus_b(g: Graph, s: int, k: int, b: int, budget: TrialBudget = TrialBudget()) -> SolveResult:
    """Maximum k-vertex protection on a connected graph with ``n - 1 + b`` edges."""
    _check_k(k)
    if not isinstance(b, int) or b < 0:
        raise InputError("b must be a non-negative integer")
    if b > MAX_B:
        raise InputError(f"unsupported b={b} (at most {MAX_B})")
    g.vid(s)
    if not g.is_connected():
        raise InputError("graph must be connected")
    if g.m != g.n - 1 + b:
        raise InputError(f"expected {g.n - 1 + b} edges for b={b}, found {g.m}")
    if b == 0:
        return solve_tree_max_k(g, s, k, None, budget)
    return _best_of(g, s, k, _core_cases(g, s, k, b), budget)
