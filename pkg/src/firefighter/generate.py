"""Seeded random instances of the graph families the solvers target."""

from __future__ import annotations

import random
from typing import Optional

from .errors import InputError
from .graph import Graph, edge_key, find_unique_cycle

KINDS = ("tree", "unicyclic", "bounded-degree", "tree-plus-b", "connected")


def _random_tree(rng: random.Random, n: int, cap: Optional[int] = None) -> list:
    deg = [0] * n
    edges = []
    for v in range(1, n):
        choices = [u for u in range(v) if cap is None or deg[u] < cap]
        u = rng.choice(choices)
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return edges


def _add_edges(
    rng: random.Random, n: int, edges: list, count: int, cap: Optional[int] = None, strict: bool = True
) -> list:
    """Add ``count`` random new edges, respecting degree ``cap`` if given.

    Non-strict mode adds as many as fit instead of failing.
    """
    present = {edge_key(u, v) for u, v in edges}
    deg = _degrees(n, edges)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    rng.shuffle(pool)
    out = list(edges)
    for u, v in pool:
        if count == 0:
            break
        if cap is not None and (deg[u] >= cap or deg[v] >= cap):
            continue
        out.append((u, v))
        deg[u] += 1
        deg[v] += 1
        count -= 1
    if count and strict:
        raise InputError("not enough room for the requested extra edges")
    return out


def generate_instance(
    kind: str,
    n: int,
    d: Optional[int] = None,
    b: Optional[int] = None,
    seed: int = 0,
) -> tuple[Graph, int]:
    """Random graph of the requested family plus a random source vertex.

    ``bounded-degree`` needs ``d`` (max degree); ``tree-plus-b`` needs ``b``
    (extra edges over a spanning tree). ``connected`` adds a random number of
    extra edges to a random tree. Vertex ids are randomly permuted.
    """
    if kind not in KINDS:
        raise InputError(f"unknown instance kind {kind!r} (known: {', '.join(KINDS)})")
    if not isinstance(n, int) or n < 1:
        raise InputError("n must be a positive integer")
    rng = random.Random(f"{kind}:{n}:{d}:{b}:{seed}")
    if kind == "tree":
        edges = _random_tree(rng, n)
    elif kind == "unicyclic":
        if n < 3:
            raise InputError("a unicyclic graph needs n >= 3")
        edges = _add_edges(rng, n, _random_tree(rng, n), 1)
    elif kind == "tree-plus-b":
        if b is None or b < 0:
            raise InputError("tree-plus-b needs b >= 0")
        if b > n * (n - 1) // 2 - (n - 1):
            raise InputError(f"n={n} cannot hold {b} extra edges")
        edges = _add_edges(rng, n, _random_tree(rng, n), b)
    elif kind == "bounded-degree":
        if d is None or d < 1:
            raise InputError("bounded-degree needs d >= 1")
        if d == 1 and n > 2:
            raise InputError("d=1 only admits n <= 2")
        edges = _random_tree(rng, n, cap=d)
        room = sum(d - x for x in _degrees(n, edges)) // 2
        edges = _add_edges(rng, n, edges, rng.randint(0, min(room, n)), cap=d, strict=False)
    else:
        edges = _random_tree(rng, n)
        extra = rng.randint(0, min(n, n * (n - 1) // 2 - (n - 1)))
        edges = _add_edges(rng, n, edges, extra)
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, [(perm[u], perm[v]) for u, v in edges])
    s = rng.randrange(n)
    _validate(kind, g, s, d, b)
    return g, s


def _degrees(n: int, edges: list) -> list:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _validate(kind: str, g: Graph, s: int, d, b):
    if not g.is_connected():
        raise AssertionError("generated graph is disconnected")
    if kind == "tree" and not g.is_tree():
        raise AssertionError("generated tree has a cycle")
    if kind == "unicyclic" and (g.m != g.n or find_unique_cycle(g, s) is None):
        raise AssertionError("generated graph is not unicyclic")
    if kind == "tree-plus-b" and g.m != g.n - 1 + b:
        raise AssertionError("generated graph has the wrong number of edges")
    if kind == "bounded-degree" and g.max_degree > d:
        raise AssertionError("generated graph violates the degree bound")
