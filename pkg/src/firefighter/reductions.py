"""Local-replacement reductions with vertex maps for translating strategies.

Every transform keeps original vertices addressable through ``vmap`` (old id
to new id) and returns the synthetic vertices as a ``forbidden`` set the
solvers must never protect.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import InputError
from .game import Scenario
from .graph import Graph, contract_classes, edge_key, merge_vertices

MAX_MAGNITUDE = 64


class Reduced(NamedTuple):
    graph: Graph
    forbidden: frozenset
    vmap: list


def _fresh_labels(taken: set, stem: str, count: int) -> list:
    out, i = [], 0
    while len(out) < count:
        name = f"{stem}{i}"
        i += 1
        if name not in taken:
            taken.add(name)
            out.append(name)
    return out


def _zero_weight_classes(g: Graph) -> list:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), w in g.weights.items():
        if w == 0:
            a, b = find(u), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(g.n)]


def subdivide_weighted(g: Graph) -> Reduced:
    """Unit-weight equivalent of a weighted graph.

    Zero-weight edges are contracted (merged values add up, parallel edges
    keep the smaller weight). An edge of weight ``w > 1`` becomes a path
    through ``w - 1`` new forbidden vertices of value 0; its edge value moves
    to the first segment of that path.
    """
    for (u, v), w in g.weights.items():
        if w > MAX_MAGNITUDE:
            raise InputError(f"weight {w} on edge ({u}, {v}) exceeds {MAX_MAGNITUDE}")
    h, vmap = contract_classes(g, _zero_weight_classes(g))
    edges, evalues = [], {}
    labels = list(h.labels)
    taken = set(labels)
    n = h.n
    for u, v in h.edges():
        w = h.weight(u, v)
        z = h.edge_value(u, v)
        if w <= 1:
            edges.append((u, v))
            if z:
                evalues[(u, v)] = z
            continue
        mids = list(range(n, n + w - 1))
        labels += _fresh_labels(taken, f"{h.labels[u]}~{h.labels[v]}.", w - 1)
        n += w - 1
        chain = [u] + mids + [v]
        edges += list(zip(chain, chain[1:]))
        if z:
            evalues[(chain[0], chain[1])] = z
    values = list(h.vertex_values) + [0] * (n - h.n)
    out = Graph(n, edges, vertex_values=values, edge_values=evalues, labels=labels)
    return Reduced(out, frozenset(range(h.n, n)), vmap)


def expand_values(g: Graph, keep_zero: Iterable[int] = ()) -> Reduced:
    """Unit-valued equivalent of a valued graph.

    A vertex of value ``z`` gets a pendant chain of ``z - 1`` forbidden unit
    vertices, saved exactly when it is. An edge ``(u, v)`` of value ``z``
    keeps its place and gains a parallel route ``u - y1 - ... - yz - v`` of
    forbidden unit vertices, saved exactly when both ends are; the route's
    segments reuse the edge's weight so it is never a shortcut. Vertices in
    ``keep_zero`` may carry value 0 and are left as they are (used for the
    subdivision vertices of :func:`subdivide_weighted`).
    """
    keep_zero = frozenset(keep_zero)
    for v, z in enumerate(g.vertex_values):
        if z == 0 and v not in keep_zero:
            raise InputError(f"irreducible: zero-value vertex {g.labels[v]}")
        if z > MAX_MAGNITUDE:
            raise InputError(f"value {z} on vertex {g.labels[v]} exceeds {MAX_MAGNITUDE}")
    for e, z in g.edge_values.items():
        if z > MAX_MAGNITUDE:
            raise InputError(f"value {z} on edge {e} exceeds {MAX_MAGNITUDE}")
    labels = list(g.labels)
    taken = set(labels)
    edges = list(g.edges())
    weights = dict(g.weights)
    values = [0 if v in keep_zero and z == 0 else 1 for v, z in enumerate(g.vertex_values)]
    n = g.n
    for v, z in enumerate(g.vertex_values):
        if z <= 1:
            continue
        chain = [v] + list(range(n, n + z - 1))
        labels += _fresh_labels(taken, f"{g.labels[v]}.", z - 1)
        values += [1] * (z - 1)
        n += z - 1
        edges += list(zip(chain, chain[1:]))
    for (u, v), z in sorted(g.edge_values.items()):
        w = g.weight(u, v)
        chain = [u] + list(range(n, n + z)) + [v]
        labels += _fresh_labels(taken, f"{g.labels[u]}~{g.labels[v]}.", z)
        values += [1] * z
        n += z
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
            if w != 1:
                weights[edge_key(a, b)] = w
    out = Graph(n, edges, weights=weights, vertex_values=values, labels=labels)
    return Reduced(out, frozenset(range(g.n, n)), list(range(g.n)))


def merge_sources(sc: Scenario) -> tuple[Scenario, list]:
    """Single-source scenario on the graph with all sources merged."""
    if len(sc.sources) == 1:
        return sc, list(range(sc.graph.n))
    g2, vmap = merge_vertices(sc.graph, sc.sources)
    src = vmap[min(sc.sources)]
    forbidden = frozenset(vmap[v] for v in sc.forbidden) - {src}
    return Scenario(g2, frozenset([src]), p=sc.p, h=sc.h, forbidden=forbidden), vmap


def reduce_multi_step(k: int, p: int, h: int) -> int:
    """Protection budget ``ceil(k*p/h)`` for k rounds of p protections against h-layer spread."""
    for name, x in (("k", k), ("p", p), ("h", h)):
        if not isinstance(x, int) or x < 1:
            raise InputError(f"{name} must be a positive integer")
    return -(-k * p // h)


def invert_map(vmap: list, n_new: int) -> list:
    """Map new ids back to one original id (None for synthetic vertices)."""
    back = [None] * n_new
    for old, new in enumerate(vmap):
        if back[new] is None:
            back[new] = old
    return back


__all__ = [
    "Reduced",
    "subdivide_weighted",
    "expand_values",
    "merge_sources",
    "reduce_multi_step",
    "invert_map",
]
