"""Immutable undirected graphs and the set/traversal primitives built on them.

Vertices are dense integers ``0..n-1``. Adjacency lists are sorted so every
traversal breaks ties by ascending id, which keeps seeded runs reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import InputError, NotUnicyclicError

Edge = tuple[int, int]
VertexRef = Union[int, str]

INF = math.inf


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph with optional weights and values.

    ``weights`` and ``edge_values`` map edges (either orientation) to
    integers; absent edges default to weight 1 and value 0. Vertex values
    default to 1. Construction rejects self-loops and duplicate edges; use
    :func:`merge_vertices` when simplification is intended.
    """

    __slots__ = (
        "n",
        "adj",
        "adjmask",
        "vertex_values",
        "labels",
        "_weights",
        "_edge_values",
        "_index",
        "_m",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        *,
        weights: Optional[Mapping[Edge, int]] = None,
        vertex_values: Optional[Sequence[int]] = None,
        edge_values: Optional[Mapping[Edge, int]] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self._check_vertex(u, n)
            self._check_vertex(v, n)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adjmask = tuple(sum(1 << w for w in s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

        self._weights: dict[Edge, int] = {}
        for (u, v), w in (weights or {}).items():
            key = self._existing_edge(u, v)
            if int(w) < 0:
                raise InputError(f"negative weight on edge ({u}, {v})")
            if int(w) != 1:
                self._weights[key] = int(w)
        self._edge_values: dict[Edge, int] = {}
        for (u, v), z in (edge_values or {}).items():
            key = self._existing_edge(u, v)
            if int(z) < 0:
                raise InputError(f"negative value on edge ({u}, {v})")
            if int(z) != 0:
                self._edge_values[key] = int(z)

        if vertex_values is None:
            self.vertex_values = (1,) * n
        else:
            if len(vertex_values) != n:
                raise InputError("vertex_values must have one entry per vertex")
            if any(int(z) < 0 for z in vertex_values):
                raise InputError("vertex values must be non-negative")
            self.vertex_values = tuple(int(z) for z in vertex_values)

        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            if len(labels) != n:
                raise InputError("labels must have one entry per vertex")
            self.labels = tuple(str(x) for x in labels)
        self._index = {}
        for i, name in enumerate(self.labels):
            if name in self._index:
                raise InputError(f"duplicate label {name!r}")
            self._index[name] = i

    @staticmethod
    def _check_vertex(v, n):
        if not isinstance(v, int) or not 0 <= v < n:
            raise InputError(f"unknown vertex id {v!r}")

    def _existing_edge(self, u, v) -> Edge:
        self._check_vertex(u, self.n)
        self._check_vertex(v, self.n)
        if not self.adjmask[u] >> v & 1:
            raise InputError(f"({u}, {v}) is not an edge")
        return edge_key(u, v)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.adjmask[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def weight(self, u: int, v: int) -> int:
        return self._weights.get(edge_key(u, v), 1)

    def edge_value(self, u: int, v: int) -> int:
        return self._edge_values.get(edge_key(u, v), 0)

    @property
    def weights(self) -> dict[Edge, int]:
        """Non-unit edge weights."""
        return dict(self._weights)

    @property
    def edge_values(self) -> dict[Edge, int]:
        """Non-zero edge values."""
        return dict(self._edge_values)

    @property
    def unit_weighted(self) -> bool:
        return not self._weights

    @property
    def unit_valued(self) -> bool:
        return not self._edge_values and all(z == 1 for z in self.vertex_values)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d < INF for d in bfs_distances(self, 0))

    def is_tree(self) -> bool:
        return self.n > 0 and self._m == self.n - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.n > 0 and self._m == self.n and self.is_connected()

    # -- labels ----------------------------------------------------------

    def vid(self, ref: VertexRef) -> int:
        """Resolve a label (or an integer / numeric string) to a vertex id."""
        if isinstance(ref, int) and not isinstance(ref, bool):
            self._check_vertex(ref, self.n)
            return ref
        ref = str(ref)
        if ref in self._index:
            return self._index[ref]
        try:
            v = int(ref)
        except ValueError:
            raise InputError(f"unknown vertex {ref!r}") from None
        self._check_vertex(v, self.n)
        return v

    def vids(self, refs: Iterable[VertexRef]) -> frozenset[int]:
        return frozenset(self.vid(r) for r in refs)

    def label(self, v: int) -> str:
        return self.labels[v]

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return self.replace(labels=labels)

    def replace(self, **changes) -> "Graph":
        kwargs = dict(
            weights=self._weights,
            vertex_values=self.vertex_values,
            edge_values=self._edge_values,
            labels=self.labels,
        )
        kwargs.update(changes)
        return Graph(self.n, self.edges(), **kwargs)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adj == other.adj
            and self._weights == other._weights
            and self._edge_values == other._edge_values
            and self.vertex_values == other.vertex_values
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- set operators -------------------------------------------------------


def _as_vertex_set(g: Graph, vs: Iterable[int]) -> frozenset[int]:
    out = frozenset(vs)
    for v in out:
        Graph._check_vertex(v, g.n)
    return out


def neighbors_set(g: Graph, vs: Iterable[int], closed: bool = False) -> frozenset[int]:
    """Open neighbourhood N(vs), or the closed one N[vs] when ``closed``."""
    vs = _as_vertex_set(g, vs)
    out = set()
    for v in vs:
        out.update(g.adj[v])
    if closed:
        out |= vs
    else:
        out -= vs
    return frozenset(out)


def induced_edges(g: Graph, vs: Iterable[int]) -> list[Edge]:
    """E(vs): edges with both endpoints in ``vs``."""
    vs = _as_vertex_set(g, vs)
    return [(u, v) for u, v in g.edges() if u in vs and v in vs]


def cross_edges(g: Graph, v1: Iterable[int], v2: Iterable[int]) -> list[Edge]:
    """E(v1, v2): edges with one endpoint in each set."""
    a, b = _as_vertex_set(g, v1), _as_vertex_set(g, v2)
    return [(u, v) for u, v in g.edges() if (u in a and v in b) or (u in b and v in a)]


def bfs_distances(
    g: Graph, s: int, allowed: Optional[Iterable[int]] = None
) -> list[float]:
    """Hop distances from ``s`` inside the subgraph induced on ``allowed``.

    Unreachable vertices (and those outside ``allowed``) get ``math.inf``.
    """
    Graph._check_vertex(s, g.n)
    allow = None if allowed is None else _as_vertex_set(g, allowed)
    if allow is not None and s not in allow:
        raise InputError("source must belong to the allowed set")
    dist: list[float] = [INF] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] == INF and (allow is None or v in allow):
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_parents(g: Graph, s: int, allowed: Optional[Iterable[int]] = None) -> list[int]:
    """BFS tree parents (smallest-id parent among equals); -1 when absent."""
    allow = None if allowed is None else frozenset(allowed)
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v] and (allow is None or v in allow):
                seen[v] = True
                parent[v] = u
                queue.append(v)
    return parent


def connected_components(g: Graph, vs: Optional[Iterable[int]] = None) -> list[list[int]]:
    pool = set(range(g.n)) if vs is None else set(vs)
    comps = []
    for start in sorted(pool):
        if start not in pool:
            continue
        pool.discard(start)
        comp, queue = [start], deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v in pool:
                    pool.discard(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


# -- merging -------------------------------------------------------------


def merge_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Contract ``vs`` into one vertex, simplifying the result.

    Returns the merged graph and ``vmap`` with ``vmap[old] = new``. The merged
    vertex takes the smallest new id slot of the group (ids stay in
    ascending order of their smallest member). Self-loops are dropped;
    parallel edges collapse keeping the minimum weight and summing values.
    Merged vertex value is the sum of its members' values.
    """
    group = _as_vertex_set(g, vs)
    if not group:
        raise InputError("cannot merge an empty vertex set")
    rep = min(group)
    return _contract(g, lambda v: rep if v in group else v, {rep: "+".join(g.labels[v] for v in sorted(group))})


def contract_classes(g: Graph, cls: Sequence[int], label_join: str = "+") -> tuple[Graph, list[int]]:
    """Contract every class of the vertex partition ``cls[v]`` (class representative ids)."""
    members: dict[int, list[int]] = {}
    for v in range(g.n):
        members.setdefault(cls[v], []).append(v)
    names = {r: label_join.join(g.labels[v] for v in ms) for r, ms in members.items() if len(ms) > 1}
    return _contract(g, lambda v: cls[v], names)


def _contract(g: Graph, rep_of, new_names: Mapping[int, str]) -> tuple[Graph, list[int]]:
    reps = list(dict.fromkeys(rep_of(v) for v in range(g.n)))
    new_id = {r: i for i, r in enumerate(reps)}
    vmap = [new_id[rep_of(v)] for v in range(g.n)]
    n2 = len(reps)
    values = [0] * n2
    for v in range(g.n):
        values[vmap[v]] += g.vertex_values[v]
    labels = [""] * n2
    for r in reps:
        labels[new_id[r]] = new_names.get(r, g.labels[r])
    weights: dict[Edge, int] = {}
    evalues: dict[Edge, int] = {}
    for u, v in g.edges():
        a, b = vmap[u], vmap[v]
        if a == b:
            continue
        key = edge_key(a, b)
        w = g.weight(u, v)
        weights[key] = min(weights.get(key, w), w)
        evalues[key] = evalues.get(key, 0) + g.edge_value(u, v)
    merged = Graph(
        n2,
        sorted(weights),
        weights=weights,
        vertex_values=values,
        edge_values=evalues,
        labels=labels,
    )
    return merged, vmap


# -- cycles ------------------------------------------------------------------


def two_core(g: Graph) -> frozenset[int]:
    """Vertices left after repeatedly stripping vertices of degree <= 1."""
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return frozenset(v for v in range(g.n) if alive[v])


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph, oriented from ``c0``.

    ``cycle[0]`` is ``c0``, the cycle vertex nearest the source, and
    ``cycle[1]`` is the smaller-id cycle neighbour of ``c0``. ``path`` runs
    from the source to ``c0`` inclusive.
    """

    cycle: tuple[int, ...]
    path: tuple[int, ...]

    @property
    def c0(self) -> int:
        return self.cycle[0]

    @property
    def l(self) -> int:
        return len(self.path) - 1

    @property
    def r(self) -> int:
        return len(self.cycle) - 1

    def index(self, v: int) -> int:
        return self.cycle.index(v)


def find_unique_cycle(g: Graph, s: int) -> Optional[CycleInfo]:
    """Locate the cycle of a connected graph with at most one cycle.

    Returns None for trees; raises NotUnicyclicError when m > n.
    """
    Graph._check_vertex(s, g.n)
    if not g.is_connected():
        raise InputError("graph must be connected")
    if g.m == g.n - 1:
        return None
    if g.m > g.n:
        raise NotUnicyclicError(f"not unicyclic: m={g.m} > n={g.n}")
    on_cycle = two_core(g)
    dist = bfs_distances(g, s)
    c0 = min(on_cycle, key=lambda v: (dist[v], v))
    parent = bfs_parents(g, s)
    path = [c0]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    prev, cur = c0, min(w for w in g.adj[c0] if w in on_cycle)
    cycle = [c0]
    while cur != c0:
        cycle.append(cur)
        nxt = next(w for w in g.adj[cur] if w in on_cycle and w != prev)
        prev, cur = cur, nxt
    return CycleInfo(cycle=tuple(cycle), path=tuple(path))
