"""Ordering a candidate protection set around a fixed burnt region.

Given the burnt region ``burnt`` (connected, containing the source) and a
candidate set ``cand`` of its neighbours, the fire reaches a candidate ``v``
after ``d[v] = 1 + min dist(s, u)`` steps, the minimum taken over burnt
neighbours ``u`` and distances measured inside the burnt region. Sorting by
``d`` is an earliest-deadline-first schedule, so checking the sorted order
decides whether any ordering works.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional

from .errors import InputError
from .game import Strategy
from .graph import INF, Graph


def candidate_distances(g: Graph, s: int, burnt: frozenset, cand: Iterable[int]) -> dict:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v in burnt and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    out = {}
    for v in cand:
        best = INF
        for u in g.adj[v]:
            if u in dist and dist[u] + 1 < best:
                best = dist[u] + 1
        out[v] = best
    return out


def _check_preconditions(g: Graph, s: int, burnt, cand) -> tuple[frozenset, frozenset]:
    burnt = g.vids(burnt)
    cand = g.vids(cand)
    if s not in burnt:
        raise InputError("the source must be in the burnt set")
    if burnt & cand:
        raise InputError("burnt and candidate sets overlap")
    boundary = set()
    for v in burnt:
        boundary.update(g.adj[v])
    bad = cand - boundary
    if bad:
        raise InputError(f"candidates not adjacent to the burnt set: {sorted(bad)}")
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v in burnt and v not in seen:
                seen.add(v)
                queue.append(v)
    if len(seen) != len(burnt):
        raise InputError("burnt set is not connected")
    return burnt, cand


def sorted_candidates(g: Graph, s: int, burnt: frozenset, cand) -> list[tuple]:
    d = candidate_distances(g, s, burnt, cand)
    return sorted(((d[v], v) for v in cand), key=lambda x: (x[0], x[1]))


def schedule(order: list[tuple], p: int = 1, h: int = 1) -> Optional[list[int]]:
    """Return the vertex order if every deadline is met, else None.

    The ``i``-th vertex (1-based) is protected in round ``ceil(i/p)`` and
    the fire reaches it in round ``ceil(d/h)``.
    """
    for i, (d, v) in enumerate(order, start=1):
        if d == INF:
            continue
        if math.ceil(d / h) < math.ceil(i / p):
            return None
    return [v for _, v in order]


def order_and_verify(g: Graph, s: int, burnt, cand) -> Optional[Strategy]:
    """Order ``cand`` so the fire stays inside ``burnt``, or return None.

    Candidates the fire can never reach sort last and always pass.
    """
    return order_and_verify_multi(g, s, burnt, cand, 1, 1)


def order_and_verify_multi(g: Graph, s: int, burnt, cand, p: int, h: int) -> Optional[Strategy]:
    """Variant for ``p`` protections and ``h`` spread layers per round."""
    if p < 1 or h < 1:
        raise InputError("p and h must be >= 1")
    burnt, cand = _check_preconditions(g, s, burnt, cand)
    seq = schedule(sorted_candidates(g, s, burnt, cand), p, h)
    if seq is None:
        return None
    return Strategy.sequence(seq, p)
