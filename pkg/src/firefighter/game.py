"""Exact simulator of the firefighter game.

Round ``i`` (1-based) first applies the round's protections, then lets the
fire spread. Under unit weights the fire advances ``h`` layers per round.
With non-unit weights a vertex ``v`` ignites at time ``i`` when some burnt
neighbour ``u`` satisfies ``burn_time[u] + w(u, v) <= i``; zero-weight edges
therefore propagate within the same instant. Sources burn at time 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import InputError, InvalidStrategyError
from .graph import INF, Graph, iter_bits


@dataclass(frozen=True)
class Scenario:
    """A game instance: graph, fire sources, protections per round ``p`` and
    spread depth ``h``. ``forbidden`` vertices may never be protected."""

    graph: Graph
    sources: frozenset
    p: int = 1
    h: int = 1
    forbidden: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "sources", frozenset(self.sources))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        if not self.sources:
            raise InputError("a scenario needs at least one fire source")
        for v in self.sources | self.forbidden:
            if not isinstance(v, int) or not 0 <= v < self.graph.n:
                raise InputError(f"unknown vertex id {v!r}")
        if self.p < 1 or self.h < 1:
            raise InputError("p and h must be >= 1")
        if self.h > 1 and not self.graph.unit_weighted:
            raise InputError("multi-layer spread (h > 1) requires unit edge weights")

    @classmethod
    def single(cls, graph: Graph, source: int, **kw) -> "Scenario":
        return cls(graph, frozenset([source]), **kw)

    @property
    def source(self) -> int:
        if len(self.sources) != 1:
            raise InputError("scenario has several sources")
        return next(iter(self.sources))


@dataclass(frozen=True)
class Strategy:
    """Ordered rounds of protected vertices; round ``i`` is ``rounds[i-1]``."""

    rounds: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rounds", tuple(tuple(r) for r in self.rounds))

    @classmethod
    def sequence(cls, vertices: Iterable[int], p: int = 1) -> "Strategy":
        """Chunk an ordered vertex sequence into rounds of ``p``."""
        vs = list(vertices)
        return cls(tuple(tuple(vs[i : i + p]) for i in range(0, len(vs), p)))

    @property
    def vertices(self) -> tuple:
        return tuple(v for r in self.rounds for v in r)

    @property
    def n_protected(self) -> int:
        return sum(len(r) for r in self.rounds)

    def trimmed(self) -> "Strategy":
        rounds = list(self.rounds)
        while rounds and not rounds[-1]:
            rounds.pop()
        return Strategy(tuple(rounds))

    def without(self, v: int) -> "Strategy":
        return Strategy(tuple(tuple(x for x in r if x != v) for r in self.rounds)).trimmed()

    def map(self, vmap) -> "Strategy":
        """Translate vertex ids; vertices mapped to None are dropped."""
        rounds = []
        for r in self.rounds:
            rounds.append(tuple(vmap(v) for v in r if vmap(v) is not None))
        return Strategy(tuple(rounds)).trimmed()

    def labels(self, g: Graph) -> list:
        return [[g.labels[v] for v in r] for r in self.rounds]


StrategyLike = Union[Strategy, Sequence[Sequence[int]]]


def as_strategy(st: StrategyLike) -> Strategy:
    return st if isinstance(st, Strategy) else Strategy(tuple(st))


@dataclass(frozen=True)
class GameOutcome:
    burn_time: tuple
    protect_time: tuple
    burnt: frozenset
    saved: frozenset
    rounds_played: int
    truncated: bool = False

    @property
    def protected(self) -> frozenset:
        return frozenset(v for v, t in enumerate(self.protect_time) if t < INF)

    @property
    def saved_count(self) -> int:
        return len(self.saved)


@dataclass(frozen=True)
class FireState:
    """Snapshot at the end of a round: ``time`` is the last completed round."""

    time: int
    burnt: int
    protected: int
    burn_time: tuple

    def key(self, weighted: bool):
        if weighted:
            return (self.time, self.burn_time, self.protected)
        return (self.burnt, self.protected)


class FireProcess:
    """Stepwise game dynamics for one scenario (shared by simulator and oracle)."""

    def __init__(self, sc: Scenario):
        self.sc = sc
        g = sc.graph
        self.g = g
        self.n = g.n
        self.adjmask = g.adjmask
        self.weighted = not g.unit_weighted
        if self.weighted:
            self.wadj = [[(u, g.weight(u, v)) for u in g.adj[v]] for v in range(g.n)]

    def start(self) -> FireState:
        bt = [INF] * self.n
        burnt = 0
        for s in self.sc.sources:
            bt[s] = 0
            burnt |= 1 << s
        if self.weighted:
            burnt = self._ignite_weighted(bt, burnt, 0, 0)
        return FireState(0, burnt, 0, tuple(bt))

    def neighbourhood(self, mask: int) -> int:
        out = 0
        adj = self.adjmask
        for v in iter_bits(mask):
            out |= adj[v]
        return out

    def threatened(self, st: FireState) -> int:
        """Unburnt, unprotected vertices adjacent to the fire."""
        return self.neighbourhood(st.burnt) & ~st.burnt & ~st.protected

    def active(self, st: FireState) -> bool:
        return self.threatened(st) != 0

    def reachable(self, st: FireState) -> int:
        """Unburnt vertices the fire can still reach through unprotected ones."""
        blocked = st.burnt | st.protected
        seen = 0
        frontier = self.neighbourhood(st.burnt) & ~blocked
        while frontier:
            seen |= frontier
            frontier = self.neighbourhood(frontier) & ~blocked & ~seen
        return seen

    def step(self, st: FireState, protect: Iterable[int] = ()) -> FireState:
        prot = st.protected
        for v in protect:
            prot |= 1 << v
        t = st.time + 1
        bt = list(st.burn_time)
        burnt = st.burnt
        if self.weighted:
            burnt = self._ignite_weighted(bt, burnt, prot, t)
        else:
            frontier = burnt
            for _ in range(self.sc.h):
                new = self.neighbourhood(frontier) & ~burnt & ~prot
                if not new:
                    break
                for v in iter_bits(new):
                    bt[v] = t
                burnt |= new
                frontier = new
        return FireState(t, burnt, prot, tuple(bt))

    def _ignite_weighted(self, bt, burnt, prot, t) -> int:
        changed = True
        while changed:
            changed = False
            cand = self.neighbourhood(burnt) & ~burnt & ~prot
            for v in iter_bits(cand):
                for u, w in self.wadj[v]:
                    if bt[u] + w <= t:
                        bt[v] = t
                        burnt |= 1 << v
                        changed = True
                        break
        return burnt

    def finish(self, st: FireState) -> FireState:
        while self.active(st):
            st = self.step(st)
        return st

    def value(self, st: FireState) -> int:
        """Saved value of a finished state."""
        return _saved_value(self.g, st.burnt)


def _saved_value(g: Graph, burnt_mask: int) -> int:
    total = 0
    for v in range(g.n):
        if not burnt_mask >> v & 1:
            total += g.vertex_values[v]
    for (u, v), z in g.edge_values.items():
        if not (burnt_mask >> u & 1) and not (burnt_mask >> v & 1):
            total += z
    return total


def simulate(sc: Scenario, st: StrategyLike) -> GameOutcome:
    """Play ``st`` on ``sc`` until the fire can no longer spread.

    Raises InvalidStrategyError when a round protects more than ``p``
    vertices, or protects a source, a forbidden vertex, an already burnt
    vertex, or a vertex protected earlier. Rounds scheduled after the game
    has ended are ignored and flagged via ``truncated``.
    """
    st = as_strategy(st)
    proc = FireProcess(sc)
    g = sc.graph
    state = proc.start()
    protect_time = [INF] * g.n
    rounds = st.rounds
    while proc.active(state):
        i = state.time + 1
        todo = rounds[i - 1] if i <= len(rounds) else ()
        if len(todo) > sc.p:
            raise InvalidStrategyError(f"{len(todo)} protections exceed p={sc.p}", i)
        for v in todo:
            if not isinstance(v, int) or not 0 <= v < g.n:
                raise InputError(f"unknown vertex id {v!r}")
            if v in sc.sources:
                raise InvalidStrategyError(f"vertex {g.labels[v]} is a fire source", i)
            if v in sc.forbidden:
                raise InvalidStrategyError(f"vertex {g.labels[v]} may not be protected", i)
            if state.burnt >> v & 1:
                raise InvalidStrategyError(f"vertex {g.labels[v]} is already burnt", i)
            if protect_time[v] < INF:
                raise InvalidStrategyError(f"vertex {g.labels[v]} is already protected", i)
            protect_time[v] = i
        state = proc.step(state, todo)
    played = state.time
    truncated = any(rounds[j] for j in range(played, len(rounds)))
    if truncated:
        warnings.warn(f"strategy has rounds after the game ended at round {played}", stacklevel=2)
    burnt = frozenset(iter_bits(state.burnt))
    return GameOutcome(
        burn_time=state.burn_time,
        protect_time=tuple(protect_time),
        burnt=burnt,
        saved=frozenset(range(g.n)) - burnt,
        rounds_played=played,
        truncated=truncated,
    )


def outcome_value(g: Graph, out: GameOutcome) -> int:
    """Saved vertex values plus values of edges with both endpoints saved."""
    mask = 0
    for v in out.burnt:
        mask |= 1 << v
    return _saved_value(g, mask)


def strategy_value(sc: Scenario, st: StrategyLike) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return outcome_value(sc.graph, simulate(sc, st))


# -- text form ------------------------------------------------------------


def parse_strategy(text: str, g: Graph) -> Strategy:
    """Parse ``a;x,b`` (rounds split by commas, vertices within by semicolons)."""
    text = text.strip()
    if not text:
        return Strategy()
    rounds = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        rounds.append(tuple(g.vid(tok.strip()) for tok in chunk.split(";") if tok.strip()))
    return Strategy(tuple(rounds))


def format_strategy(st: Strategy, g: Graph) -> str:
    return ",".join(";".join(g.labels[v] for v in r) for r in st.rounds)


def burn_time_or_none(t) -> Optional[int]:
    return None if t == math.inf else int(t)
