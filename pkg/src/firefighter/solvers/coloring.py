"""Colorings, trial budgets and coloring streams for random separation."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Optional, Union

from ..errors import BudgetExceededError, InputError
from ..game import Strategy
from ..graph import Graph, iter_bits


class Color(IntEnum):
    RED = 0
    GREEN = 1
    YELLOW = 2


PinsLike = Union[Mapping[int, Color], Iterable[tuple[int, Color]], None]


def normalize_pins(pins: PinsLike, n: int) -> dict[int, Color]:
    """Build a pin map, rejecting a vertex pinned to two different colors."""
    out: dict[int, Color] = {}
    if pins is None:
        return out
    items = pins.items() if isinstance(pins, Mapping) else pins
    for v, c in items:
        if not isinstance(v, int) or not 0 <= v < n:
            raise InputError(f"unknown vertex id {v!r} in pins")
        c = Color(c)
        if out.get(v, c) != c:
            raise InputError(f"vertex {v} pinned to two colors")
        out[v] = c
    return out


@dataclass(frozen=True)
class Coloring:
    colors: tuple
    pinned: frozenset = field(default_factory=frozenset)

    @classmethod
    def build(cls, raw: Iterable[int], pins: Mapping[int, Color]) -> "Coloring":
        colors = [Color(c) for c in raw]
        for v, c in pins.items():
            colors[v] = c
        return cls(tuple(colors), frozenset(pins))

    def of(self, v: int) -> Color:
        return self.colors[v]


RANDOMIZED = "randomized"
EXHAUSTIVE = "exhaustive"
UNIVERSAL = "universal"
MODES = (RANDOMIZED, EXHAUSTIVE, UNIVERSAL)


@dataclass(frozen=True)
class TrialBudget:
    """How a random-separation solver draws its colorings.

    ``randomized`` sizes the run as ``ceil(ln(1/delta) / p_good)`` unless
    ``trials`` fixes the count; ``exhaustive`` enumerates every coloring;
    ``universal`` walks a universal-set family (``t`` overrides the
    subset size the solver would pick).
    """

    mode: str = RANDOMIZED
    delta: float = 0.01
    trials: Optional[int] = None
    seed: int = 0
    max_trials: int = 5_000_000
    t: Optional[int] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown budget mode {self.mode!r}")
        if not 0 < self.delta < 1:
            raise InputError("delta must lie in (0, 1)")

    def trial_count(self, p_good: float) -> int:
        if self.trials is not None:
            return self.trials
        count = math.ceil(math.log(1 / self.delta) / p_good)
        if count > self.max_trials:
            raise BudgetExceededError(
                f"randomized run needs {count} trials (> max_trials={self.max_trials}); "
                "pass an explicit trial count or use exhaustive mode"
            )
        return count

    def derive(self, salt: int) -> "TrialBudget":
        """Same settings with an independent seed for a sub-solve."""
        return TrialBudget(self.mode, self.delta, self.trials, self.seed * 1_000_003 + salt + 1, self.max_trials, self.t)


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random((seed << 40) ^ trial)


def random_colors(rng: random.Random, n: int, ncolors: int) -> list[int]:
    if ncolors == 2:
        bits = rng.getrandbits(n) if n else 0
        return [bits >> i & 1 for i in range(n)]
    return [rng.randrange(ncolors) for _ in range(n)]


@dataclass
class SolveResult:
    decision: Optional[bool]
    strategy: Optional[Strategy]
    value: Optional[int]
    trials_used: int
    seed: int
    mode: str

    @property
    def deterministic(self) -> bool:
        return self.mode != RANDOMIZED

    def to_json(self, g: Optional[Graph] = None) -> dict:
        rounds = None
        if self.strategy is not None:
            rounds = self.strategy.labels(g) if g is not None else [list(r) for r in self.strategy.rounds]
        return {
            "decision": None if self.decision is None else ("yes" if self.decision else "no"),
            "value": self.value,
            "strategy": rounds,
            "trials_used": self.trials_used,
            "seed": self.seed,
            "mode": self.mode,
            "deterministic": self.deterministic,
        }


# -- colorings over a graph ---------------------------------------------------


def red_component(g: Graph, s: int, colors, limit: Optional[int] = None) -> Optional[frozenset]:
    """Red vertices reachable from ``s`` through red vertices.

    Returns None as soon as the component exceeds ``limit`` vertices.
    """
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in seen and colors[v] == Color.RED:
                seen.add(v)
                if limit is not None and len(seen) > limit:
                    return None
                stack.append(v)
    return frozenset(seen)


def enumerate_red_components(
    g: Graph,
    s: int,
    palette: tuple,
    pins: Mapping[int, Color],
    max_red: Optional[int] = None,
    max_green: Optional[int] = None,
) -> Iterator[tuple]:
    """Walk every coloring of ``g`` grouped by what a red-BFS from ``s`` sees.

    Colors are assigned lazily, only to vertices the red component touches.
    Yields ``(red, green, multiplicity, complete)`` where ``red`` and
    ``green`` are bitmasks (green restricted to the component's boundary),
    ``multiplicity`` counts the full colorings in the group, and
    ``complete`` is False when the branch was cut off by ``max_red`` or
    ``max_green`` (the group can never pass the solver's size filter).
    Multiplicities over all yielded groups sum to ``len(palette) ** free``
    with ``free`` the number of unpinned vertices.
    """
    k = len(palette)
    pins = dict(pins)
    if pins.setdefault(s, Color.RED) != Color.RED:
        raise InputError("the source must be red")
    free_total = sum(1 for v in range(g.n) if v not in pins)
    adj = g.adjmask
    pin_mask = sum(1 << v for v in pins)

    def options(v):
        if v in pins:
            return (pins[v],) if pins[v] in palette else ()
        return palette

    def rec(red, green, decided, n_red, n_green, decided_free):
        nb = 0
        for u in iter_bits(red):
            nb |= adj[u]
        frontier = nb & ~decided
        if not frontier:
            yield red, green, k ** (free_total - decided_free), True
            return
        v = (frontier & -frontier).bit_length() - 1
        bit = 1 << v
        df = decided_free + (0 if pin_mask & bit else 1)
        for c in options(v):
            if c == Color.RED:
                if max_red is not None and n_red + 1 > max_red:
                    yield red | bit, green, k ** (free_total - df), False
                    continue
                yield from rec(red | bit, green, decided | bit, n_red + 1, n_green, df)
            elif c == Color.GREEN:
                if max_green is not None and n_green + 1 > max_green:
                    yield red, green | bit, k ** (free_total - df), False
                    continue
                yield from rec(red, green | bit, decided | bit, n_red, n_green + 1, df)
            else:
                yield from rec(red, green, decided | bit, n_red, n_green, df)

    start = 1 << s
    if max_red is not None and max_red < 1:
        yield start, 0, k ** free_total, False
        return
    yield from rec(start, 0, start, 1, 0, 0)


def masks_to_set(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))
