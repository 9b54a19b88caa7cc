"""Exhaustive search over strategies for small instances.

The search walks game states round by round. A round may protect any set of
at most ``p`` protectable vertices the fire can still reach, or nothing.
Vertices the fire can no longer reach are never worth protecting and are
left out, which keeps the branching small without losing any outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import BudgetExceededError, InputError, InvalidStrategyError
from .game import FireProcess, FireState, Scenario, Strategy, strategy_value
from .graph import Graph, iter_bits

MAX_N = 14
MAX_K = 4
MAX_N_UNBUDGETED = 12
MAX_STRATEGIES = 20_000


@dataclass
class OracleResult:
    value: int
    strategies: list  # every optimal strategy (trimmed, deduplicated, capped)
    irredundant: list  # the subset where dropping any vertex loses value
    complete: bool  # False when the strategy list hit the cap


def _guard(sc: Scenario, k_max: Optional[int], max_n: int, max_k: int):
    n = sc.graph.n
    if k_max is None:
        if n > min(max_n, MAX_N_UNBUDGETED):
            raise BudgetExceededError(f"unbudgeted search on n={n} exceeds guard n<={MAX_N_UNBUDGETED}")
        return
    if k_max < 0:
        raise InputError("k_max must be non-negative")
    if n > max_n or k_max > max_k:
        raise BudgetExceededError(
            f"oracle search too large: n={n}, m={sc.graph.m}, k_max={k_max} (guard n<={max_n}, k<={max_k})"
        )


class _Search:
    def __init__(self, sc: Scenario, k_max: Optional[int]):
        self.sc = sc
        self.proc = FireProcess(sc)
        self.k_max = k_max
        self.weighted = self.proc.weighted
        self.blocked = 0
        for v in sc.sources | sc.forbidden:
            self.blocked |= 1 << v
        self.memo: dict = {}

    def actions(self, st: FireState) -> list:
        relevant = [v for v in iter_bits(self.proc.reachable(st) & ~self.blocked)]
        acts = []
        for size in range(1, self.sc.p + 1):
            acts.extend(combinations(relevant, size))
        # idling is allowed while under a budget; unbudgeted play never idles
        if self.k_max is not None or not acts:
            acts.append(())
        return acts

    def key(self, st: FireState, left):
        return (st.key(self.weighted), left)

    def best(self, st: FireState, left) -> int:
        """Best saved value from ``st`` with ``left`` rounds of protection (None = unlimited)."""
        if not self.proc.active(st):
            return self.proc.value(st)
        key = self.key(st, left)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if left == 0:
            val = self.proc.value(self.proc.finish(st))
        else:
            nxt = None if left is None else left - 1
            val = max(self.best(self.proc.step(st, a), nxt) for a in self.actions(st))
        self.memo[key] = val
        return val

    def optimal_paths(self, st: FireState, left, target: int, prefix: list, out: list):
        if len(out) >= MAX_STRATEGIES:
            return
        if not self.proc.active(st) or left == 0:
            out.append(list(prefix))
            return
        nxt = None if left is None else left - 1
        for a in self.actions(st):
            s2 = self.proc.step(st, a)
            if self.best(s2, nxt) == target:
                prefix.append(a)
                self.optimal_paths(s2, nxt, target, prefix, out)
                prefix.pop()


def _value_or_none(sc: Scenario, st: Strategy) -> Optional[int]:
    try:
        return strategy_value(sc, st)
    except InvalidStrategyError:
        return None


def is_irredundant(sc: Scenario, st: Strategy, value: Optional[int] = None) -> bool:
    """True when dropping any single protected vertex strictly lowers the value."""
    if value is None:
        value = strategy_value(sc, st)
    for v in st.vertices:
        other = _value_or_none(sc, st.without(v))
        if other is not None and other >= value:
            return False
    return True


def brute_force_optimal(
    sc: Scenario,
    k_max: Optional[int],
    max_n: int = MAX_N,
    max_k: int = MAX_K,
    collect: bool = True,
) -> OracleResult:
    """Exact best saved value over strategies of at most ``k_max`` rounds.

    ``k_max=None`` lifts the round limit (firefighter protects every round
    while anything is protectable). With ``collect`` every optimal strategy is
    listed, up to a cap.
    """
    _guard(sc, k_max, max_n, max_k)
    search = _Search(sc, k_max)
    start = search.proc.start()
    value = search.best(start, k_max)
    strategies, irredundant = [], []
    complete = True
    if collect:
        raw: list = []
        search.optimal_paths(start, k_max, value, [], raw)
        complete = len(raw) < MAX_STRATEGIES
        seen = set()
        for rounds in raw:
            st = Strategy(tuple(rounds)).trimmed()
            if st.rounds in seen:
                continue
            seen.add(st.rounds)
            strategies.append(st)
            if is_irredundant(sc, st, value):
                irredundant.append(st)
    return OracleResult(value, strategies, irredundant, complete)


def brute_force_burnt_decision(
    g: Graph,
    s: int,
    k: int,
    mode: str = "at-most",
    max_n: int = MAX_N,
) -> tuple[bool, Optional[Strategy]]:
    """Decide whether some strategy ends with at most (or exactly) ``k`` burnt vertices.

    One vertex may be protected per round and rounds may be skipped, but a
    strategy protects at least one vertex whenever anything is protectable.
    Returns the decision and a witness strategy.
    """
    if mode not in ("at-most", "exact"):
        raise InputError(f"unknown mode {mode!r}")
    if not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")
    if g.n > max_n:
        raise BudgetExceededError(f"oracle search too large: n={g.n} (guard n<={max_n})")
    sc = Scenario.single(g, s)
    proc = FireProcess(sc)
    src_bit = 1 << s
    dead: set = set()

    def ok_end(st: FireState) -> bool:
        burnt = bin(st.burnt).count("1")
        if mode == "exact" and burnt != k:
            return False
        if burnt > k:
            return False
        return st.protected != 0 or g.n == 1

    def dfs(st: FireState, path: list) -> Optional[list]:
        if bin(st.burnt).count("1") > k:
            return None
        if not proc.active(st):
            return list(path) if ok_end(st) else None
        key = st.key(proc.weighted)
        if key in dead:
            return None
        relevant = list(iter_bits(proc.reachable(st) & ~src_bit))
        for a in [(v,) for v in relevant] + [()]:
            path.append(a)
            found = dfs(proc.step(st, a), path)
            path.pop()
            if found is not None:
                return found
        dead.add(key)
        return None

    found = dfs(proc.start(), [])
    if found is None:
        return False, None
    return True, Strategy(tuple(found)).trimmed()
