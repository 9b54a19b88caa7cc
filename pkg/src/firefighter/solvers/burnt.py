"""At most / exactly k vertices burnt, on general graphs.

Two-color random separation: with the burnt region red and its boundary
(the protected set) green, a red BFS from the source recovers the region
and the verifier orders the boundary.
"""

from __future__ import annotations

from ..errors import InputError
from ..game import Strategy
from ..graph import Graph
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

PALETTE2 = (Color.RED, Color.GREEN)


def _check(g: Graph, s: int, k: int):
    if not isinstance(k, int) or k <= 0:
        raise InputError("k must be a positive integer")
    g.vid(s)
    if not g.is_connected():
        raise InputError("graph must be connected")


def _try_region(g: Graph, s: int, region: frozenset, k: int, exact: bool):
    """Strategy confining the fire to ``region`` or None."""
    if len(region) > k or (exact and len(region) != k):
        return None
    boundary = set()
    for v in region:
        boundary.update(g.adj[v])
    boundary -= region
    # a strategy must protect at least one vertex whenever one exists
    if not boundary and g.n > 1:
        return None
    seq = schedule(sorted_candidates(g, s, region, boundary))
    return None if seq is None else Strategy.sequence(seq)


def _solve(g: Graph, s: int, k: int, budget: TrialBudget, exact: bool) -> SolveResult:
    _check(g, s, k)
    if budget.mode == EXHAUSTIVE:
        used = 0
        for red, _green, mult, complete in enumerate_red_components(g, s, PALETTE2, {}, max_red=k):
            used += mult
            if not complete:
                continue
            st = _try_region(g, s, masks_to_set(red), k, exact)
            if st is not None:
                return SolveResult(True, st, g.n - bin(red).count("1"), used, budget.seed, budget.mode)
        return SolveResult(False, None, None, used, budget.seed, budget.mode)

    if budget.mode == UNIVERSAL:
        from ..universal import derandomized_colorings

        t = budget.t if budget.t is not None else min(g.n, 2 * k)
        stream = derandomized_colorings(g.n, t, colors=2, seed=budget.seed)
    else:
        count = budget.trial_count(4.0 ** -k)
        stream = (random_colors(trial_rng(budget.seed, i), g.n, 2) for i in range(count))

    used = 0
    for colors in stream:
        used += 1
        colors = list(colors)
        colors[s] = Color.RED
        region = red_component(g, s, colors, limit=k)
        if region is None:
            continue
        st = _try_region(g, s, region, k, exact)
        if st is not None:
            return SolveResult(True, st, g.n - len(region), used, budget.seed, budget.mode)
    return SolveResult(False, None, None, used, budget.seed, budget.mode)


def solve_at_most_k_burnt(g: Graph, s: int, k: int, budget: TrialBudget = TrialBudget()) -> SolveResult:
    """Decide whether some strategy burns at most ``k`` vertices.

    ``value`` is the number of saved vertices of the returned witness.
    """
    return _solve(g, s, k, budget, exact=False)


def solve_exactly_k_burnt(g: Graph, s: int, k: int, budget: TrialBudget = TrialBudget()) -> SolveResult:
    return _solve(g, s, k, budget, exact=True)
