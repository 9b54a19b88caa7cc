import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXHAUSTIVE_BUDGET
from firefighter import Color, InputError, Scenario, TrialBudget, brute_force_optimal, solve_tree_max_k, strategy_value
from firefighter.generate import generate_instance
from firefighter.solvers.tree import RootedTree

import naive

BUDGETS = [EXHAUSTIVE_BUDGET, TrialBudget(seed=5), TrialBudget(mode="universal")]


@pytest.mark.parametrize("budget", BUDGETS, ids=lambda b: b.mode)
def test_path(p4, budget):
    assert solve_tree_max_k(p4, 0, 1, budget=budget).value == 3


@pytest.mark.parametrize("budget", BUDGETS, ids=lambda b: b.mode)
def test_spider(spider, budget):
    res = solve_tree_max_k(spider, 0, 2, budget=budget)
    assert res.value == 3
    assert strategy_value(Scenario.single(spider, 0), res.strategy) == 3


def test_spider_with_red_pin_matches_constrained_oracle(spider):
    a1 = spider.vid("a1")
    res = solve_tree_max_k(spider, 0, 2, pins={a1: Color.RED}, budget=EXHAUSTIVE_BUDGET)
    oracle = brute_force_optimal(Scenario.single(spider, 0, forbidden={a1}), 2, collect=False)
    assert res.value == oracle.value == 3
    assert a1 not in res.strategy.vertices


def test_green_pin_is_protected(spider):
    b2 = spider.vid("b2")
    res = solve_tree_max_k(spider, 0, 2, pins={b2: Color.GREEN}, budget=EXHAUSTIVE_BUDGET)
    assert b2 in res.strategy.vertices
    assert res.value == 3


def test_unschedulable_green_pins(star4):
    res = solve_tree_max_k(star4, 0, 1, pins={1: Color.GREEN, 2: Color.GREEN}, budget=EXHAUSTIVE_BUDGET)
    assert res.strategy is None


def test_pin_conflicts_rejected(spider):
    with pytest.raises(InputError):
        solve_tree_max_k(spider, 0, 1, pins=[(1, Color.RED), (1, Color.GREEN)])
    with pytest.raises(InputError):
        solve_tree_max_k(spider, 0, 1, pins={0: Color.GREEN})


def test_rooting(spider):
    t = RootedTree(spider, 0)
    assert t.depth[spider.vid("b2")] == 2
    assert t.weight[spider.vid("b1")] == 2
    assert t.parent[spider.vid("a2")] == spider.vid("a1")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10_000), st.integers(1, 3))
def test_exhaustive_mode_matches_naive_reference(n, seed, k):
    g, s = generate_instance("tree", n, seed=seed)
    res = solve_tree_max_k(g, s, k, budget=EXHAUSTIVE_BUDGET)
    expected = naive.best_value(naive.adjacency(g), [1] * n, s, k) if n <= 8 else brute_force_optimal(Scenario.single(g, s), k, collect=False).value
    assert res.value == expected
    assert strategy_value(Scenario.single(g, s), res.strategy) == res.value
