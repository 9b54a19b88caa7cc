import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXHAUSTIVE_BUDGET, ids
from firefighter import (
    Graph,
    InputError,
    Scenario,
    brute_force_optimal,
    solve_tree_plus_b,
    solve_unicyclic_max_k,
    strategy_value,
)
from firefighter.generate import generate_instance

import naive


def test_b0_delegates_to_tree(p4):
    assert solve_tree_plus_b(p4, 0, 1, 0, EXHAUSTIVE_BUDGET).value == 3


def test_b1_agrees_with_unicyclic(uni6):
    a = solve_tree_plus_b(uni6, 0, 1, 1, EXHAUSTIVE_BUDGET)
    b = solve_unicyclic_max_k(uni6, 0, 1, EXHAUSTIVE_BUDGET)
    assert a.value == b.value == 5


def _uni6_chord(uni6):
    c1, c3 = ids(uni6, "c1", "c3")
    return Graph(uni6.n, uni6.edges() + [(c1, c3)], labels=uni6.labels)


def test_b2_instance_matches_both_oracles(uni6):
    g = _uni6_chord(uni6)
    res = solve_tree_plus_b(g, 0, 1, 2, EXHAUSTIVE_BUDGET)
    assert res.value == 5
    assert brute_force_optimal(Scenario.single(g, 0), 1, collect=False).value == 5
    assert naive.best_value(naive.adjacency(g), [1] * g.n, 0, 1) == 5
    assert strategy_value(Scenario.single(g, 0), res.strategy) == 5


def test_edge_count_checked(uni6):
    with pytest.raises(InputError):
        solve_tree_plus_b(uni6, 0, 1, 2)


def test_large_b_unsupported():
    g, s = generate_instance("tree-plus-b", 9, b=4, seed=0)
    with pytest.raises(InputError, match="unsupported b"):
        solve_tree_plus_b(g, s, 1, 4)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10_000), st.integers(0, 3), st.integers(1, 2))
def test_exhaustive_mode_matches_oracle(n, seed, b, k):
    b = min(b, n * (n - 1) // 2 - (n - 1))
    g, s = generate_instance("tree-plus-b", n, b=b, seed=seed)
    res = solve_tree_plus_b(g, s, k, b, EXHAUSTIVE_BUDGET)
    sc = Scenario.single(g, s)
    assert res.value == brute_force_optimal(sc, k, collect=False).value
    assert strategy_value(sc, res.strategy) == res.value
