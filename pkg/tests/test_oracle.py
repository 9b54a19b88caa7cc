import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firefighter import (
    BudgetExceededError,
    Graph,
    InputError,
    Scenario,
    Strategy,
    brute_force_burnt_decision,
    brute_force_optimal,
    simulate,
    strategy_value,
)
from firefighter.generate import generate_instance
from firefighter.oracle import is_irredundant

import naive


def test_path_optimum(p4):
    res = brute_force_optimal(Scenario.single(p4, 0), 1)
    assert res.value == 3
    assert [s.labels(p4) for s in res.strategies] == [[["a"]]]
    assert res.complete


def test_star_optimum(star4):
    res = brute_force_optimal(Scenario.single(star4, 0), 1)
    assert res.value == 1 and len(res.strategies) == 4


def test_unicyclic_optimum(uni6):
    res = brute_force_optimal(Scenario.single(uni6, 0), 1)
    assert res.value == 5
    assert [s.labels(uni6) for s in res.strategies] == [[["c0"]]]


def test_spider_burnt_decisions(spider):
    yes, witness = brute_force_burnt_decision(spider, 0, 2)
    assert yes
    assert len(simulate(Scenario.single(spider, 0), witness).burnt) <= 2
    assert brute_force_burnt_decision(spider, 0, 1) == (False, None)


def test_path_cannot_burn_everything(p4):
    assert brute_force_burnt_decision(p4, 0, 4, mode="exact") == (False, None)
    yes, witness = brute_force_burnt_decision(p4, 0, 3, mode="exact")
    assert yes and len(simulate(Scenario.single(p4, 0), witness).burnt) == 3


def test_guards(p4):
    big = Graph(20, [(i, i + 1) for i in range(19)])
    with pytest.raises(BudgetExceededError, match="n=20"):
        brute_force_optimal(Scenario.single(big, 0), 2)
    with pytest.raises(BudgetExceededError):
        brute_force_optimal(Scenario.single(p4, 0), 5)
    with pytest.raises(BudgetExceededError):
        brute_force_burnt_decision(big, 0, 2)
    with pytest.raises(InputError):
        brute_force_burnt_decision(p4, 0, 1, mode="both")


def test_irredundancy(star4):
    sc = Scenario.single(star4, 0)
    assert is_irredundant(sc, Strategy(((1,),)))
    # protecting a vertex that would be saved anyway adds nothing
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert not is_irredundant(Scenario.single(p4, 0), Strategy(((1,), (3,))))


def test_unbudgeted_search(spider):
    res = brute_force_optimal(Scenario.single(spider, 0), None, collect=False)
    assert res.value == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10_000), st.integers(1, 3), st.data())
def test_matches_naive_reference(n, seed, k, data):
    g, s = generate_instance("connected", n, seed=seed)
    values = [data.draw(st.integers(1, 3)) for _ in range(n)]
    gv = g.replace(vertex_values=values)
    assert brute_force_optimal(Scenario.single(gv, s), k, collect=False).value == naive.best_value(
        naive.adjacency(g), values, s, k
    )


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10_000), st.integers(1, 2))
def test_witnesses_resimulate(n, seed, k):
    g, s = generate_instance("connected", n, seed=seed)
    sc = Scenario.single(g, s)
    res = brute_force_optimal(sc, k)
    assert res.strategies
    for strat in res.strategies:
        assert strategy_value(sc, strat) == res.value
        assert len(strat.rounds) <= k
    assert set(map(id, res.irredundant)) <= set(map(id, res.strategies))
    for m in range(1, n + 1):
        yes, witness = brute_force_burnt_decision(g, s, m)
        if yes:
            assert len(simulate(sc, witness).burnt) <= m
