import math
import warnings

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import ids
from firefighter import Graph, InputError, InvalidStrategyError, Scenario, Strategy, outcome_value, parse_strategy, simulate
from firefighter.game import FireProcess, format_strategy, strategy_value
from firefighter.generate import generate_instance
from firefighter.graph import bfs_distances
from firefighter.reductions import subdivide_weighted


def labels(g, vs):
    return {g.labels[v] for v in vs}


def test_protecting_only_neighbour_saves_rest(p4):
    out = simulate(Scenario.single(p4, 0), [[1]])
    assert labels(p4, out.burnt) == {"s"}
    assert labels(p4, out.saved) == {"a", "b", "c"}


def test_star_single_protection(star4):
    out = simulate(Scenario.single(star4, 0), [[1]])
    assert labels(star4, out.burnt) == {"s", "l2", "l3", "l4"}
    assert labels(star4, out.saved) == {"l1"}


def test_spider_two_rounds(spider):
    out = simulate(Scenario.single(spider, 0), [ids(spider, "a1"), ids(spider, "b2")])
    assert labels(spider, out.burnt) == {"s", "b1"}
    assert labels(spider, out.saved) == {"a1", "a2", "b2"}


def test_weighted_path_burn_times():
    g = Graph(3, [(0, 1), (1, 2)], weights={(0, 1): 2})
    out = simulate(Scenario.single(g, 0), [])
    assert out.burn_time == (0, 2, 3)


def test_zero_weight_edges_ignite_instantly():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], weights={(0, 1): 0, (1, 2): 0})
    out = simulate(Scenario.single(g, 0), [])
    assert out.burn_time == (0, 0, 0, 1)


def test_multi_layer_spread():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    out = simulate(Scenario.single(g, 0, h=2), [])
    assert out.burn_time == (0, 1, 1, 2, 2)


def test_multi_source_and_multi_protection(star4):
    sc = Scenario(star4, frozenset([1, 2]), p=2)
    out = simulate(sc, [[0, 3]])
    assert out.burnt == {1, 2}


def test_outcome_value_unit(p4):
    out = simulate(Scenario.single(p4, 0), [[1]])
    assert outcome_value(p4, out) == 3


def test_outcome_value_heavy_vertex(p4):
    g = p4.replace(vertex_values=[1, 1, 1, 5])
    assert outcome_value(g, simulate(Scenario.single(g, 0), [[1]])) == 7


def test_outcome_value_edge_value(p4):
    g = p4.replace(edge_values={(2, 3): 2})
    assert outcome_value(g, simulate(Scenario.single(g, 0), [[1]])) == 5


def test_protecting_burnt_vertex_names_round(p4):
    with pytest.raises(InvalidStrategyError) as err:
        simulate(Scenario.single(p4, 0), [[], [1]])
    assert err.value.round_index == 2


def test_rejects_source_and_excess_protections(p4):
    sc = Scenario.single(p4, 0)
    with pytest.raises(InvalidStrategyError):
        simulate(sc, [[0]])
    with pytest.raises(InvalidStrategyError):
        simulate(sc, [[1, 2]])
    with pytest.raises(InvalidStrategyError):
        simulate(Scenario.single(p4, 0, forbidden={1}), [[1]])
    with pytest.raises(InputError):
        simulate(sc, [[11]])


def test_rounds_after_game_end_are_flagged(p4):
    with pytest.warns(UserWarning):
        out = simulate(Scenario.single(p4, 0), [[1], [2]])
    assert out.truncated and out.rounds_played == 1


def test_short_strategy_plays_on(p4):
    out = simulate(Scenario.single(p4, 0), [])
    assert out.burnt == {0, 1, 2, 3} and out.rounds_played == 3


def test_scenario_validation(p4):
    with pytest.raises(InputError):
        Scenario(p4, frozenset())
    with pytest.raises(InputError):
        Scenario.single(p4, 0, p=0)
    with pytest.raises(InputError):
        Scenario.single(p4.replace(weights={(0, 1): 2}), 0, h=2)


def test_strategy_text_round_trip(spider):
    st_ = parse_strategy("a1;b1,b2", spider)
    assert st_.rounds == ((1, 3), (4,))
    assert format_strategy(st_, spider) == "a1;b1,b2"
    assert parse_strategy("", spider) == Strategy()


def test_strategy_helpers():
    st_ = Strategy.sequence([3, 1, 2], p=2)
    assert st_.rounds == ((3, 1), (2,))
    assert st_.without(2).rounds == ((3, 1),)
    assert st_.map(lambda v: None if v == 1 else v + 10).rounds == ((13,), (12,))


# -- properties ------------------------------------------------------------


@st.composite
def played(draw, kind="connected"):
    n = draw(st.integers(3, 9))
    g, s = generate_instance(kind, n, seed=draw(st.integers(0, 5000)))
    order = draw(st.permutations([v for v in range(n) if v != s]))
    rounds = [[v] for v in order[: draw(st.integers(0, 3))]]
    return g, s, rounds


def _try(sc, rounds):
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return simulate(sc, rounds)
    except InvalidStrategyError:
        return None


@settings(max_examples=80, deadline=None)
@given(played())
def test_outcome_partitions_and_is_deterministic(case):
    g, s, rounds = case
    sc = Scenario.single(g, s)
    out = _try(sc, rounds)
    assume(out is not None)
    assert out == _try(sc, rounds)
    assert out.burnt | out.saved == set(range(g.n)) and not out.burnt & out.saved
    assert out.protected <= out.saved
    for v in range(g.n):
        assert not (out.burn_time[v] < math.inf and out.protect_time[v] < math.inf)


@settings(max_examples=80, deadline=None)
@given(played(), st.integers(0, 8), st.integers(0, 2))
def test_extra_protection_never_burns_more(case, extra, where):
    g, s, rounds = case
    sc = Scenario.single(g, s, p=2)
    base = _try(sc, rounds)
    assume(base is not None)
    v = extra % g.n
    more = [list(r) for r in rounds] + [[] for _ in range(3)]
    more[where].append(v)
    out = _try(sc, more)
    assume(out is not None)
    assert len(out.burnt) <= len(base.burnt)


@settings(max_examples=80, deadline=None)
@given(played(), st.integers(1, 3))
def test_burn_time_at_least_layered_distance(case, h):
    g, s, rounds = case
    out = _try(Scenario.single(g, s, h=h), rounds)
    assume(out is not None)
    d = bfs_distances(g, s)
    for v in out.burnt:
        assert out.burn_time[v] >= math.ceil(d[v] / h)


@settings(max_examples=80, deadline=None)
@given(played())
def test_unit_round_ignites_exactly_the_open_frontier(case):
    g, s, rounds = case
    sc = Scenario.single(g, s)
    assume(_try(sc, rounds) is not None)
    proc = FireProcess(sc)
    state = proc.start()
    i = 0
    while proc.active(state):
        todo = rounds[i] if i < len(rounds) else []
        prot = state.protected | sum(1 << v for v in todo)
        frontier = {w for v in range(g.n) if state.burnt >> v & 1 for w in g.adj[v]}
        expected = {w for w in frontier if not (state.burnt | prot) >> w & 1}
        nxt = proc.step(state, todo)
        assert {v for v in range(g.n) if (nxt.burnt & ~state.burnt) >> v & 1} == expected
        state = nxt
        i += 1


@settings(max_examples=60, deadline=None)
@given(played(), st.data())
def test_weighted_game_matches_subdivided_graph(case, data):
    g, s, rounds = case
    weights = {e: data.draw(st.integers(1, 3)) for e in g.edges()}
    gw = g.replace(weights=weights)
    direct = _try(Scenario.single(gw, s), rounds)
    assume(direct is not None)
    # subdivision vertices can outlast the original game; drop ignored rounds
    rounds = rounds[: direct.rounds_played]
    red = subdivide_weighted(gw)
    sub = _try(Scenario.single(red.graph, red.vmap[s], forbidden=red.forbidden), [[red.vmap[v] for v in r] for r in rounds])
    assert sub is not None
    for v in range(g.n):
        assert direct.burn_time[v] == sub.burn_time[red.vmap[v]]
    assert strategy_value(Scenario.single(gw, s), rounds) == strategy_value(
        Scenario.single(red.graph, red.vmap[s]), [[red.vmap[v] for v in r] for r in rounds]
    )
