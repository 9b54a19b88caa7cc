import warnings
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ids
from firefighter import Graph, InputError, Scenario, order_and_verify, order_and_verify_multi, simulate
from firefighter.generate import generate_instance
from firefighter.verify import candidate_distances


def names(g, strategy):
    return strategy.labels(g) if strategy is not None else None


def test_single_candidate_on_path(p4):
    assert names(p4, order_and_verify(p4, 0, ids(p4, "s"), ids(p4, "a"))) == [["a"]]


def test_spider_orders_by_deadline(spider):
    out = order_and_verify(spider, 0, ids(spider, "s", "b1"), ids(spider, "a1", "b2"))
    assert names(spider, out) == [["a1"], ["b2"]]


def test_spider_two_neighbours_of_source_fail(spider):
    assert order_and_verify(spider, 0, ids(spider, "s"), ids(spider, "a1", "b1")) is None


def test_two_protections_per_round_cover_both(spider):
    out = order_and_verify_multi(spider, 0, ids(spider, "s"), ids(spider, "a1", "b1"), p=2, h=1)
    assert names(spider, out) == [["a1", "b1"]]


def test_two_layer_spread_on_chain():
    g = Graph(3, [(0, 1), (1, 2)], labels=["s", "x", "y"])
    out = order_and_verify_multi(g, 0, [0, 1], [2], p=1, h=2)
    assert names(g, out) == [["y"]]


@pytest.mark.parametrize("fixture", ["p4", "star4", "spider", "uni6", "c4"])
def test_unit_parameters_match_plain_verifier(fixture, request):
    g = request.getfixturevalue(fixture)
    burnt = frozenset([0])
    cand = frozenset(g.adj[0])
    assert order_and_verify_multi(g, 0, burnt, cand, 1, 1) == order_and_verify(g, 0, burnt, cand)


def test_candidate_deadline_uses_nearest_burnt_neighbour():
    # c touches both a (depth 1) and b (depth 2)
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    d = candidate_distances(g, 0, frozenset([0, 1, 2]), [3])
    assert d == {3: 2}


def test_unreachable_candidate_always_passes(star4):
    d = candidate_distances(star4, 0, frozenset([0]), [1])
    assert d[1] == 1


def test_preconditions(p4, spider):
    with pytest.raises(InputError):
        order_and_verify(p4, 0, [1], [2])  # source not burnt
    with pytest.raises(InputError):
        order_and_verify(p4, 0, [0, 1], [1])  # overlap
    with pytest.raises(InputError):
        order_and_verify(p4, 0, [0], [2])  # not a neighbour
    with pytest.raises(InputError):
        order_and_verify(p4, 0, [0, 2], [1, 3])  # disconnected burnt set
    with pytest.raises(InputError):
        order_and_verify_multi(spider, 0, [0], [1], p=0, h=1)


# -- soundness and completeness against simulation --------------------------


def _region_from_seed(g, s, draw):
    region = {s}
    for _ in range(draw(st.integers(0, g.n - 1))):
        frontier = sorted({w for v in region for w in g.adj[v]} - region)
        if not frontier:
            break
        region.add(draw(st.sampled_from(frontier)))
    return frozenset(region)


def _boundary(g, region):
    return frozenset({w for v in region for w in g.adj[v]} - region)


def _confines(g, s, region, order, p, h):
    rounds = [order[i : i + p] for i in range(0, len(order), p)]
    try:
        out = simulate(Scenario.single(g, s, p=p, h=h), rounds)
    except Exception:
        return False
    return out.burnt <= region


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 8), st.integers(0, 5000), st.integers(1, 2), st.integers(1, 2), st.data())
def test_verifier_agrees_with_exhaustive_orderings(n, seed, p, h, data):
    g, s = generate_instance("connected", n, seed=seed)
    region = _region_from_seed(g, s, data.draw)
    cand = _boundary(g, region)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out = order_and_verify_multi(g, s, region, cand, p, h)
        if out is not None:
            assert sorted(out.vertices) == sorted(cand)
            assert all(len(r) <= p for r in out.rounds)
            assert _confines(g, s, region, [v for r in out.rounds for v in r], p, h)
        else:
            if len(cand) <= 6:
                assert not any(_confines(g, s, region, list(o), p, h) for o in permutations(sorted(cand)))
