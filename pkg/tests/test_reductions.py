import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ids
from firefighter import (
    Graph,
    InputError,
    Scenario,
    brute_force_optimal,
    expand_values,
    merge_sources,
    reduce_multi_step,
    subdivide_weighted,
)
from firefighter.generate import generate_instance
from firefighter.reductions import invert_map


def test_heavy_edge_becomes_path():
    g = Graph(2, [(0, 1)], weights={(0, 1): 3}, labels=["u", "v"])
    red = subdivide_weighted(g)
    assert red.graph.n == 4 and red.forbidden == frozenset({2, 3})
    assert red.graph.edges() == [(0, 2), (1, 3), (2, 3)]
    assert red.vmap == [0, 1]


def test_unit_weights_unchanged(spider):
    red = subdivide_weighted(spider)
    assert red.graph.edges() == spider.edges() and not red.forbidden


def test_zero_weight_edge_in_triangle_merges():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)], weights={(0, 1): 0})
    red = subdivide_weighted(g)
    assert red.graph.n == 2 and red.graph.edges() == [(0, 1)]
    assert red.vmap[0] == red.vmap[1]


def test_negative_weight_rejected():
    with pytest.raises(InputError):
        Graph(2, [(0, 1)], weights={(0, 1): -2})


def test_vertex_value_becomes_chain():
    g = Graph(1, [], vertex_values=[3])
    red = expand_values(g)
    assert red.graph.n == 3 and red.graph.edges() == [(0, 1), (1, 2)]
    assert red.forbidden == frozenset({1, 2}) and red.graph.vertex_values == (1, 1, 1)


def test_edge_value_adds_unit_route():
    g = Graph(2, [(0, 1)], edge_values={(0, 1): 2})
    red = expand_values(g)
    assert red.graph.n == 4
    assert set(red.graph.edges()) == {(0, 1), (0, 2), (2, 3), (1, 3)}
    assert red.forbidden == frozenset({2, 3})


def test_unit_values_unchanged(uni6):
    red = expand_values(uni6)
    assert red.graph.edges() == uni6.edges() and red.graph.n == uni6.n


def test_zero_value_vertex_irreducible():
    with pytest.raises(InputError, match="irreducible"):
        expand_values(Graph(2, [(0, 1)], vertex_values=[1, 0]))


def test_magnitude_cap():
    with pytest.raises(InputError):
        expand_values(Graph(1, [], vertex_values=[65]))


def test_two_tree_sources_merge_to_unicyclic():
    t = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)])
    sc, vmap = merge_sources(Scenario(t, frozenset([3, 5])))
    assert len(sc.sources) == 1 and sc.graph.is_unicyclic()
    assert sc.graph.m == t.n - 2 + 1


def test_single_source_identity(p4):
    sc = Scenario.single(p4, 0)
    out, vmap = merge_sources(sc)
    assert out is sc and vmap == [0, 1, 2, 3]


def test_star_leaf_sources_merge(star4):
    sc = Scenario(star4, frozenset(ids(star4, "l1", "l2")))
    merged, vmap = merge_sources(sc)
    src = next(iter(merged.sources))
    assert merged.graph.adj[src] == (vmap[0],)
    for k in (1, 2, 3):
        assert brute_force_optimal(sc, k, collect=False).value == brute_force_optimal(merged, k, collect=False).value


@pytest.mark.parametrize("k,p,h,out", [(3, 2, 1, 6), (3, 1, 2, 2), (5, 1, 1, 5)])
def test_multi_step_budget(k, p, h, out):
    assert reduce_multi_step(k, p, h) == out


def test_multi_step_rejects_zero():
    with pytest.raises(InputError):
        reduce_multi_step(1, 0, 1)


def test_invert_map():
    assert invert_map([0, 0, 1], 3) == [0, 2, None]


# -- oracle equivalences ----------------------------------------------------


def _counted(sc, red_graph, keep):
    """Oracle on a reduced graph counting only vertices in ``keep``."""
    values = [1 if v in keep else 0 for v in range(red_graph.n)]
    return Scenario(red_graph.replace(vertex_values=values), sc.sources, forbidden=sc.forbidden)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10_000), st.data(), st.integers(1, 2))
def test_weighted_equivalence(n, seed, data, k):
    g, s = generate_instance("connected", n, seed=seed)
    w = {e: data.draw(st.integers(1, 3)) for e in g.edges()}
    gw = g.replace(weights=w)
    red = subdivide_weighted(gw)
    direct = brute_force_optimal(Scenario.single(gw, s), k, collect=False).value
    sc = Scenario.single(red.graph, red.vmap[s], forbidden=red.forbidden)
    reduced = brute_force_optimal(_counted(sc, red.graph, set(red.vmap)), k, max_n=40, collect=False).value
    assert direct == reduced


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10_000), st.data(), st.integers(1, 2))
def test_valued_equivalence(n, seed, data, k):
    g, s = generate_instance("connected", n, seed=seed)
    values = [data.draw(st.integers(1, 3)) for _ in range(n)]
    evalues = {e: data.draw(st.integers(0, 2)) for e in g.edges()}
    gv = g.replace(vertex_values=values, edge_values=evalues)
    red = expand_values(gv)
    direct = brute_force_optimal(Scenario.single(gv, s), k, collect=False).value
    reduced = brute_force_optimal(Scenario.single(red.graph, s, forbidden=red.forbidden), k, max_n=40, collect=False).value
    assert direct == reduced


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 8), st.integers(0, 10_000), st.data(), st.integers(1, 2))
def test_multi_source_equivalence_and_degree(n, seed, data, k):
    g, _ = generate_instance("bounded-degree", n, d=3, seed=seed)
    srcs = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=3))
    sc = Scenario(g, frozenset(srcs))
    merged, vmap = merge_sources(sc)
    assert brute_force_optimal(sc, k, collect=False).value == brute_force_optimal(merged, k, collect=False).value
    src = next(iter(merged.sources))
    for v in range(merged.graph.n):
        limit = len(srcs) * 3 if v == src else 3
        assert merged.graph.degree(v) <= limit
