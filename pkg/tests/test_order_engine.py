import random

import pytest

from ordercore.decomp import validate_korder
from ordercore.errors import DuplicateEdge, MissingEdge
from ordercore.generators import build_graph, er_edges, lollipop_edges
from ordercore.graph import DynamicGraph
from ordercore.oracle import naive_cores
from ordercore.order_engine import OrderEngine

from conftest import chain, cyc


def engine_for(g, **kw):
    return OrderEngine.from_graph(g.copy(), checked=True, **kw)


def test_closing_edge_promotes_only_chain_root(lollipop2000):
    eng = engine_for(lollipop2000)
    result = eng.insert(cyc(4), chain(0))
    assert result.vstar == [chain(0)]
    assert result.visited_size == 1
    assert eng.core_of(chain(0)) == 2
    # the chain root now has two neighbors after it in the order
    assert eng.state.rem[chain(0)] == 2


def test_insert_without_core_change_stays_local():
    # bridging the two K4 blocks leaves every core number at 3 and the
    # search gives up after a couple of vertices
    g = build_graph(lollipop_edges(20), 34)
    eng = engine_for(g)
    result = eng.insert(cyc(6), cyc(10))
    assert result.vstar == [] and result.visited_size <= 2
    assert eng.cores() == naive_cores(eng.g)


def test_insert_on_low_rem_root_exits_early():
    # two disjoint K4s; the last-peeled vertex of the first has rem 0, so
    # linking it to the other clique never enters the search at all
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i + 4, j + 4) for i, j in edges]
    g = build_graph(edges, 8)
    eng = engine_for(g)
    result = eng.insert(3, 7)
    assert result.vstar == [] and result.visited_size == 0
    assert eng.cores() == naive_cores(eng.g)


def test_closing_a_triangle_promotes_all_three():
    g = DynamicGraph()
    g.insert_edge_raw(0, 1)
    g.insert_edge_raw(1, 2)
    eng = engine_for(g)
    result = eng.insert(0, 2)
    assert sorted(result.vstar) == [0, 1, 2]
    assert eng.cores() == [2, 2, 2]


def test_insert_with_new_vertices():
    eng = OrderEngine.from_graph(DynamicGraph(), checked=True)
    result = eng.insert(0, 5)
    assert eng.g.n == 6
    assert eng.cores() == [1, 0, 0, 0, 0, 1]
    assert sorted(result.vstar) == [0, 5]


def test_remove_clique_edge_demotes_the_block(small_lollipop):
    eng = engine_for(small_lollipop)
    result = eng.remove(cyc(10), cyc(11))
    assert sorted(result.vstar) == [cyc(i) for i in (10, 11, 12, 13)]
    assert all(eng.core_of(cyc(i)) == 2 for i in range(10, 14))
    # the other clique is untouched
    assert all(eng.core_of(cyc(i)) == 3 for i in range(6, 10))


def test_remove_bridge_changes_nothing(small_lollipop):
    eng = engine_for(small_lollipop)
    result = eng.remove(cyc(2), cyc(7))
    assert result.vstar == []
    assert eng.cores() == naive_cores(eng.g)


def test_insert_then_remove_round_trips(lollipop2000):
    eng = OrderEngine.from_graph(lollipop2000.copy(), checked=True)
    before = eng.cores()
    eng.insert(cyc(4), chain(0))
    result = eng.remove(cyc(4), chain(0))
    assert result.vstar == [chain(0)]
    assert eng.cores() == before


def test_duplicate_and_missing_edges_raise():
    g = build_graph(er_edges(10, 12, seed=0), 10)
    eng = engine_for(g)
    u, v = sorted(g.edges())[0]
    with pytest.raises(DuplicateEdge):
        eng.insert(u, v)
    with pytest.raises(MissingEdge):
        eng.remove(u, u + 1 if not g.has_edge(u, u + 1) else u + 2)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_fuzz_against_oracle(seed):
    rng = random.Random(seed)
    g = build_graph(er_edges(45, 110, seed=seed), 45)
    eng = OrderEngine.from_graph(g.copy(), checked=True)
    gg = g.copy()
    present = sorted(gg.edges())
    for _ in range(220):
        if present and rng.random() < 0.5:
            u, v = present.pop(rng.randrange(len(present)))
            eng.remove(u, v)
            gg.remove_edge_raw(u, v)
        else:
            while True:
                u, v = rng.randrange(45), rng.randrange(45)
                if u != v and not gg.has_edge(u, v):
                    break
            eng.insert(u, v)
            gg.insert_edge_raw(u, v)
            present.append((min(u, v), max(u, v)))
        assert eng.cores() == naive_cores(gg)


def test_order_stays_valid_under_heuristic_starts():
    g = build_graph(er_edges(40, 120, seed=7), 40)
    for heuristic in ("small", "large", "random"):
        eng = OrderEngine.from_graph(
            g.copy(), heuristic=heuristic, seed=13, checked=True
        )
        eng.insert(0, 1) if not g.has_edge(0, 1) else eng.remove(0, 1)
        ok, detail = validate_korder(eng.g, eng.state, eng.order)
        assert ok, detail
