import random

from ordercore.decomp import compute_mcd, core_decompose
from ordercore.generators import build_graph, er_edges
from ordercore.graph import DynamicGraph
from ordercore.oracle import naive_cores, ordercore, purecore, region_report, subcore

from conftest import chain, cyc


def test_naive_cores_triangle_with_tail():
    g = DynamicGraph()
    g.insert_edge_raw(0, 1)
    g.insert_edge_raw(1, 2)
    g.insert_edge_raw(2, 0)
    g.insert_edge_raw(2, 3)
    assert naive_cores(g) == [2, 2, 2, 1]


def test_naive_cores_fixture(lollipop2000):
    core = naive_cores(lollipop2000)
    assert {core[cyc(i)] for i in range(1, 6)} == {2}
    assert {core[cyc(i)] for i in range(6, 14)} == {3}
    assert {core[chain(i)] for i in range(2001)} == {1}


def test_subcores_of_fixture(lollipop2000):
    core = naive_cores(lollipop2000)
    # one 2-subcore, one 1-subcore, two separate 3-subcores
    assert subcore(lollipop2000, core, cyc(1)) == {cyc(i) for i in range(1, 6)}
    assert subcore(lollipop2000, core, chain(7)) == {chain(i) for i in range(2001)}
    assert subcore(lollipop2000, core, cyc(6)) == {cyc(i) for i in range(6, 10)}
    assert subcore(lollipop2000, core, cyc(10)) == {cyc(i) for i in range(10, 14)}


def test_purecore_excludes_saturated_tips(lollipop2000):
    g = lollipop2000.copy()
    core = naive_cores(g)
    g.insert_edge_raw(cyc(4), chain(0))
    mcd = compute_mcd(g, core)
    pc = purecore(g, core, mcd, chain(0))
    # everything on the chain except the two arm tips, whose mcd is 1
    assert len(pc) == 1999
    assert chain(1999) not in pc and chain(2000) not in pc


def test_ordercore_of_last_chain_vertex(lollipop2000):
    # the generated order peels arm tips inward, so the chain root comes
    # last in its bucket and its forward closure is itself
    state, order = core_decompose(lollipop2000)
    oc = ordercore(lollipop2000, state.core, order, chain(0))
    assert oc == {chain(0)}


def test_regions_nest():
    rng = random.Random(2)
    g = build_graph(er_edges(50, 140, seed=2), 50)
    state, order = core_decompose(g)
    for _ in range(30):
        v = rng.randrange(50)
        rep = region_report(g, state.core, state.mcd, order, v)
        assert rep.pc <= rep.sc
        assert rep.oc <= rep.sc
        assert v in rep.pc and v in rep.oc
