import pytest

from ordercore.generators import build_graph, lollipop_edges

# id helpers for the chain-plus-cliques fixture: cycle vertices are 0..4,
# the two cliques 5..8 and 9..12, the chain root is 13
def cyc(i):
    return i - 1


def chain(i):
    return 13 + i


@pytest.fixture(scope="session")
def lollipop2000():
    """The 2014-vertex desk fixture: 5-cycle, two K4s, 2001-vertex chain."""
    return build_graph(lollipop_edges(2000), 2014)


@pytest.fixture()
def small_lollipop():
    return build_graph(lollipop_edges(20), 34)
