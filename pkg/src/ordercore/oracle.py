"""Brute-force ground truth, deliberately independent of the engines.

naive_cores uses repeated global min-degree scans (O(n*m) worst case) so it
shares no algorithmic skeleton with the bucket-queue decomposition; a bug in
one cannot mask itself in the other.  The region computations (subcore,
purecore, ordercore) are plain flood fills used by the search-space bound
checks and the size statistics.
"""

from dataclasses import dataclass

from .graph import DynamicGraph


def naive_cores(g: DynamicGraph) -> list[int]:
    """Exact core numbers by repeated removal of a minimum-degree vertex."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    core = [0] * n
    level = 0
    for _ in range(n):
        u = -1
        best = n + 1
        for v in range(n):
            if alive[v] and deg[v] < best:
                best = deg[v]
                u = v
        level = max(level, best)
        core[u] = level
        alive[u] = False
        for w in g.neighbors(u):
            if alive[w]:
                deg[w] -= 1
    return core


def subcore(g: DynamicGraph, core, v) -> set:
    """Maximal connected set of vertices sharing v's core number, incl. v."""
    cv = core[v]
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen and core[w] == cv:
                seen.add(w)
                stack.append(w)
    return seen


def purecore(g: DynamicGraph, core, mcd, v) -> set:
    """{v} plus the connected equal-core region of vertices with mcd > core
    reachable from v; bounds the traversal insertion search space."""
    cv = core[v]
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen and core[w] == cv and mcd[w] > cv:
                seen.add(w)
                stack.append(w)
    return seen


def ordercore(g: DynamicGraph, core, order, v) -> set:
    """Forward closure of v along equal-core edges that increase in the
    k-order; bounds the order-based insertion search space."""
    cv = core[v]
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen and core[w] == cv and order.precedes(u, w):
                seen.add(w)
                stack.append(w)
    return seen


@dataclass
class RegionReport:
    """The three bound regions around one vertex."""

    sc: set
    pc: set
    oc: set


def region_report(g: DynamicGraph, core, mcd, order, v) -> RegionReport:
    return RegionReport(
        sc=subcore(g, core, v),
        pc=purecore(g, core, mcd, v),
        oc=ordercore(g, core, order, v),
    )
