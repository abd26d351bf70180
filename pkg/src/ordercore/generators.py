"""Synthetic graph families used by the benchmarks and tests.

All generators return plain edge lists over dense 0-based vertex ids, so a
graph can be built directly or serialized to an edge-list file.  Output is
deterministic for a fixed seed.
"""

import random

from .errors import ParseError
from .graph import DynamicGraph


def lollipop_edges(n: int) -> list:
    """Chain-plus-cliques fixture with three distinct core levels.

    Vertices 0..4 form a 5-cycle (the 2-core), 5..8 and 9..12 are two K4
    blocks (the 3-core), and 13..13+n is a core-1 double-armed chain rooted
    at vertex 13: the root hangs off the cycle, and chain vertex i links to
    i+2 so the two arms interleave.  Total: n+14 vertices, n+19 edges.
    """
    if n < 2:
        raise ValueError("chain length must be at least 2")
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for base in (5, 9):
        edges.extend(
            (base + i, base + j) for i in range(4) for j in range(i + 1, 4)
        )
    edges.append((1, 6))  # cycle-to-clique bridge
    u0 = 13
    edges.append((u0, 4))  # chain root hangs off the cycle
    edges.append((u0, u0 + 1))
    edges.append((u0, u0 + 2))
    edges.extend((u0 + i, u0 + i + 2) for i in range(1, n - 1))
    return edges


def er_edges(n: int, m: int, seed=None) -> list:
    """m distinct uniform random edges on n vertices (simple, no loops)."""
    limit = n * (n - 1) // 2
    if m > limit:
        raise ValueError(f"{m} edges do not fit on {n} vertices")
    rng = random.Random(seed)
    chosen = set()
    edges = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in chosen:
            continue
        chosen.add(key)
        edges.append(key)
    return edges


def cliquechain_edges(c: int, k: int) -> list:
    """c cliques of size k in a row, consecutive cliques joined by one
    bridge edge."""
    if c < 1 or k < 2:
        raise ValueError("need at least one clique of size 2")
    edges = []
    for b in range(c):
        base = b * k
        edges.extend(
            (base + i, base + j) for i in range(k) for j in range(i + 1, k)
        )
        if b + 1 < c:
            edges.append((base + k - 1, base + k))
    return edges


def vertex_count(kind: str, params: tuple) -> int:
    if kind == "lollipop":
        return params[0] + 14
    if kind == "er":
        return params[0]
    return params[0] * params[1]


def parse_spec(spec: str):
    """Parse a generator spec like "lollipop:2000", "er:200,800" or
    "cliquechain:10,4" into (kind, params)."""
    try:
        kind, _, rest = spec.partition(":")
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise ParseError(0, f"bad generator spec {spec!r}") from None
    arity = {"lollipop": 1, "er": 2, "cliquechain": 2}
    if kind not in arity:
        raise ParseError(0, f"unknown generator kind {kind!r}")
    if len(params) != arity[kind]:
        raise ParseError(
            0, f"{kind} takes {arity[kind]} parameter(s), got {len(params)}"
        )
    return kind, params


def generate(spec: str, seed=None) -> tuple:
    """Generator spec -> (edges, vertex_count)."""
    kind, params = parse_spec(spec)
    if kind == "lollipop":
        edges = lollipop_edges(params[0])
    elif kind == "er":
        edges = er_edges(params[0], params[1], seed=seed)
    else:
        edges = cliquechain_edges(params[0], params[1])
    return edges, vertex_count(kind, params)


def build_graph(edges, n: int = 0) -> DynamicGraph:
    g = DynamicGraph()
    if n:
        g.ensure_vertex(n - 1)
    for u, v in edges:
        g.insert_edge_raw(u, v)
    return g


def format_edge_list(edges, n: int, comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"# vertices: {n}, edges: {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
