"""Static core decomposition: core numbers, the initial k-order, and the
mcd/pcd auxiliaries.

The decomposition peels vertices of residual degree below the current level
k and appends them to bucket O_{k-1}, recording the residual degree at
removal time as rem.  Three selection heuristics are supported for choosing
among removable vertices: small-rem-first (default; pick the minimum
residual degree), large-rem-first, and seeded random-rem-first.
"""

import heapq
import random
from dataclasses import dataclass, field

from .graph import DynamicGraph
from .order_index import KOrder

HEURISTICS = ("small", "large", "random")


@dataclass
class CoreState:
    """Per-vertex core number plus the persistent rem and mcd auxiliaries."""

    core: list[int] = field(default_factory=list)
    rem: list[int] = field(default_factory=list)
    mcd: list[int] = field(default_factory=list)

    def ensure_vertex(self, v):
        while len(self.core) <= v:
            self.core.append(0)
            self.rem.append(0)
            self.mcd.append(0)

    @property
    def max_core(self):
        return max(self.core, default=0)


def _decompose_small(g: DynamicGraph, core, rem, order: KOrder):
    # Lazy min-heap on (residual degree, id): popping the global minimum is
    # exactly the small-rem-first rule, with smallest-id tie-break.
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    k = 1
    while heap:
        d, u = heapq.heappop(heap)
        if removed[u] or d != deg[u]:
            continue
        if d > k - 1:
            k = d + 1
        removed[u] = True
        core[u] = k - 1
        rem[u] = d
        order.append_tail(u, k - 1)
        for w in g.neighbors(u):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))


def _decompose_buckets(g: DynamicGraph, core, rem, order: KOrder, heuristic, rng):
    # Per-degree buckets; selection among all vertices with residual degree
    # below the current k is heuristic-driven.
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    max_deg = max(deg, default=0)
    buckets = [set() for _ in range(max_deg + 1)]
    for v in range(n):
        buckets[deg[v]].add(v)
    removed = [False] * n
    processed = 0
    k = 1
    while processed < n:
        eligible = [d for d in range(min(k, max_deg + 1)) if buckets[d]]
        if not eligible:
            k += 1
            continue
        if heuristic == "large":
            d = eligible[-1]
            u = min(buckets[d])
        else:  # random
            total = sum(len(buckets[d]) for d in eligible)
            pick = rng.randrange(total)
            for d in eligible:
                if pick < len(buckets[d]):
                    u = sorted(buckets[d])[pick]
                    break
                pick -= len(buckets[d])
        buckets[d].discard(u)
        removed[u] = True
        processed += 1
        core[u] = k - 1
        rem[u] = deg[u]
        order.append_tail(u, k - 1)
        for w in g.neighbors(u):
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)


def core_decompose(g: DynamicGraph, heuristic="small", seed=None, order_seed=None):
    """Peel g into (CoreState, KOrder).

    core(u) is the largest k with u in the k-core; rem(u) is u's residual
    degree when it was peeled; the order records the removal sequence into
    per-core buckets.  All heuristics yield the same core numbers and differ
    only in bucket-internal order.
    """
    if heuristic not in HEURISTICS:
        raise ValueError(f"unknown heuristic {heuristic!r}")
    n = g.n
    state = CoreState(core=[0] * n, rem=[0] * n, mcd=[0] * n)
    order = KOrder(seed=order_seed)
    if heuristic == "small":
        _decompose_small(g, state.core, state.rem, order)
    else:
        rng = random.Random(seed)
        _decompose_buckets(g, state.core, state.rem, order, heuristic, rng)
    state.mcd = compute_mcd(g, state.core)
    return state, order


def compute_mcd(g: DynamicGraph, core) -> list[int]:
    """mcd(u) = number of neighbors w with core(w) >= core(u)."""
    return [
        sum(1 for w in g.neighbors(u) if core[w] >= core[u]) for u in range(g.n)
    ]


def compute_pcd(g: DynamicGraph, core, mcd) -> list[int]:
    """pcd(u): like mcd but excluding equal-core neighbors whose own mcd
    equals their core (those can never enter a higher core)."""
    pcd = [0] * g.n
    for u in range(g.n):
        cu = core[u]
        count = 0
        for w in g.neighbors(u):
            cw = core[w]
            if cw > cu or (cw == cu and mcd[w] > cw):
                count += 1
        pcd[u] = count
    return pcd


def validate_korder(g: DynamicGraph, state: CoreState, order: KOrder):
    """Check the k-order validity criterion: every vertex v in bucket O_k has
    at most k neighbors after it, and that count equals the stored rem(v).

    Returns (ok, detail); detail names the first violation found.
    """
    n = g.n
    if len(order) != n:
        return False, f"order indexes {len(order)} vertices, graph has {n}"
    pos = {}
    for k in order.bucket_keys():
        for i, v in enumerate(order.iter_bucket(k)):
            if state.core[v] != k:
                return False, f"vertex {v} has core {state.core[v]} but sits in O_{k}"
            pos[v] = (k, i)
    for v in range(n):
        k, i = pos[v]
        after = 0
        for w in g.neighbors(v):
            kw, j = pos[w]
            if kw > k or (kw == k and j > i):
                after += 1
        if after > k:
            return False, f"vertex {v} in O_{k} has {after} later neighbors"
        if after != state.rem[v]:
            return False, f"vertex {v}: stored rem {state.rem[v]} != actual {after}"
    return True, ""
