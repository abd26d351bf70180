"""Shared pieces of the two maintenance engines."""

from collections import deque
from dataclasses import dataclass, field


@dataclass
class UpdateResult:
    """Outcome of one edge update.

    vstar holds the vertices whose core numbers changed, in the order they
    were settled.  visited_size counts the vertices the engine visited and
    expanded to find them (|V+| for order-based inserts, |V'| for traversal
    inserts, |V*| for removals).
    """

    direction: str  # "insert" | "remove"
    k: int
    vstar: list = field(default_factory=list)
    visited: list = field(default_factory=list)
    visited_size: int = 0
    elapsed_micros: int = 0
    work: int = 0  # instrumentation counter, see engine docs

    @property
    def vstar_size(self):
        return len(self.vstar)


def peel_find_vstar(g, core, mcd, roots, K):
    """Find V* for an edge removal by cascading deletions.

    Starting from the removal endpoints with core K, repeatedly evict
    vertices whose max possible number of neighbors in the new K-core (cd,
    initialized from mcd) has dropped below K.  Cores of evicted vertices
    are decremented.  Returns V* in eviction order.
    """
    cd = {}
    queue = deque()
    queued = set()
    for r in roots:
        if core[r] == K and r not in cd:
            cd[r] = mcd[r]
            if cd[r] < K:
                queue.append(r)
                queued.add(r)
    vstar = []
    while queue:
        w = queue.popleft()
        core[w] = K - 1
        vstar.append(w)
        for z in g.neighbors(w):
            if core[z] != K:
                continue
            if z not in cd:
                cd[z] = mcd[z]
            cd[z] -= 1
            if cd[z] < K and z not in queued:
                queue.append(z)
                queued.add(z)
    return vstar
