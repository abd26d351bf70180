"""The traversal baseline: expand-shrink insertion over pcd, mcd peeling
removal, and the full mcd/pcd maintenance both require.

Kept faithful rather than fast: it exists so the order-based engine has
something to be cross-checked against and measured against.  The dominant
cost is rebuilding pcd, which can reach two hops away from any vertex whose
core or mcd changed.
"""

import time

from .decomp import compute_mcd, compute_pcd
from .graph import DynamicGraph
from .updates import UpdateResult, peel_find_vstar


class TraversalEngine:
    """Single-writer baseline engine keeping core, mcd and pcd current."""

    def __init__(self, graph: DynamicGraph, core, checked=False):
        self.g = graph
        self.core = core
        self.mcd = compute_mcd(graph, core)
        self.pcd = compute_pcd(graph, core, self.mcd)
        self.checked = checked

    @classmethod
    def from_graph(cls, graph, checked=False):
        from .oracle import naive_cores

        return cls(graph, naive_cores(graph), checked=checked)

    def core_of(self, v):
        return self.core[v]

    def cores(self):
        return list(self.core)

    def _ensure_vertex(self, v):
        self.g.ensure_vertex(v)
        for arr in (self.core, self.mcd, self.pcd):
            while len(arr) < self.g.n:
                arr.append(0)

    # -- pcd upkeep ------------------------------------------------------

    def _recompute_pcd_at(self, u):
        cu = self.core[u]
        self.pcd[u] = sum(
            1
            for w in self.g.neighbors(u)
            if self.core[w] > cu or (self.core[w] == cu and self.mcd[w] > self.core[w])
        )

    def refresh_pcd(self, touched):
        """Rebuild pcd for every vertex within one hop of a vertex whose core
        or mcd changed (the definition reaches two hops from the change)."""
        affected = set(touched)
        for v in touched:
            affected.update(self.g.neighbors(v))
        for v in affected:
            self._recompute_pcd_at(v)

    def _post_check(self):
        from .errors import InternalInvariant

        if self.mcd != compute_mcd(self.g, self.core):
            raise InternalInvariant("traversal mcd diverged from definition")
        if self.pcd != compute_pcd(self.g, self.core, self.mcd):
            raise InternalInvariant("traversal pcd diverged from definition")

    # -- insertion -------------------------------------------------------

    def insert(self, u, v) -> UpdateResult:
        t0 = time.perf_counter()
        self._ensure_vertex(max(u, v))
        self.g.insert_edge_raw(u, v)
        core, mcd = self.core, self.mcd
        cu, cv = core[u], core[v]
        K = min(cu, cv)
        if cv >= cu:
            mcd[u] += 1
        if cu >= cv:
            mcd[v] += 1
        # the endpoint mcds changed: patch pcd around them before searching
        self.refresh_pcd({u, v})
        root = u if cu <= cv else v

        visited = set()
        evicted = set()
        # cd is kept lazily for every core-K vertex, not just visited ones,
        # so a vertex first visited after a nearby eviction sees the already
        # discounted value instead of a stale pcd
        cd = {}

        def cd_of(x):
            return cd.setdefault(x, self.pcd[x])

        if mcd[root] > K:
            visited.add(root)
            stack = [root]
            while stack:
                w = stack.pop()
                if cd_of(w) > K:
                    for z in sorted(self.g.neighbors(w)):  # deterministic order
                        if z not in visited and core[z] == K and mcd[z] > K:
                            visited.add(z)
                            stack.append(z)
                elif w not in evicted:
                    self._propagate_eviction(w, cd_of, cd, visited, evicted, K)
        vstar = [w for w in visited if w not in evicted]
        for w in vstar:
            core[w] = K + 1
        mcd_touched = self._refresh_mcd(vstar, K, promote=True)
        self.refresh_pcd(set(vstar) | mcd_touched)
        result = UpdateResult(
            direction="insert", k=K, vstar=vstar, visited=sorted(visited),
            visited_size=len(visited),
        )
        result.elapsed_micros = int((time.perf_counter() - t0) * 1e6)
        if self.checked:
            self._post_check()
        return result

    def _propagate_eviction(self, w, cd_of, cd, visited, evicted, K):
        frontier = [w]
        evicted.add(w)
        while frontier:
            x = frontier.pop(0)
            for z in self.g.neighbors(x):
                if self.core[z] != K or z in evicted:
                    continue
                cd[z] = cd_of(z) - 1
                if z in visited and cd[z] <= K:
                    evicted.add(z)
                    frontier.append(z)

    # -- removal ---------------------------------------------------------

    def remove(self, u, v) -> UpdateResult:
        t0 = time.perf_counter()
        self.g.remove_edge_raw(u, v)
        core, mcd = self.core, self.mcd
        cu, cv = core[u], core[v]
        K = min(cu, cv)
        if cu <= cv:
            mcd[u] -= 1
        if cu >= cv:
            mcd[v] -= 1
        roots = [u] if cv > K else ([v] if cu > K else [u, v])
        vstar = peel_find_vstar(self.g, core, mcd, roots, K)
        mcd_touched = self._refresh_mcd(vstar, K, promote=False)
        self.refresh_pcd(set(vstar) | mcd_touched | {u, v})
        result = UpdateResult(
            direction="remove", k=K, vstar=vstar, visited=list(vstar),
            visited_size=len(vstar),
        )
        result.elapsed_micros = int((time.perf_counter() - t0) * 1e6)
        if self.checked:
            self._post_check()
        return result

    def _refresh_mcd(self, vstar, K, promote):
        """Incremental mcd repair after the cores of V* moved by one.

        Returns the set of vertices whose mcd changed, for pcd refresh.
        """
        g, core, mcd = self.g, self.core, self.mcd
        in_vstar = set(vstar)
        changed = set(vstar)
        new_core = K + 1 if promote else K - 1
        for w in vstar:
            mcd[w] = sum(1 for z in g.neighbors(w) if core[z] >= new_core)
            for z in g.neighbors(w):
                if z in in_vstar:
                    continue
                if promote and core[z] == K + 1:
                    mcd[z] += 1
                    changed.add(z)
                elif not promote and core[z] == K:
                    mcd[z] -= 1
                    changed.add(z)
        return changed
