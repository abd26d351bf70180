"""Order-based core maintenance under single edge insertions and removals.

The engine owns a graph, a CoreState (core/rem/mcd) and a KOrder, and keeps
all four mutually consistent across updates.

Insertion walks bucket O_K from the root following the k-order, but only
through vertices that can still matter: a min-heap of (rank, vertex) pairs
holds every not-yet-visited vertex whose candidate degree (ext) is nonzero,
so runs of irrelevant vertices are jumped over in O(1).  Heap keys are rank
snapshots taken at push time; within one operation vertices ahead of the
scan front only ever leave the bucket (candidates) or are re-inserted
directly behind the front (demotions), so the relative order of live heap
entries never changes and stale absolute ranks remain order-consistent.

Removal reuses the mcd-based peeling routine to find V*, then moves each
demoted vertex to the tail of the next-lower bucket while patching rem by
two neighbor scans.
"""

import time
from collections import deque

from .decomp import CoreState, compute_mcd, core_decompose, validate_korder
from .errors import InternalInvariant
from .graph import DynamicGraph
from .order_index import CandidateHeap, KOrder
from .updates import UpdateResult, peel_find_vstar


class OrderEngine:
    """Single-writer maintenance engine; queries are safe between updates."""

    def __init__(self, graph: DynamicGraph, state: CoreState, order: KOrder, checked=False):
        self.g = graph
        self.state = state
        self.order = order
        self.checked = checked
        self._ext = [0] * graph.n
        self._work = 0

    @classmethod
    def from_graph(cls, graph, heuristic="small", seed=None, order_seed=None, checked=False):
        state, order = core_decompose(graph, heuristic=heuristic, seed=seed, order_seed=order_seed)
        return cls(graph, state, order, checked=checked)

    # -- small helpers ---------------------------------------------------

    def core_of(self, v):
        return self.state.core[v]

    def cores(self):
        return list(self.state.core)

    def _ensure_vertex(self, v):
        """Unknown endpoints become isolated vertices with core 0 at the tail
        of O_0; any id gap below them is filled the same way."""
        if v < self.g.n and v in self.order:
            return
        self.g.ensure_vertex(v)
        self.state.ensure_vertex(self.g.n - 1)
        while len(self._ext) < self.g.n:
            self._ext.append(0)
        for w in range(self.g.n):
            if w not in self.order:
                self.order.append_tail(w, 0)

    def _in_bucket(self, v, k):
        return v in self.order and self.order.bucket_of(v) == k

    def _post_check(self):
        ok, detail = validate_korder(self.g, self.state, self.order)
        if not ok:
            raise InternalInvariant(f"k-order invalid: {detail}")
        if self.state.mcd != compute_mcd(self.g, self.state.core):
            raise InternalInvariant("stored mcd diverged from definition")

    # -- insertion -------------------------------------------------------

    def insert(self, u, v) -> UpdateResult:
        t0 = time.perf_counter()
        self._work = 0
        self._ensure_vertex(u)
        self._ensure_vertex(v)
        self.g.insert_edge_raw(u, v)
        core, rem, mcd = self.state.core, self.state.rem, self.state.mcd
        cu, cv = core[u], core[v]
        K = min(cu, cv)
        if cv >= cu:
            mcd[u] += 1
        if cu >= cv:
            mcd[v] += 1
        if cu < cv:
            root = u
        elif cv < cu:
            root = v
        else:
            root = u if self.order.precedes(u, v) else v
        rem[root] += 1
        result = UpdateResult(direction="insert", k=K)
        if rem[root] <= K:
            # the bucket is still a valid k-order; nothing changes
            self._finish(result, t0)
            return result
        result.vstar, result.visited = self._find_and_promote(root, K)
        result.visited_size = len(result.visited)
        self._finish(result, t0)
        return result

    def _find_and_promote(self, root, K):
        g, order = self.g, self.order
        core, rem, mcd = self.state.core, self.state.rem, self.state.mcd
        ext = self._ext
        # entries are always in bucket O_K, so comparing by current rank is
        # well defined; see CandidateHeap for why push-time snapshots are not
        heap = CandidateHeap(key=order.rank_within)
        heap.push(root)
        candidates = {}  # insertion-ordered; survivors form V* in k-order
        pop_seq = {}
        touched = []
        vplus = []
        while len(heap):
            w = heap.pop()
            self._work += 1
            if not self._in_bucket(w, K):
                continue  # liveness guard against stale entries
            pop_seq[w] = len(pop_seq)
            if ext[w] + rem[w] > K:
                # Case-1: w may reach core K+1; its later same-bucket
                # neighbors gain one candidate degree each.
                vplus.append(w)
                wrank = order.rank_within(w)
                for z in g.neighbors(w):
                    self._work += 1
                    if core[z] != K or not self._in_bucket(z, K):
                        continue
                    if order.rank_within(z) > wrank:
                        if ext[z] == 0:
                            touched.append(z)
                            heap.push(z)
                        ext[z] += 1
                order.remove(w)
                candidates[w] = True
            elif ext[w] > 0:
                # Case-2b: w stays at core K; retracting it may demote
                # candidates that counted on it.
                vplus.append(w)
                rem[w] += ext[w]
                ext[w] = 0
                self._remove_candidates(w, K, candidates, heap, pop_seq)
            # ext == 0 and rem <= K cannot be popped: such vertices are
            # never pushed (Case-2a vertices are jumped over entirely).
        vstar = list(candidates)
        for w in vstar:
            ext[w] = 0
            core[w] = K + 1
        order.insert_head_block(vstar, K + 1)
        for w in vstar:
            # rem is position-relative; recompute it at the new head position
            rem[w] = sum(
                1
                for z in g.neighbors(w)
                if core[z] > K + 1 or (core[z] == K + 1 and order.precedes(w, z))
            )
            self._work += 1
        for w in touched:
            ext[w] = 0
        self._refresh_mcd_insert(vstar, K)
        return vstar, vplus

    def _remove_candidates(self, w, K, candidates, heap, pop_seq):
        """Cascade removal of candidates no longer viable once w is settled.

        Demoted vertices are re-inserted into the bucket directly after w (in
        cascade order), which is exactly their position in the new bucket
        sequence; everything not visited keeps its place.
        """
        g, order = self.g, self.order
        core, rem = self.state.core, self.state.rem
        ext = self._ext
        queue = deque()
        queued = set()
        for z in g.neighbors(w):
            self._work += 1
            if z in candidates:
                rem[z] -= 1
                if rem[z] + ext[z] <= K:
                    queue.append(z)
                    queued.add(z)
        anchor = w
        w_rank = order.rank_within(w)
        while queue:
            wp = queue.popleft()
            queued.discard(wp)
            rem[wp] += ext[wp]
            ext[wp] = 0
            del candidates[wp]
            order.insert_after(wp, anchor)
            anchor = wp
            for z in g.neighbors(wp):
                self._work += 1
                if core[z] != K:
                    continue
                if self._in_bucket(z, K):
                    # only not-yet-visited vertices after w carry nonzero ext
                    if ext[z] > 0 and order.rank_within(z) > w_rank:
                        ext[z] -= 1
                        if ext[z] == 0 and z in heap:
                            heap.remove(z)
                elif z in candidates:
                    if pop_seq[wp] < pop_seq[z]:
                        ext[z] -= 1
                    else:
                        rem[z] -= 1
                    if ext[z] + rem[z] <= K and z not in queued:
                        queue.append(z)
                        queued.add(z)

    def _refresh_mcd_insert(self, vstar, K):
        g, core, mcd = self.g, self.state.core, self.state.mcd
        in_vstar = set(vstar)
        for w in vstar:
            self._work += 1
            mcd[w] = sum(1 for z in g.neighbors(w) if core[z] >= K + 1)
            for z in g.neighbors(w):
                self._work += 1
                if z not in in_vstar and core[z] == K + 1:
                    mcd[z] += 1

    # -- removal ---------------------------------------------------------

    def remove(self, u, v) -> UpdateResult:
        t0 = time.perf_counter()
        self._work = 0
        self.g.remove_edge_raw(u, v)
        core, rem, mcd = self.state.core, self.state.rem, self.state.mcd
        cu, cv = core[u], core[v]
        K = min(cu, cv)
        if cu <= cv:
            mcd[u] -= 1
        if cu >= cv:
            mcd[v] -= 1
        # the earlier endpoint loses one later neighbor
        if cu < cv:
            rem[u] -= 1
        elif cv < cu:
            rem[v] -= 1
        elif self.order.precedes(u, v):
            rem[u] -= 1
        else:
            rem[v] -= 1
        roots = [u] if cv > K else ([v] if cu > K else [u, v])
        vstar = peel_find_vstar(self.g, core, mcd, roots, K)
        self._demote_in_order(vstar, K)
        self._refresh_mcd_remove(vstar, K)
        result = UpdateResult(
            direction="remove", k=K, vstar=vstar, visited=list(vstar),
            visited_size=len(vstar),
        )
        self._finish(result, t0)
        return result

    def _demote_in_order(self, vstar, K):
        """Move V* members to the tail of O_{K-1}, recomputing rem on the way.

        Cores of V* members are already K-1 here, so the core tests below
        naturally exclude them from the still-in-O_K adjustments.
        """
        g, order = self.g, self.order
        core, rem = self.state.core, self.state.rem
        pending = set(vstar)
        for w in vstar:
            new_rem = 0
            for z in g.neighbors(w):
                self._work += 1
                if core[z] == K and order.precedes(z, w):
                    rem[z] -= 1
                if core[z] >= K or z in pending:
                    new_rem += 1
            rem[w] = new_rem
            pending.discard(w)
            order.remove(w)
            order.append_tail(w, K - 1)

    def _refresh_mcd_remove(self, vstar, K):
        g, core, mcd = self.g, self.state.core, self.state.mcd
        in_vstar = set(vstar)
        for w in vstar:
            self._work += 1
            mcd[w] = sum(1 for z in g.neighbors(w) if core[z] >= K - 1)
            for z in g.neighbors(w):
                self._work += 1
                if z not in in_vstar and core[z] == K:
                    mcd[z] -= 1

    # -- common tail -----------------------------------------------------

    def _finish(self, result, t0):
        result.work = self._work
        result.elapsed_micros = int((time.perf_counter() - t0) * 1e6)
        if self.checked:
            self._post_check()
