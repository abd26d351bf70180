"""Per-core-value ordered buckets with O(log) rank and precedence queries.

Each bucket holds the vertices of one core value in their removal order.  A
bucket is backed by a subtree-size-augmented treap whose in-order traversal
is the bucket sequence; a vertex-to-node map lets us start rank queries at
the node and walk up to the root, so no key lookup is ever needed.

Two rejected alternatives are worth recording.  Real-number position labels
(midpoint insertion) exhaust float precision under unbounded updates, and
plain integer ranks cost O(n) shifts per structural change.  The treap gives
O(log) for everything we need: rank, precedence, removal, head/tail
insertion along a single descent path, and repositioning a vertex directly
after another one.
"""

import random

from .errors import DifferentBuckets, UnknownVertex


class _Node:
    __slots__ = ("vertex", "priority", "left", "right", "parent", "size")

    def __init__(self, vertex, priority):
        self.vertex = vertex
        self.priority = priority
        self.left = None
        self.right = None
        self.parent = None
        self.size = 1


def _size(node):
    return node.size if node is not None else 0


class _BucketTree:
    """One bucket: a position-ordered treap (min-heap on priority)."""

    __slots__ = ("root",)

    def __init__(self):
        self.root = None

    def __len__(self):
        return _size(self.root)

    # -- internal helpers ------------------------------------------------

    def _update(self, node):
        node.size = 1 + _size(node.left) + _size(node.right)

    def _rotate_up(self, x):
        """Rotate x above its parent, preserving in-order positions."""
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is not None:
            if g.left is p:
                g.left = x
            else:
                g.right = x
        else:
            self.root = x
        self._update(p)
        self._update(x)

    def _bubble_up(self, node):
        while node.parent is not None and node.priority < node.parent.priority:
            self._rotate_up(node)

    def _fix_sizes_up(self, node, delta):
        while node is not None:
            node.size += delta
            node = node.parent

    def _attach(self, node, parent, as_left):
        node.parent = parent
        if parent is None:
            self.root = node
        elif as_left:
            parent.left = node
        else:
            parent.right = node
        if parent is not None:
            self._fix_sizes_up(parent, 1)
        self._bubble_up(node)

    # -- operations ------------------------------------------------------

    def insert_head(self, node):
        if self.root is None:
            self._attach(node, None, True)
            return
        cur = self.root
        while cur.left is not None:
            cur = cur.left
        self._attach(node, cur, True)

    def insert_tail(self, node):
        if self.root is None:
            self._attach(node, None, False)
            return
        cur = self.root
        while cur.right is not None:
            cur = cur.right
        self._attach(node, cur, False)

    def insert_after(self, node, pred):
        """Make node the immediate in-order successor of pred."""
        if pred.right is None:
            self._attach(node, pred, False)
            return
        cur = pred.right
        while cur.left is not None:
            cur = cur.left
        self._attach(node, cur, True)

    def remove(self, node):
        # rotate the node down to a leaf, then detach
        while node.left is not None or node.right is not None:
            if node.left is None:
                child = node.right
            elif node.right is None:
                child = node.left
            else:
                child = node.left if node.left.priority < node.right.priority else node.right
            self._rotate_up(child)
        p = node.parent
        if p is None:
            self.root = None
        else:
            if p.left is node:
                p.left = None
            else:
                p.right = None
            self._fix_sizes_up(p, -1)
        node.parent = None

    def rank(self, node):
        """1-based in-order position, walking from the node to the root."""
        r = _size(node.left) + 1
        while node.parent is not None:
            if node.parent.right is node:
                r += _size(node.parent.left) + 1
            node = node.parent
        return r

    def __iter__(self):
        stack, cur = [], self.root
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            yield cur.vertex
            cur = cur.right

    def height(self):
        def h(node):
            if node is None:
                return 0
            return 1 + max(h(node.left), h(node.right))

        return h(self.root)


class KOrder:
    """The k-order as a sequence of per-core buckets O_0, O_1, ...

    Cross-bucket precedence is decided by the bucket keys alone; same-bucket
    precedence compares treap ranks.  Empty buckets are retained so that the
    K-1 and K+1 buckets always exist during maintenance.
    """

    def __init__(self, seed=None):
        self._rng = random.Random(seed)
        self.buckets: dict[int, _BucketTree] = {}
        self._node_of: dict[int, _Node] = {}
        self._bucket_of: dict[int, int] = {}

    # -- bookkeeping -----------------------------------------------------

    def __contains__(self, v):
        return v in self._node_of

    def __len__(self):
        return len(self._node_of)

    def bucket_of(self, v) -> int:
        try:
            return self._bucket_of[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def bucket(self, k) -> _BucketTree:
        tree = self.buckets.get(k)
        if tree is None:
            tree = _BucketTree()
            self.buckets[k] = tree
        return tree

    def bucket_size(self, k) -> int:
        tree = self.buckets.get(k)
        return len(tree) if tree is not None else 0

    def iter_bucket(self, k):
        tree = self.buckets.get(k)
        return iter(tree) if tree is not None else iter(())

    def bucket_keys(self):
        return sorted(self.buckets)

    def _node(self, v) -> _Node:
        node = self._node_of.get(v)
        if node is None:
            raise UnknownVertex(v)
        return node

    def _new_node(self, v) -> _Node:
        return _Node(v, self._rng.random())

    # -- queries ---------------------------------------------------------

    def precedes(self, u, v) -> bool:
        """True iff u comes strictly before v in the k-order."""
        ku, kv = self.bucket_of(u), self.bucket_of(v)
        if ku != kv:
            return ku < kv
        if u == v:
            return False
        tree = self.buckets[ku]
        return tree.rank(self._node(u)) < tree.rank(self._node(v))

    def rank_within(self, v) -> int:
        node = self._node(v)
        return self.buckets[self._bucket_of[v]].rank(node)

    # -- mutations -------------------------------------------------------

    def remove(self, v) -> None:
        node = self._node(v)
        k = self._bucket_of.pop(v)
        del self._node_of[v]
        self.buckets[k].remove(node)

    def append_tail(self, v, k) -> None:
        node = self._new_node(v)
        self.bucket(k).insert_tail(node)
        self._node_of[v] = node
        self._bucket_of[v] = k

    def insert_head_block(self, vs, k) -> None:
        """Prefix bucket k with vs, preserving the relative order of vs."""
        tree = self.bucket(k)
        for v in reversed(vs):
            node = self._new_node(v)
            tree.insert_head(node)
            self._node_of[v] = node
            self._bucket_of[v] = k

    def insert_after(self, v, pred) -> None:
        """Insert v (not currently indexed) right after pred, in pred's bucket."""
        pred_node = self._node(pred)
        k = self._bucket_of[pred]
        node = self._new_node(v)
        self.buckets[k].insert_after(node, pred_node)
        self._node_of[v] = node
        self._bucket_of[v] = k

    def reposition_after(self, v, pred) -> None:
        """Move v so it is the immediate successor of pred in their bucket."""
        if v == pred:
            raise DifferentBuckets(v, pred)
        kv, kp = self.bucket_of(v), self.bucket_of(pred)
        if kv != kp:
            raise DifferentBuckets(v, pred)
        if self.buckets[kv].rank(self._node(v)) == self.buckets[kv].rank(self._node(pred)) + 1:
            return
        self.remove(v)
        self.insert_after(v, pred)

    # -- diagnostics -----------------------------------------------------

    def total_nodes(self) -> int:
        return sum(len(t) for t in self.buckets.values())

    def height(self, k) -> int:
        tree = self.buckets.get(k)
        return tree.height() if tree is not None else 0


class CandidateHeap:
    """Indexed min-heap of vertices ordered by a caller-supplied key.

    The key function is evaluated at comparison time, not at push time.
    This matters when the keys are positions in a mutating sequence: a
    position snapshot taken at push time goes stale as earlier elements are
    removed, and snapshots taken at different times are not comparable.  As
    long as the relative order of the live entries never changes, fresh
    lookups keep the heap consistent.  The position index supports O(log)
    removal of an arbitrary vertex, used when a vertex's candidate degree
    drops back to zero.
    """

    def __init__(self, key=None):
        self._key = key if key is not None else (lambda v: v)
        self._entries: list[int] = []
        self._pos: dict[int, int] = {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, v):
        return v in self._pos

    def push(self, v):
        assert v not in self._pos
        self._entries.append(v)
        self._pos[v] = len(self._entries) - 1
        self._sift_up(len(self._entries) - 1)

    def pop(self):
        return self._remove_at(0)

    def remove(self, v):
        self._remove_at(self._pos[v])

    def _remove_at(self, i):
        entries = self._entries
        v = entries[i]
        last = entries.pop()
        del self._pos[v]
        if i < len(entries):
            entries[i] = last
            self._pos[last] = i
            self._sift_down(i)
            self._sift_up(i)
        return v

    def _sift_up(self, i):
        entries = self._entries
        key = self._key
        item = entries[i]
        item_key = key(item)
        while i > 0:
            parent = (i - 1) >> 1
            if key(entries[parent]) <= item_key:
                break
            entries[i] = entries[parent]
            self._pos[entries[i]] = i
            i = parent
        entries[i] = item
        self._pos[item] = i

    def _sift_down(self, i):
        entries = self._entries
        key = self._key
        size = len(entries)
        item = entries[i]
        item_key = key(item)
        while True:
            child = 2 * i + 1
            if child >= size:
                break
            ck = key(entries[child])
            if child + 1 < size:
                rk = key(entries[child + 1])
                if rk < ck:
                    child += 1
                    ck = rk
            if item_key <= ck:
                break
            entries[i] = entries[child]
            self._pos[entries[i]] = i
            i = child
        entries[i] = item
        self._pos[item] = i
