import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordercore.errors import DifferentBuckets, UnknownVertex
from ordercore.order_index import CandidateHeap, KOrder


def shadow_of(order, k):
    return list(order.iter_bucket(k))


def test_append_and_rank():
    order = KOrder(seed=1)
    for v in range(5):
        order.append_tail(v, 2)
    assert shadow_of(order, 2) == [0, 1, 2, 3, 4]
    assert [order.rank_within(v) for v in range(5)] == [1, 2, 3, 4, 5]
    assert order.precedes(0, 4) and not order.precedes(4, 0)


def test_precedes_across_buckets():
    order = KOrder(seed=1)
    order.append_tail(0, 1)
    order.append_tail(1, 3)
    assert order.precedes(0, 1)
    assert not order.precedes(1, 0)
    assert not order.precedes(0, 0)


def test_insert_head_block_preserves_relative_order():
    order = KOrder(seed=1)
    order.append_tail(9, 4)
    order.insert_head_block([1, 2, 3], 4)
    assert shadow_of(order, 4) == [1, 2, 3, 9]


def test_insert_after_and_remove():
    order = KOrder(seed=1)
    for v in (0, 1, 2):
        order.append_tail(v, 0)
    order.remove(1)
    assert shadow_of(order, 0) == [0, 2]
    assert 1 not in order
    order.insert_after(1, 0)
    assert shadow_of(order, 0) == [0, 1, 2]


def test_reposition_after():
    order = KOrder(seed=1)
    for v in range(4):
        order.append_tail(v, 0)
    order.reposition_after(0, 2)
    assert shadow_of(order, 0) == [1, 2, 0, 3]
    # already the successor: a no-op
    order.reposition_after(0, 2)
    assert shadow_of(order, 0) == [1, 2, 0, 3]


def test_reposition_rejects_cross_bucket():
    order = KOrder(seed=1)
    order.append_tail(0, 0)
    order.append_tail(1, 1)
    with pytest.raises(DifferentBuckets):
        order.reposition_after(0, 1)


def test_unknown_vertex():
    order = KOrder(seed=1)
    with pytest.raises(UnknownVertex):
        order.rank_within(7)
    with pytest.raises(UnknownVertex):
        order.remove(7)


def test_empty_bucket_retained_after_drain():
    order = KOrder(seed=1)
    order.append_tail(0, 5)
    order.remove(0)
    assert order.bucket_size(5) == 0
    assert 5 in order.buckets  # bucket object survives for reuse


def run_shadow_fuzz(mutations, seed, buckets=3):
    """Model-based fuzz: mirror every mutation in plain python lists and
    compare the full state after each step."""
    rng = random.Random(seed)
    order = KOrder(seed=seed)
    shadow = {k: [] for k in range(buckets)}
    where = {}
    next_v = 0
    for _ in range(mutations):
        move = rng.random()
        members = [v for v in where]
        if move < 0.35 or not members:
            k = rng.randrange(buckets)
            order.append_tail(next_v, k)
            shadow[k].append(next_v)
            where[next_v] = k
            next_v += 1
        elif move < 0.55:
            k = rng.randrange(buckets)
            block = [next_v + i for i in range(rng.randrange(1, 4))]
            order.insert_head_block(block, k)
            shadow[k][:0] = block
            for v in block:
                where[v] = k
            next_v += len(block)
        elif move < 0.75:
            v = members[rng.randrange(len(members))]
            k = where.pop(v)
            order.remove(v)
            shadow[k].remove(v)
        elif move < 0.9:
            pred = members[rng.randrange(len(members))]
            k = where[pred]
            order.insert_after(next_v, pred)
            shadow[k].insert(shadow[k].index(pred) + 1, next_v)
            where[next_v] = k
            next_v += 1
        else:
            k = rng.randrange(buckets)
            if len(shadow[k]) < 2:
                continue
            v, pred = rng.sample(shadow[k], 2)
            order.reposition_after(v, pred)
            shadow[k].remove(v)
            shadow[k].insert(shadow[k].index(pred) + 1, v)
        for k in range(buckets):
            assert shadow_of(order, k) == shadow[k]
    # ranks, precedence and the node-count identity on the final state
    for k in range(buckets):
        for i, v in enumerate(shadow[k]):
            assert order.rank_within(v) == i + 1
            assert order.bucket_of(v) == k
    assert order.total_nodes() == len(where)
    rng2 = random.Random(seed + 1)
    members = sorted(where)
    for _ in range(min(300, len(members) ** 2)):
        u, v = rng2.choice(members), rng2.choice(members)
        ku, kv = where[u], where[v]
        if ku != kv:
            expected = ku < kv
        elif u == v:
            expected = False
        else:
            expected = shadow[ku].index(u) < shadow[kv].index(v)
        assert order.precedes(u, v) == expected
    return order, where


def test_shadow_fuzz_small():
    run_shadow_fuzz(1500, seed=5)


def test_treap_height_stays_logarithmic():
    order, where = run_shadow_fuzz(4000, seed=11, buckets=2)
    for k in (0, 1):
        size = order.bucket_size(k)
        if size > 16:
            assert order.height(k) <= 5 * math.log2(size)


def test_candidate_heap_pops_in_key_order():
    keys = {}
    heap = CandidateHeap(key=keys.__getitem__)
    rng = random.Random(3)
    items = list(range(50))
    rng.shuffle(items)
    for rank, v in enumerate(items):
        keys[v] = rank
    for v in items[:30]:
        heap.push(v)
    popped = [heap.pop() for _ in range(len(heap))]
    assert popped == sorted(popped, key=keys.__getitem__)


def test_candidate_heap_remove_and_membership():
    keys = {1: 5, 2: 1, 3: 9}
    heap = CandidateHeap(key=keys.__getitem__)
    for v in (1, 2, 3):
        heap.push(v)
    assert 1 in heap
    heap.remove(1)
    assert 1 not in heap and len(heap) == 2
    assert heap.pop() == 2
    assert heap.pop() == 3


@given(st.lists(st.integers(min_value=0, max_value=10 ** 6), unique=True, max_size=60))
@settings(max_examples=60, deadline=None)
def test_candidate_heap_matches_sorting(values):
    keys = {v: v for v in values}
    heap = CandidateHeap(key=keys.__getitem__)
    for v in values:
        heap.push(v)
    out = [heap.pop() for _ in range(len(heap))]
    assert out == sorted(values)
