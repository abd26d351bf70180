"""Workload parsing, sequential replay with per-op statistics, the
remove-then-reinsert stability protocol, and heuristic comparison runs."""

import random
import time
from dataclasses import dataclass, field

from .decomp import validate_korder
from .errors import CheckFailed, ParseError
from .graph import DynamicGraph
from .oracle import naive_cores
from .order_engine import OrderEngine
from .traversal_engine import TraversalEngine
from .updates import UpdateResult

CSV_HEADER = "op_index,kind,K,vstar_size,visited_size,elapsed_micros"
HISTOGRAM_EDGES = (3, 10, 100, 1000)


@dataclass
class WorkloadOp:
    """One replay step: insert ("I"), remove ("R") or core query ("Q")."""

    kind: str
    u: int
    v: int = -1


def parse_workload(lines) -> list:
    """One op per line: "I u v", "R u v" or "Q u"; '#' starts a comment."""
    ops = []
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        kind = parts[0].upper()
        if kind == "Q" and len(parts) == 2:
            ops.append(WorkloadOp("Q", int(parts[1])))
        elif kind in ("I", "R") and len(parts) == 3:
            ops.append(WorkloadOp(kind, int(parts[1]), int(parts[2])))
        else:
            raise ParseError(line_no, f"bad workload op {stripped!r}")
    return ops


def parse_workload_path(path) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_workload(fh)


def format_workload(ops) -> str:
    lines = []
    for op in ops:
        if op.kind == "Q":
            lines.append(f"Q {op.u}")
        else:
            lines.append(f"{op.kind} {op.u} {op.v}")
    return "\n".join(lines) + "\n"


def split_temporal(report, latest_n: int):
    """Turn a timestamped edge list into (base graph, insert workload): the
    latest_n newest edges become inserts, the rest stay in the base graph."""
    if not report.timestamps:
        raise ParseError(0, "edge list has no timestamps")
    by_time = sorted(report.timestamps, key=lambda t: t[2])
    cut = max(0, len(by_time) - latest_n)
    base = DynamicGraph()
    base.ensure_vertex(report.graph.n - 1)
    for u, v, _ in by_time[:cut]:
        base.insert_edge_raw(u, v)
    ops = [WorkloadOp("I", u, v) for u, v, _ in by_time[cut:]]
    return base, ops


class OracleEngine:
    """Replay engine that recomputes cores from scratch after every update.

    Slow by construction; it is the ground truth the incremental engines
    are compared against.
    """

    def __init__(self, graph: DynamicGraph):
        self.g = graph
        self.core = naive_cores(graph)

    @classmethod
    def from_graph(cls, graph, checked=False):
        return cls(graph)

    def core_of(self, v):
        return self.core[v]

    def cores(self):
        return list(self.core)

    def _apply(self, u, v, direction):
        t0 = time.perf_counter()
        if direction == "insert":
            self.g.ensure_vertex(max(u, v))
            while len(self.core) < self.g.n:
                self.core.append(0)
            self.g.insert_edge_raw(u, v)
        else:
            self.g.remove_edge_raw(u, v)
        new = naive_cores(self.g)
        K = min(
            self.core[u] if u < len(self.core) else 0,
            self.core[v] if v < len(self.core) else 0,
        )
        vstar = [x for x in range(len(new)) if new[x] != self.core[x]]
        self.core = new
        result = UpdateResult(
            direction=direction, k=K, vstar=vstar, visited_size=len(vstar)
        )
        result.elapsed_micros = int((time.perf_counter() - t0) * 1e6)
        return result

    def insert(self, u, v):
        return self._apply(u, v, "insert")

    def remove(self, u, v):
        return self._apply(u, v, "remove")


ENGINES = {
    "order": OrderEngine,
    "traversal": TraversalEngine,
    "oracle": OracleEngine,
}


def make_engine(algo: str, graph: DynamicGraph, heuristic="small", seed=None):
    if algo == "order":
        return OrderEngine.from_graph(graph, heuristic=heuristic, seed=seed)
    if algo == "traversal":
        return TraversalEngine.from_graph(graph)
    if algo == "oracle":
        return OracleEngine(graph)
    raise ValueError(f"unknown algo {algo!r}")


@dataclass
class ReplaySummary:
    """Aggregates over one replay run."""

    ops: int = 0
    insert_visited_total: int = 0
    insert_vstar_total: int = 0
    remove_vstar_total: int = 0
    # |V+| histogram over inserts: <=3, <=10, <=100, <=1000, >1000
    histogram: list = field(default_factory=lambda: [0] * 5)
    elapsed_micros_total: int = 0

    @property
    def ratio(self):
        """Sum of visited set sizes over sum of changed set sizes (inserts)."""
        if self.insert_vstar_total == 0:
            return float("nan")
        return self.insert_visited_total / self.insert_vstar_total

    def add_insert(self, visited, vstar):
        self.insert_visited_total += visited
        self.insert_vstar_total += vstar
        for i, edge in enumerate(HISTOGRAM_EDGES):
            if visited <= edge:
                self.histogram[i] += 1
                break
        else:
            self.histogram[-1] += 1


def check_engine(engine, op_index):
    """Compare the engine against a fresh oracle run; for the order engine
    also verify the maintained order.  Raises CheckFailed on divergence."""
    truth = naive_cores(engine.g)
    if engine.cores() != truth:
        bad = [x for x in range(len(truth)) if engine.cores()[x] != truth[x]]
        raise CheckFailed(op_index, f"core mismatch at vertices {bad[:20]}")
    if isinstance(engine, OrderEngine):
        ok, detail = validate_korder(engine.g, engine.state, engine.order)
        if not ok:
            raise CheckFailed(op_index, detail)


def replay(engine, ops, check_every=0, row_sink=None):
    """Apply ops sequentially, emitting one stats row per op.

    row_sink receives one CSV line (no newline) per op as it completes.
    Consistency checks run outside the per-op timing.
    """
    summary = ReplaySummary()
    for i, op in enumerate(ops):
        if op.kind == "I":
            r = engine.insert(op.u, op.v)
            summary.add_insert(r.visited_size, r.vstar_size)
        elif op.kind == "R":
            r = engine.remove(op.u, op.v)
            summary.remove_vstar_total += r.vstar_size
        else:
            k = engine.core_of(op.u)
            r = UpdateResult(direction="query", k=k)
        summary.ops += 1
        summary.elapsed_micros_total += r.elapsed_micros
        if row_sink is not None:
            row_sink(
                f"{i},{op.kind},{r.k},{r.vstar_size},"
                f"{r.visited_size},{r.elapsed_micros}"
            )
        if check_every and (i + 1) % check_every == 0:
            check_engine(engine, i)
    return summary


@dataclass
class StabilityRow:
    group_index: int
    micros: int
    vstar_total: int


def stability_run(graph, groups, group_size, p, seed=None, algo="order", check=False):
    """Remove groups*group_size sampled edges, then reinsert them group by
    group, timing each group.  After each insert, with probability p one
    random present edge is removed (its cost counts toward the group)."""
    if groups < 1 or group_size < 1:
        raise ValueError("groups and group-size must be positive")
    total = groups * group_size
    all_edges = sorted(graph.edges())
    if total > len(all_edges):
        raise ValueError(f"need {total} edges to sample, graph has {len(all_edges)}")
    rng = random.Random(seed)
    sampled = rng.sample(all_edges, total)

    g = graph.copy()
    for u, v in sampled:
        g.remove_edge_raw(u, v)
    engine = make_engine(algo, g)
    # mirror of the present edge set, for uniform random removal
    sampled_set = set(sampled)
    present = [e for e in all_edges if e not in sampled_set]
    pos = {e: i for i, e in enumerate(present)}

    def drop(e):
        i = pos.pop(e)
        last = present.pop()
        if i < len(present):
            present[i] = last
            pos[last] = i

    rows = []
    for gi in range(groups):
        t0 = time.perf_counter()
        vstar_total = 0
        for u, v in sampled[gi * group_size : (gi + 1) * group_size]:
            r = engine.insert(u, v)
            vstar_total += r.vstar_size
            e = (min(u, v), max(u, v))
            present.append(e)
            pos[e] = len(present) - 1
            if p > 0 and present and rng.random() < p:
                eu, ev = present[rng.randrange(len(present))]
                rr = engine.remove(eu, ev)
                vstar_total += rr.vstar_size
                drop((eu, ev))
        micros = int((time.perf_counter() - t0) * 1e6)
        if check:
            check_engine(engine, gi)
        rows.append(StabilityRow(gi, micros, vstar_total))
    return rows


def heuristics_compare(graph, ops, seed=None):
    """Replay the same workload under each initial-order heuristic.

    Returns {heuristic: ReplaySummary}.  All heuristics must agree on the
    final core numbers; disagreement raises CheckFailed.
    """
    results = {}
    final_cores = None
    for heuristic in ("small", "large", "random"):
        engine = OrderEngine.from_graph(graph.copy(), heuristic=heuristic, seed=seed)
        results[heuristic] = replay(engine, ops)
        if final_cores is None:
            final_cores = engine.cores()
        elif engine.cores() != final_cores:
            raise CheckFailed(-1, f"heuristic {heuristic} diverged on final cores")
    return results
