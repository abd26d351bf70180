"""Mutable undirected simple graph with edge-list ingestion.

Vertex ids are dense integers 0..n-1.  The loader remaps arbitrary external
ids onto dense internal ids and keeps the mapping for round-tripping.
"""

from dataclasses import dataclass, field

from .errors import DuplicateEdge, MissingEdge, ParseError, SelfLoop


class DynamicGraph:
    """Adjacency-set graph supporting O(1) expected edge tests and removal.

    Iteration order over a neighbor set is unspecified; callers must not
    rely on it.
    """

    __slots__ = ("adj",)

    def __init__(self):
        self.adj: list[set[int]] = []

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def ensure_vertex(self, v: int) -> None:
        """Grow the vertex range so that v is a valid (possibly isolated) vertex."""
        while len(self.adj) <= v:
            self.adj.append(set())

    def has_edge(self, u: int, v: int) -> bool:
        return u < len(self.adj) and v in self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int):
        return self.adj[u]

    def insert_edge_raw(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoop(u)
        self.ensure_vertex(max(u, v))
        if v in self.adj[u]:
            raise DuplicateEdge(u, v)
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge_raw(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise MissingEdge(u, v)
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def edges(self):
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph()
        g.adj = [set(s) for s in self.adj]
        return g


@dataclass
class LoadReport:
    """Outcome of parsing an edge-list stream."""

    graph: DynamicGraph
    id_map: dict = field(default_factory=dict)  # external id -> internal id
    external_ids: list = field(default_factory=list)  # internal id -> external id
    skipped_duplicates: int = 0
    skipped_self_loops: int = 0
    # (u, v, t) triples in file order, internal ids, for temporal workloads
    timestamps: list = field(default_factory=list)

    def intern(self, ext: int) -> int:
        """Map an external id to an internal one, creating it if unseen."""
        iid = self.id_map.get(ext)
        if iid is None:
            iid = len(self.external_ids)
            self.id_map[ext] = iid
            self.external_ids.append(ext)
            self.graph.ensure_vertex(iid)
        return iid


def load_edge_list(lines) -> LoadReport:
    """Parse "u v" / "u v t" lines into an undirected simple graph.

    Lines starting with '#' and blank lines are skipped.  Duplicate edges
    (in either direction) and self-loops are skipped and counted.
    """
    report = LoadReport(graph=DynamicGraph())
    g = report.graph
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) not in (2, 3):
            raise ParseError(line_no, f"expected 2 or 3 columns, got {len(parts)}")
        try:
            eu, ev = int(parts[0]), int(parts[1])
            ts = int(parts[2]) if len(parts) == 3 else None
        except ValueError:
            raise ParseError(line_no, f"malformed integer in {stripped!r}") from None
        if eu == ev:
            report.skipped_self_loops += 1
            continue
        u, v = report.intern(eu), report.intern(ev)
        if g.has_edge(u, v):
            report.skipped_duplicates += 1
            continue
        g.insert_edge_raw(u, v)
        if ts is not None:
            report.timestamps.append((u, v, ts))
    return report


def load_edge_list_path(path) -> LoadReport:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh)
