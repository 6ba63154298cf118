"""Undirected simple graphs with indexed edges, linegraph squares, and
strong edge coloring certificates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph inputs (self-loops, duplicates, bad ids)."""


class Graph:
    """Undirected simple graph on vertices 0..n-1 with a stable edge index.

    Edges keep the order in which they were supplied; every algorithm in
    this package refers to edges by their index in ``edges``.  Instances
    are treated as immutable after construction.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: list[tuple[int, int]], adj: list[list[int]]):
        self.n = n
        self.edges = edges
        self.adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_set(self) -> set[tuple[int, int]]:
        """Set of normalized (u, v) pairs with u < v."""
        return set(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))


def build_graph(n: int, edge_pairs) -> Graph:
    """Build a validated Graph from (u, v) pairs.

    Rejects self-loops, out-of-range endpoints and duplicate edges; the
    strictness is deliberate so that edge counts of independently built
    graphs can be compared exactly.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, adj)


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set. Quadratic; oracle-scale only."""
    present = g.edge_set()
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    ]
    return build_graph(g.n, edges)


def is_tree(g: Graph) -> bool:
    """True iff g is connected and acyclic (a single vertex counts)."""
    if g.n == 0 or g.m != g.n - 1:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    reached = 1
    while queue:
        nxt: list[int] = []
        for u in queue:
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    nxt.append(w)
        queue = nxt
    return reached == g.n


@dataclass(frozen=True)
class SquaredLinegraph:
    """The square of the linegraph of ``base``: one vertex per edge index of
    the base graph, adjacent when the base edges lie within linegraph
    distance two (shared endpoint, or some base edge joining their
    endpoints)."""

    graph: Graph
    base: Graph


def square_of_linegraph(g: Graph) -> SquaredLinegraph:
    """Materialize L(g)^2 over the edge indices of g.

    For each edge {u,v} the conflicting edges are exactly those incident to
    u, to v, or to a neighbor of u or v.  Cost grows with the square of the
    degrees, which is fine for the verification-scale graphs this is meant
    for; the linear-time index computations never call it.
    """
    m = g.m
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)

    sq_edges: list[tuple[int, int]] = []
    mark = [-1] * m
    for idx, (u, v) in enumerate(g.edges):
        centers = {u, v}
        centers.update(g.adj[u])
        centers.update(g.adj[v])
        for w in centers:
            for other in incident[w]:
                if other > idx and mark[other] != idx:
                    mark[other] = idx
                    sq_edges.append((idx, other))
    return SquaredLinegraph(build_graph(m, sq_edges), g)


@dataclass(frozen=True)
class StrongEdgeColoring:
    """Map edge index -> color, in canonical form: colors are consecutive
    integers 0..palette_size-1 with no gaps."""

    colors: tuple[int, ...]
    palette_size: int = field(default=-1)

    def __post_init__(self):
        used = set(self.colors)
        k = len(used)
        if self.palette_size == -1:
            object.__setattr__(self, "palette_size", k)
        if self.palette_size != k:
            raise GraphError(f"palette_size {self.palette_size} != {k} distinct colors")
        if used and used != set(range(k)):
            raise GraphError("colors must be exactly 0..k-1 with no gaps")

    @classmethod
    def from_colors(cls, colors) -> "StrongEdgeColoring":
        """Relabel arbitrary non-negative colors to 0..k-1 in first-use order."""
        relabel: dict[int, int] = {}
        out = []
        for c in colors:
            if c not in relabel:
                relabel[c] = len(relabel)
            out.append(relabel[c])
        return cls(tuple(out), len(relabel))

    def __len__(self) -> int:
        return len(self.colors)


def is_strong_edge_coloring(g: Graph, coloring: StrongEdgeColoring) -> bool:
    """True iff the coloring is a proper vertex coloring of L(g)^2.

    Checked without materializing the square: the coloring is strong iff
    (a) edges sharing a vertex have distinct colors and (b) for every edge
    {u,v} the colors present at u and at v have only that edge's own color
    in common.  Any violation of either condition is a pair of base edges
    at linegraph distance <= 2 with equal colors, and conversely.
    """
    colors = coloring.colors
    if len(colors) != g.m:
        raise GraphError(f"coloring has {len(colors)} entries for {g.m} edges")
    if g.m == 0:
        return True

    k = coloring.palette_size
    uu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=g.m)
    vv = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=g.m)
    cc = np.asarray(colors, dtype=np.int64)

    counts = np.zeros((g.n, k), dtype=np.uint32)
    np.add.at(counts, (uu, cc), 1)
    np.add.at(counts, (vv, cc), 1)
    if (counts > 1).any():
        return False

    present = counts > 0
    # Shared-color check per edge, batched to bound memory on dense inputs.
    chunk = max(1, (1 << 22) // max(k, 1))
    for lo in range(0, g.m, chunk):
        hi = min(lo + chunk, g.m)
        both = present[uu[lo:hi]] & present[vv[lo:hi]]
        if (both.sum(axis=1) != 1).any():
            return False
    return True


def is_induced_matching(g: Graph, pairs: list[tuple[int, int]]) -> bool:
    """True iff ``pairs`` are edges of g forming an induced matching: no two
    share a vertex and no edge of g joins endpoints of two distinct pairs."""
    present = g.edge_set()
    owner = [-1] * g.n
    for i, (u, v) in enumerate(pairs):
        a, b = (u, v) if u < v else (v, u)
        if (a, b) not in present:
            return False
        if owner[a] != -1 or owner[b] != -1:
            return False
        owner[a] = owner[b] = i
    for u, v in g.edges:
        if owner[u] != -1 and owner[v] != -1 and owner[u] != owner[v]:
            return False
    return True


def graph_to_text(g: Graph) -> str:
    """Serialize to the plain text format: 'n m' then one 'u v' line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    """Parse the plain text format; blank lines and '#' comments are ignored."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphError("empty graph document")
    header = rows[0][1].split()
    if len(header) != 2:
        raise GraphError(f"line {rows[0][0]}: expected 'n m' header")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"line {rows[0][0]}: non-integer header") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer endpoint") from exc
    return build_graph(n, edges)
