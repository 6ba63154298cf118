"""Lexicographic BFS, perfect elimination orderings, and optimal greedy
coloring of chordal graphs."""

from __future__ import annotations

from .graph import Graph


class PerfectEliminationError(RuntimeError):
    """Raised when a graph expected to be chordal fails the PEO check."""


class _Bucket:
    __slots__ = ("verts", "prev", "next")

    def __init__(self, verts: set[int]):
        self.verts = verts
        self.prev: _Bucket | None = None
        self.next: _Bucket | None = None


def lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order, smallest vertex id first among ties.

    Partition refinement: one pass per vertex, each unvisited neighbor moves
    to a fresh bucket directly in front of its current one.  On a chordal
    graph the reverse of the returned order is a perfect elimination
    ordering.
    """
    n = g.n
    if n == 0:
        return []
    first = _Bucket(set(range(n)))
    bucket_of: list[_Bucket | None] = [first] * n
    order: list[int] = []
    for _ in range(n):
        while not first.verts:
            first = first.next  # type: ignore[assignment]
            first.prev = None
        v = min(first.verts)
        first.verts.discard(v)
        bucket_of[v] = None
        order.append(v)
        split: dict[int, _Bucket] = {}  # id(bucket) -> its new front bucket
        for w in g.adj[v]:
            b = bucket_of[w]
            if b is None:
                continue
            nb = split.get(id(b))
            if nb is None:
                nb = _Bucket(set())
                nb.next = b
                nb.prev = b.prev
                if b.prev is not None:
                    b.prev.next = nb
                b.prev = nb
                if b is first:
                    first = nb
                split[id(b)] = nb
            b.verts.discard(w)
            nb.verts.add(w)
            bucket_of[w] = nb
    return order


def is_perfect_elimination_ordering(g: Graph, peo: list[int]) -> bool:
    """Check that each vertex's later neighbors form a clique.

    Uses the deferred-check trick: v's later neighbors beyond the earliest
    one p must be neighbors of p, verified when p itself is processed.
    Linear in n + m.
    """
    n = g.n
    if sorted(peo) != list(range(n)):
        return False
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    adjset = [set(nbrs) for nbrs in g.adj]
    pending: list[list[int]] = [[] for _ in range(n)]
    for v in peo:
        for w in pending[v]:
            if w not in adjset[v]:
                return False
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if later:
            p = min(later, key=lambda w: pos[w])
            pending[p].extend(w for w in later if w != p)
    return True


def is_chordal(g: Graph) -> bool:
    order = lexbfs_order(g)
    order.reverse()
    return is_perfect_elimination_ordering(g, order)


def chordal_coloring(g: Graph) -> list[int]:
    """Color a chordal graph with exactly its clique number of colors.

    Greedy first-fit along the Lex-BFS visit order: every vertex's earlier
    neighbors form a clique, so no vertex ever sees more than omega - 1
    blocked colors.  Raises PerfectEliminationError if the PEO check fails,
    which would mean the input was not chordal after all.
    """
    order = lexbfs_order(g)
    if not is_perfect_elimination_ordering(g, order[::-1]):
        raise PerfectEliminationError(
            "graph has no perfect elimination ordering (not chordal)"
        )
    colors = [-1] * g.n
    for v in order:
        used = {colors[w] for w in g.adj[v] if colors[w] != -1}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors
