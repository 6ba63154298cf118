"""Maximum induced matching of tree-cographs over their decomposition tree.

An induced matching is a set of edges no two of which share a vertex or are
joined by an edge (an independent set in the squared linegraph).  Trees are
solved by a three-state dynamic program; tree complements contribute 1 as
soon as they have any edge at all (their squared linegraph is a clique);
unions add, joins take the maximum of the children and 1 (any two matched
edges on opposite sides of a join conflict through the cross edges, and a
single cross edge is always available).
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (
    CotreeLeaf,
    DecompNode,
    DecompositionTree,
    JoinNode,
    TreeLeaf,
    UnionNode,
)
from .graph import Graph, GraphError, is_tree

__all__ = ["InducedMatchingResult", "im", "im_value", "im_tree", "im_tree_value"]

_NEG = -(1 << 60)


@dataclass(frozen=True)
class InducedMatchingResult:
    """iv(G) together with a witness matching over global vertex ids."""

    value: int
    witness: tuple[tuple[int, int], ...]


def _tree_dp(t: Graph):
    """Bottom-up DP rooted at vertex 0.  Three states per vertex v:

    s0: v unmatched and all children unmatched (v may match to its parent);
    s1: v unmatched, children unconstrained;
    s2: v matched to one child, which must be in s0, its siblings unmatched.

    s1 >= s0 everywhere, so "child unmatched" always contributes s1(child).
    Returns (parent, order, s0, s1, s2, partner); answer is max(s1, s2) at
    the root.  Iterative, so million-vertex paths are fine.
    """
    n = t.n
    adj = t.adj
    parent = [-1] * n
    order = [0]
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            pu = parent[u]
            for w in adj[u]:
                if w != pu:
                    parent[w] = u
                    nxt.append(w)
        order.extend(nxt)
        frontier = nxt

    s0 = [0] * n
    s1 = [0] * n
    s2 = [_NEG] * n
    partner = [-1] * n
    for i in range(n - 1, -1, -1):
        v = order[i]
        pv = parent[v]
        acc1 = 0
        accbest = 0
        bestdelta = _NEG
        best = -1
        for w in adj[v]:
            if w == pv:
                continue
            a = s1[w]
            b = s2[w]
            acc1 += a
            accbest += a if a >= b else b
            d = s0[w] - a
            if d > bestdelta:
                bestdelta = d
                best = w
        s0[v] = acc1
        s1[v] = accbest
        if best != -1:
            s2[v] = acc1 + 1 + bestdelta
            partner[v] = best
    return parent, s0, s1, s2, partner


def im_tree_value(t: Graph) -> int:
    """iv of a tree, value only, O(n)."""
    if not is_tree(t):
        raise GraphError("input is not a tree")
    _, _, s1, s2, _ = _tree_dp(t)
    return max(s1[0], s2[0])


def im_tree(t: Graph) -> tuple[int, list[tuple[int, int]]]:
    """iv of a tree with a witness matching (local vertex pairs), O(n)."""
    if not is_tree(t):
        raise GraphError("input is not a tree")
    parent, s0, s1, s2, partner = _tree_dp(t)
    value = max(s1[0], s2[0])
    pairs: list[tuple[int, int]] = []
    # Labels mirror the DP states; expand top-down.
    stack = [(0, 2 if s2[0] > s1[0] else 1)]
    while stack:
        v, label = stack.pop()
        pv = parent[v]
        if label == 1:
            for w in t.adj[v]:
                if w != pv:
                    stack.append((w, 2 if s2[w] > s1[w] else 1))
        elif label == 0:
            for w in t.adj[v]:
                if w != pv:
                    stack.append((w, 1))
        else:
            p = partner[v]
            pairs.append((v, p) if v < p else (p, v))
            for w in t.adj[v]:
                if w != pv:
                    stack.append((w, 0 if w == p else 1))
    return value, pairs


def _cotree_value(n: int) -> int:
    return 1 if n * (n - 1) // 2 - (n - 1) > 0 else 0


def _cotree_witness(t: Graph, off: int) -> list[tuple[int, int]]:
    """Lexicographically smallest nonedge of the tree t, shifted to global
    ids; only called when one exists (n >= 3)."""
    nbrs0 = set(t.adj[0])
    for w in range(1, t.n):
        if w not in nbrs0:
            return [(off, off + w)]
    # vertex 0 sees everyone, so t is a star and (1, 2) is a nonedge
    return [(off + 1, off + 2)]


def im_value(tree: DecompositionTree) -> int:
    """iv of the represented graph; linear in leaf sizes + tree size."""
    vals: dict[DecompNode, int] = {}
    stack: list[tuple[DecompNode, bool]] = [(tree.root, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, TreeLeaf):
            vals[node] = im_tree_value(node.t)
        elif isinstance(node, CotreeLeaf):
            vals[node] = _cotree_value(node.t.n)
        elif done:
            left = vals[node.left]
            right = vals[node.right]
            if isinstance(node, UnionNode):
                vals[node] = left + right
            else:
                vals[node] = max(left, right, 1)
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return vals[tree.root]


def im(tree: DecompositionTree) -> InducedMatchingResult:
    """iv of the represented graph with a witness over global vertex ids.

    Join tie-break is fixed: prefer the left child's witness, then the
    right child's, then the lexicographically first cross edge.  Witness
    lists are reused (extended in place) across union nodes, keeping the
    whole fold linear.
    """
    acc: dict[DecompNode, tuple[int, list[tuple[int, int]]]] = {}
    stack: list[tuple[DecompNode, bool]] = [(tree.root, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, TreeLeaf):
            off = tree.summary(node).global_offset
            value, local = im_tree(node.t)
            acc[node] = (value, [(u + off, v + off) for u, v in local])
        elif isinstance(node, CotreeLeaf):
            value = _cotree_value(node.t.n)
            off = tree.summary(node).global_offset
            acc[node] = (value, _cotree_witness(node.t, off) if value else [])
        elif done:
            lv, lw = acc.pop(node.left)
            rv, rw = acc.pop(node.right)
            if isinstance(node, UnionNode):
                lw.extend(rw)
                acc[node] = (lv + rv, lw)
            elif lv >= max(rv, 1):
                acc[node] = (lv, lw)
            elif rv >= 1:
                acc[node] = (rv, rw)
            else:
                off_l = tree.summary(node.left).global_offset
                off_r = tree.summary(node.right).global_offset
                acc[node] = (1, [(off_l, off_r)])
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    value, witness = acc[tree.root]
    return InducedMatchingResult(value, tuple(witness))
