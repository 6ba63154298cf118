"""Decomposition trees for tree-cographs.

A decomposition tree is a rooted binary tree whose internal nodes are join
or union operations and whose leaves carry a tree t, representing either t
itself or the complement of t.  The complement is a label, never data: a
cotree leaf describes Theta(n^2) edges with an O(n) tree, which is what
makes the index computations linear.  `realize` materializes the graph for
verification and small instances only.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph, is_tree

__all__ = [
    "DecompositionError",
    "TreeLeaf",
    "CotreeLeaf",
    "JoinNode",
    "UnionNode",
    "NodeSummary",
    "DecompositionTree",
    "parse_decomposition",
    "serialize_decomposition",
    "realize",
    "tree_from_prufer",
    "random_labeled_tree",
    "random_tree_cograph",
]


class DecompositionError(ValueError):
    """Raised for malformed or invalid decomposition documents."""


@dataclass(eq=False)
class TreeLeaf:
    t: Graph


@dataclass(eq=False)
class CotreeLeaf:
    t: Graph  # the leaf graph is complement(t), never materialized here


@dataclass(eq=False)
class JoinNode:
    left: "DecompNode"
    right: "DecompNode"


@dataclass(eq=False)
class UnionNode:
    left: "DecompNode"
    right: "DecompNode"


DecompNode = TreeLeaf | CotreeLeaf | JoinNode | UnionNode

_LEAF = (TreeLeaf, CotreeLeaf)
_INTERNAL = (JoinNode, UnionNode)


@dataclass(frozen=True)
class NodeSummary:
    """Size of the graph a subtree represents, plus where its vertices live
    in the global id space (left subtree ids precede right subtree ids)."""

    n: int
    m: int
    global_offset: int


def _cotree_m(n: int) -> int:
    return n * (n - 1) // 2 - (n - 1)


def _compute_summaries(root: DecompNode) -> dict[DecompNode, NodeSummary]:
    # Post-order for sizes; traversal is iterative throughout this module
    # because normalized k-ary inputs produce arbitrarily deep chains.
    sizes: dict[DecompNode, tuple[int, int]] = {}
    seen: set[int] = set()
    stack: list[tuple[DecompNode, bool]] = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            nl, ml = sizes[node.left]
            nr, mr = sizes[node.right]
            if isinstance(node, JoinNode):
                sizes[node] = (nl + nr, ml + mr + nl * nr)
            else:
                sizes[node] = (nl + nr, ml + mr)
            continue
        if id(node) in seen:
            raise DecompositionError("node appears more than once in the tree")
        seen.add(id(node))
        if isinstance(node, _LEAF):
            t = node.t
            if not isinstance(t, Graph) or not is_tree(t):
                raise DecompositionError("leaf graph is not a tree")
            sizes[node] = (t.n, t.m if isinstance(node, TreeLeaf) else _cotree_m(t.n))
        elif isinstance(node, _INTERNAL):
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
        else:
            raise DecompositionError(f"not a decomposition node: {node!r}")

    # Pre-order for global vertex offsets.
    summaries: dict[DecompNode, NodeSummary] = {}
    offs: list[tuple[DecompNode, int]] = [(root, 0)]
    while offs:
        node, off = offs.pop()
        n, m = sizes[node]
        summaries[node] = NodeSummary(n, m, off)
        if isinstance(node, _INTERNAL):
            offs.append((node.right, off + sizes[node.left][0]))
            offs.append((node.left, off))
    return summaries


class DecompositionTree:
    """A validated decomposition tree with per-node size summaries."""

    __slots__ = ("root", "summaries")

    def __init__(self, root: DecompNode):
        self.root = root
        self.summaries = _compute_summaries(root)

    @property
    def n(self) -> int:
        return self.summaries[self.root].n

    @property
    def m(self) -> int:
        return self.summaries[self.root].m

    def summary(self, node: DecompNode) -> NodeSummary:
        return self.summaries[node]

    def __repr__(self) -> str:
        return f"DecompositionTree(n={self.n}, m={self.m})"


def parse_decomposition(text: str) -> DecompositionTree:
    """Parse the JSON wire format into a validated DecompositionTree.

    Leaves are `{"type":"tree"|"cotree","n":<int>,"edges":[[u,v],...]}`,
    internal nodes `{"type":"join"|"union","children":[...]}` with two or
    more children; extra children fold into a left-leaning binary chain
    (both operations are associative).
    """
    try:
        obj = json.loads(text)
    except RecursionError:
        raise DecompositionError("document nesting is too deep") from None
    except json.JSONDecodeError as exc:
        raise DecompositionError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return DecompositionTree(_node_from_obj(obj))


def _node_from_obj(obj, path: str = "$") -> DecompNode:
    results: list[DecompNode] = []
    stack: list[tuple[object, str, bool]] = [(obj, path, False)]
    while stack:
        o, p, done = stack.pop()
        if done:
            k = len(o["children"])
            children = results[len(results) - k :]
            del results[len(results) - k :]
            cls = JoinNode if o["type"] == "join" else UnionNode
            node: DecompNode = cls(children[0], children[1])
            for extra in children[2:]:
                node = cls(node, extra)
            results.append(node)
            continue
        if not isinstance(o, dict):
            raise DecompositionError(f"{p}: expected an object")
        kind = o.get("type")
        if kind in ("tree", "cotree"):
            results.append(_leaf_from_obj(o, p))
        elif kind in ("join", "union"):
            extra_keys = set(o) - {"type", "children"}
            if extra_keys:
                raise DecompositionError(f"{p}: unexpected keys {sorted(extra_keys)}")
            children = o.get("children")
            if not isinstance(children, list) or len(children) < 2:
                raise DecompositionError(
                    f"{p}: 'children' must be a list of at least two nodes"
                )
            stack.append((o, p, True))
            for i in range(len(children) - 1, -1, -1):
                stack.append((children[i], f"{p}.children[{i}]", False))
        elif kind is None:
            raise DecompositionError(f"{p}: missing 'type'")
        else:
            raise DecompositionError(f"{p}: unknown node type {kind!r}")
    return results[0]


def _plain_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _leaf_from_obj(obj: dict, path: str) -> DecompNode:
    extra = set(obj) - {"type", "n", "edges"}
    if extra:
        raise DecompositionError(f"{path}: unexpected keys {sorted(extra)}")
    n = obj.get("n")
    if not _plain_int(n) or n < 1:
        raise DecompositionError(f"{path}: 'n' must be a positive integer")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise DecompositionError(f"{path}: 'edges' must be a list of pairs")
    pairs: list[tuple[int, int]] = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(map(_plain_int, e))):
            raise DecompositionError(f"{path}.edges[{i}]: expected a pair of integers")
        pairs.append((e[0], e[1]))
    try:
        t = build_graph(n, pairs)
    except GraphError as exc:
        raise DecompositionError(f"{path}: {exc}") from None
    if not is_tree(t):
        raise DecompositionError(f"{path}: leaf graph is not a tree")
    return TreeLeaf(t) if obj["type"] == "tree" else CotreeLeaf(t)


def serialize_decomposition(tree: DecompositionTree) -> str:
    """Canonical JSON: strictly binary children arrays, compact separators."""
    parts: dict[int, str] = {}
    stack: list[tuple[DecompNode, bool]] = [(tree.root, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, _LEAF):
            kind = "tree" if isinstance(node, TreeLeaf) else "cotree"
            doc = {"type": kind, "n": node.t.n, "edges": [list(e) for e in node.t.edges]}
            parts[id(node)] = json.dumps(doc, separators=(",", ":"))
        elif done:
            kind = "join" if isinstance(node, JoinNode) else "union"
            left = parts.pop(id(node.left))
            right = parts.pop(id(node.right))
            parts[id(node)] = f'{{"type":"{kind}","children":[{left},{right}]}}'
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return parts[id(tree.root)]


def realize(tree: DecompositionTree) -> Graph:
    """Materialize the represented graph on global vertex ids.

    Edge order is canonical and mirrored by the coloring construction:
    within any node, left-subtree edges, then right-subtree edges, then (for
    a join) the cross edges in lexicographic order.  Tree leaves keep their
    input edge order; cotree leaves list nonedges lexicographically.
    Quadratic in the output size, so verification-scale only.
    """
    summaries = tree.summaries
    edges: list[tuple[int, int]] = []
    stack: list[tuple[DecompNode, bool]] = [(tree.root, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, TreeLeaf):
            off = summaries[node].global_offset
            edges.extend((u + off, v + off) for u, v in node.t.edges)
        elif isinstance(node, CotreeLeaf):
            off = summaries[node].global_offset
            t = node.t
            present = t.edge_set()
            for u in range(t.n):
                for v in range(u + 1, t.n):
                    if (u, v) not in present:
                        edges.append((u + off, v + off))
        elif done:
            if isinstance(node, JoinNode):
                sl = summaries[node.left]
                sr = summaries[node.right]
                for u in range(sl.global_offset, sl.global_offset + sl.n):
                    for v in range(sr.global_offset, sr.global_offset + sr.n):
                        edges.append((u, v))
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return build_graph(summaries[tree.root].n, edges)


def tree_from_prufer(n: int, seq: list[int]) -> Graph:
    """Decode a Prufer sequence of length n-2 into a labeled tree on n
    vertices.  Linear time via the moving-pointer decode."""
    if n < 1:
        raise GraphError(f"tree needs at least one vertex, got n={n}")
    if len(seq) != max(0, n - 2):
        raise GraphError(f"sequence length {len(seq)} != n-2 for n={n}")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"sequence entry {x} outside 0..{n - 1}")
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf == -1:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return build_graph(n, edges)


def random_labeled_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree on n vertices."""
    if n <= 2:
        return tree_from_prufer(n, [])
    return tree_from_prufer(n, [rng.randrange(n) for _ in range(n - 2)])


def random_tree_cograph(
    seed: int, max_depth: int, max_leaf_size: int
) -> DecompositionTree:
    """Pseudo-random valid decomposition tree, deterministic per seed.

    Depth 0 forces a single leaf; otherwise each position is a leaf with
    fixed probability, an internal join/union node otherwise.  Leaf trees
    are uniform labeled trees of random size up to max_leaf_size.
    """
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    if max_leaf_size < 1:
        raise ValueError(f"max_leaf_size must be >= 1, got {max_leaf_size}")
    rng = random.Random(seed)

    def gen(depth: int) -> DecompNode:
        if depth == 0 or rng.random() < 0.35:
            t = random_labeled_tree(rng.randint(1, max_leaf_size), rng)
            return TreeLeaf(t) if rng.random() < 0.5 else CotreeLeaf(t)
        cls = JoinNode if rng.random() < 0.5 else UnionNode
        left = gen(depth - 1)
        right = gen(depth - 1)
        return cls(left, right)

    return DecompositionTree(gen(max_depth))
