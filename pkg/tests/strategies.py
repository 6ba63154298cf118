"""Shared hypothesis strategies: graphs, trees, decomposition trees and
permutation diagrams sized for the exact oracles."""

import hypothesis.strategies as st

from strongedge import (
    CotreeLeaf,
    DecompositionTree,
    JoinNode,
    PermutationDiagram,
    TreeLeaf,
    UnionNode,
    build_graph,
    tree_from_prufer,
)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return build_graph(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(n, seq)


@st.composite
def decomposition_trees(draw, max_leaf_n=5, max_internal=3):
    def node(budget):
        if budget == 0 or draw(st.booleans()):
            t = draw(trees(max_n=max_leaf_n))
            return CotreeLeaf(t) if draw(st.booleans()) else TreeLeaf(t)
        left = node(budget - 1)
        right = node(budget - 1)
        if draw(st.booleans()):
            return JoinNode(left, right)
        return UnionNode(left, right)

    return DecompositionTree(node(max_internal))


@st.composite
def permutation_diagrams(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pi = draw(st.permutations(range(n)))
    return PermutationDiagram(n, tuple(pi))
