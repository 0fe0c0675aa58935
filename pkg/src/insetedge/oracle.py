"""Brute-force ground truth: all-pairs BFS distance sums.

Everything here is a test fixture, deliberately independent of the
formula-based modules it validates.  All sums are exact Python integers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import AdjacentPair, Disconnected, EmptySet, SameVertex
from .tree import Tree


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph as adjacency tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_tree(cls, tree: Tree) -> "SimpleGraph":
        return cls(tree.n, tree.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(a) for a in adj))


def tree_plus_edge(tree: Tree, x: int, y: int) -> SimpleGraph:
    """The unicyclic graph obtained by adding edge (x, y) to the tree."""
    adj = [list(a) for a in tree.adjacency]
    adj[x].append(y)
    adj[y].append(x)
    return SimpleGraph(tree.n, tuple(tuple(a) for a in adj))


def _bfs(graph: SimpleGraph, source: int) -> list[int]:
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def wiener_brute(graph: SimpleGraph) -> int:
    """Sum of distances over all unordered vertex pairs."""
    total = 0
    for s in range(graph.n):
        dist = _bfs(graph, s)
        for d in dist:
            if d < 0:
                raise Disconnected(f"vertex unreachable from {s}")
            total += d
    return total // 2


def wiener_tree_linear(tree: Tree) -> int:
    """O(n) Wiener sum for a tree: each edge splits the tree into parts of
    sizes s and n-s and contributes s * (n - s)."""
    n = tree.n
    if n == 0:
        return 0
    # iterative post-order from root 0; size[v] counts v's subtree
    parent = [-1] * n
    order = []
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in tree.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    size = [1] * n
    total = 0
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
            total += size[u] * (n - size[u])
    return total


def delta_oracle(tree: Tree, x: int, y: int) -> int:
    """Wiener decrease caused by adding edge (x, y): brute force before/after."""
    if x == y:
        raise SameVertex(f"x == y == {x}")
    if y in tree.adjacency[x]:
        raise AdjacentPair(f"({x}, {y}) is an edge of the tree")
    before = wiener_brute(SimpleGraph.from_tree(tree))
    after = wiener_brute(tree_plus_edge(tree, x, y))
    return before - after


def set_distance(graph: SimpleGraph, a: set[int], b: set[int]) -> int:
    """Sum of d(u, v) over unordered pairs {u, v} with u in A, v in B, u != v.

    Each qualifying pair is counted once: full cross-sum for disjoint sets,
    within-set pairs once when the sets overlap.
    """
    if not a or not b:
        raise EmptySet("A and B must be non-empty")
    dist = {s: _bfs(graph, s) for s in a | b}
    total = 0
    support = sorted(a | b)
    for i, u in enumerate(support):
        for v in support[i + 1 :]:
            if (u in a and v in b) or (u in b and v in a):
                d = dist[u][v]
                if d < 0:
                    raise Disconnected(f"no path {u}..{v}")
                total += d
    return total
