"""Tree representation, edge-list I/O, distances, and cycle anatomy.

Vertex ids are 0-based everywhere.  Cycle indices (the x_i / y_j positions
around the cycle created by a shortcut edge) are 1-based in the math but
stored 0-based in tuples: x_side[0] is the x anchor itself.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    AdjacentPair,
    DuplicateEdge,
    IdOutOfRange,
    MalformedLine,
    NotATree,
    SameVertex,
)


@dataclass(frozen=True)
class Tree:
    """Immutable tree: n vertices 0..n-1, n-1 edges, connected."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        edge_list = [tuple(e) for e in edges]
        if len(edge_list) != n - 1:
            raise NotATree(f"{len(edge_list)} edges on {n} vertices")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        norm = []
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRange(f"edge ({u}, {v}) with n={n}")
            if u == v:
                raise NotATree(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge {key} repeated")
            seen.add(key)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
        # n-1 edges and no duplicates: connected iff acyclic
        if n > 0:
            reached = 1
            visited = [False] * n
            visited[0] = True
            queue = deque([0])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if not visited[w]:
                        visited[w] = True
                        reached += 1
                        queue.append(w)
            if reached != n:
                raise NotATree(f"graph is disconnected ({reached} of {n} reached)")
        return cls(n, tuple(sorted(norm)), tuple(tuple(a) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class CycleAnatomy:
    """Decomposition of the cycle created by shortcut edge (x, y).

    k is the cycle length (tree distance + 1), k_prime = k // 2.  x_side
    holds the cycle vertices closer to x, ordered by distance from x
    (x_side[0] == x); y_side mirrors it.  middle is the equidistant cycle
    vertex, present exactly when k is odd.  weights_* are the sizes of the
    hanging subtrees (including the cycle vertex itself); they sum to n.
    """

    x: int
    y: int
    k: int
    k_prime: int
    x_side: tuple[int, ...]
    y_side: tuple[int, ...]
    middle: Optional[int]
    weights_x: tuple[int, ...]
    weights_y: tuple[int, ...]
    weight_middle: Optional[int]


def parse_tree(text: str) -> Tree:
    """Parse an edge-list document: header line n, then n-1 lines 'u v'.

    Lines starting with '#' are comments; blank lines are skipped; LF and
    CRLF both accepted.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise MalformedLine("empty document")
    header = rows[0].split()
    if len(header) != 1:
        raise MalformedLine(f"header must be a single integer, got {rows[0]!r}")
    try:
        n = int(header[0])
    except ValueError:
        raise MalformedLine(f"header must be a single integer, got {rows[0]!r}")
    if n < 1:
        raise MalformedLine(f"vertex count must be positive, got {n}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"expected 'u v', got {line!r}")
        edges.append((u, v))
    return Tree.from_edges(n, edges)


def serialize_tree(tree: Tree) -> str:
    """Emit the canonical edge-list document: LF, header, edges sorted by (min, max)."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(tree.edges))
    return "\n".join(lines) + "\n"


def bfs_distances(tree: Tree, source: int) -> list[int]:
    """Distances from source to every vertex."""
    if not (0 <= source < tree.n):
        raise IdOutOfRange(f"source {source} with n={tree.n}")
    dist = [-1] * tree.n
    dist[source] = 0
    queue = deque([source])
    adj = tree.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def path_between(tree: Tree, x: int, y: int) -> list[int]:
    """The unique simple path from x to y, inclusive."""
    if x == y:
        raise SameVertex(f"x == y == {x}")
    for v in (x, y):
        if not (0 <= v < tree.n):
            raise IdOutOfRange(f"vertex {v} with n={tree.n}")
    # BFS from y; parent[v] is v's neighbor one step closer to y
    parent = [-1] * tree.n
    parent[y] = y
    queue = deque([y])
    adj = tree.adjacency
    while queue:
        u = queue.popleft()
        if u == x:
            break
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                queue.append(w)
    path = [x]
    v = x
    while v != y:
        v = parent[v]
        path.append(v)
    return path


def anatomize(tree: Tree, x: int, y: int) -> CycleAnatomy:
    """Cycle anatomy for candidate shortcut edge (x, y).

    Requires d_T(x, y) >= 2 so the added edge creates a simple cycle of
    length k >= 3.  Subtree weights come from one traversal that deletes
    the k-1 path edges and sizes each resulting component: O(n) total.
    """
    path = path_between(tree, x, y)
    k = len(path)
    if k == 2:
        raise AdjacentPair(f"({x}, {y}) is an edge of the tree")
    k_prime = k // 2
    on_path = set(path)
    adj = tree.adjacency

    def component_size(v: int) -> int:
        size = 1
        stack = [v]
        seen = {v}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen or w in on_path:
                    continue
                seen.add(w)
                size += 1
                stack.append(w)
        return size

    weight = [component_size(v) for v in path]
    x_side = tuple(path[:k_prime])
    y_side = tuple(path[::-1][:k_prime])
    weights_x = tuple(weight[:k_prime])
    weights_y = tuple(weight[::-1][:k_prime])
    if k % 2:
        middle = path[k_prime]
        weight_middle = weight[k_prime]
    else:
        middle = None
        weight_middle = None
    return CycleAnatomy(
        x=x,
        y=y,
        k=k,
        k_prime=k_prime,
        x_side=x_side,
        y_side=y_side,
        middle=middle,
        weights_x=weights_x,
        weights_y=weights_y,
        weight_middle=weight_middle,
    )


def leaves(tree: Tree) -> set[int]:
    """All vertices of degree 1."""
    return {v for v in range(tree.n) if len(tree.adjacency[v]) == 1}
