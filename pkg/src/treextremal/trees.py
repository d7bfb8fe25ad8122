"""Unrooted trees on dense 0-based vertex labels.

A tree on n vertices is stored as a sorted tuple of n - 1 undirected edges
(u, v) with u < v. Construction validates everything once (label range, no
loops or duplicates, connectivity); after that a Tree is immutable and safe
to share between threads.
"""

from collections import deque
from typing import Iterable

from .errors import InvalidTree, ParseError, VertexOutOfRange


class Tree:
    """Immutable unrooted tree on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InvalidTree(f"vertex count must be >= 1, got {n}")
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidTree(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
            if u == v:
                raise InvalidTree(f"self-loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        if len(normalized) != n - 1:
            raise InvalidTree(f"expected {n - 1} edges for n={n}, got {len(normalized)}")
        if len(set(normalized)) != len(normalized):
            raise InvalidTree("duplicate edge")

        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)

        # Connectivity; acyclicity follows from the edge count.
        if n > 1:
            seen = [False] * n
            seen[0] = True
            stack = [0]
            reached = 1
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        reached += 1
                        stack.append(y)
            if reached != n:
                raise InvalidTree("edge set is not connected")

        self.n = n
        self.edges = tuple(normalized)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        """Degree multiset, sorted nonincreasing."""
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adjacency[v]) == 1)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


def path_tree(n: int) -> Tree:
    """Path 0-1-...-(n-1)."""
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """Star with center 0 and leaves 1..n-1."""
    return Tree(n, [(0, i) for i in range(1, n)])


def bfs_distances(t: Tree, src: int) -> list[int]:
    """Distance from src to every vertex."""
    t.check_vertex(src)
    dist = [-1] * t.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_parents(t: Tree, src: int) -> list[int]:
    """Parent of every vertex in the BFS tree rooted at src (src maps to -1)."""
    t.check_vertex(src)
    parent = [-2] * t.n
    parent[src] = -1
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if parent[y] == -2:
                parent[y] = x
                queue.append(y)
    return parent


def diameter(t: Tree) -> int:
    """Length of a longest path, via the double-sweep trick."""
    if t.n == 1:
        return 0
    d0 = bfs_distances(t, 0)
    far = max(range(t.n), key=lambda v: d0[v])
    return max(bfs_distances(t, far))


def is_caterpillar(t: Tree) -> bool:
    """True iff deleting every leaf leaves a path (or at most one vertex).

    The non-leaf vertices of a tree always induce a subtree, so it suffices
    to check that each of them has at most two non-leaf neighbors.
    """
    internal = [v for v in range(t.n) if len(t.adjacency[v]) >= 2]
    for v in internal:
        if sum(1 for w in t.adjacency[v] if len(t.adjacency[w]) >= 2) > 2:
            return False
    return True


def tree_from_edge_list(text: str) -> Tree:
    """Parse the edge-list format: first line n, then n-1 lines "u v"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list document")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {ln!r}") from None
        edges.append((u, v))
    return Tree(n, edges)


def tree_to_edge_list(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


def path_between(t: Tree, src: int, dst: int) -> list[int]:
    """The unique src..dst path as a vertex list (inclusive)."""
    parent = bfs_parents(t, src)
    t.check_vertex(dst)
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return path
