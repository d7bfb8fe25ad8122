"""Pruefer codec: the bijection between labeled trees on n >= 2 vertices
and words of length n - 2 over the labels.

Vertex i appears in the word exactly deg(i) - 1 times, which is what makes
the codec the enumeration backbone for degree-sequence searches.
"""

import heapq

from .errors import LabelOutOfRange, LengthMismatch
from .trees import Tree


def prufer_decode(seq: list[int], n: int) -> Tree:
    """Decode a Pruefer word into the unique labeled tree it encodes."""
    if n < 2:
        raise LengthMismatch(f"decoding needs n >= 2, got n={n}")
    if len(seq) != n - 2:
        raise LengthMismatch(f"expected length {n - 2} for n={n}, got {len(seq)}")
    for a in seq:
        if not (0 <= a < n):
            raise LabelOutOfRange(f"label {a} outside 0..{n - 1}")

    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges = []
    for a in seq:
        u = heapq.heappop(leaves)
        edges.append((u, a))
        degree[u] -= 1
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Tree(n, edges)


def prufer_encode(t: Tree) -> list[int]:
    """Inverse of prufer_decode: repeatedly strip the smallest leaf."""
    if t.n < 2:
        raise LengthMismatch(f"encoding needs n >= 2, got n={t.n}")
    degree = [len(a) for a in t.adjacency]
    alive = [set(a) for a in t.adjacency]
    leaves = [v for v in range(t.n) if degree[v] == 1]
    heapq.heapify(leaves)

    seq = []
    for _ in range(t.n - 2):
        u = heapq.heappop(leaves)
        (a,) = alive[u]
        seq.append(a)
        alive[a].discard(u)
        alive[u].clear()
        degree[a] -= 1
        degree[u] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    return seq
