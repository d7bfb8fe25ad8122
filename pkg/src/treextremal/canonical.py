"""Canonical codes for unrooted trees.

The code of a rooted tree is a parenthesis string built bottom-up: a leaf is
"()", an internal vertex wraps the sorted concatenation of its children's
codes. An unrooted tree is coded by rooting at each of its one or two
centers and taking the lexicographically smaller string. Two trees get equal
codes iff they are isomorphic, so the code doubles as a dedupe key and as a
deterministic sort key.
"""

from .trees import Tree


def centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices, found by iterative leaf stripping."""
    if t.n <= 2:
        return list(range(t.n))
    degree = [len(a) for a in t.adjacency]
    layer = [v for v in range(t.n) if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
            degree[v] = 0
        layer = nxt
    return sorted(layer)


def rooted_code(t: Tree, root: int) -> str:
    """Canonical parenthesis string of t rooted at root."""
    t.check_vertex(root)
    # Iterative post-order; children codes are sorted before wrapping.
    parent = [-1] * t.n
    order = []
    stack = [root]
    seen = [False] * t.n
    seen[root] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in t.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    code: list[str] = [""] * t.n
    kids: list[list[str]] = [[] for _ in range(t.n)]
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(kids[v])) + ")"
        p = parent[v]
        if p >= 0:
            kids[p].append(code[v])
    return code[root]


def canonical_form(t: Tree) -> str:
    """Relabeling-invariant code: minimum of the rooted codes at the centers."""
    return min(rooted_code(t, c) for c in centers(t))
