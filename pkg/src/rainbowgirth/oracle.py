"""Exact ground truth on small instances: plain girth and rainbow girth."""

from __future__ import annotations

from collections import deque

from .core import ColoredGraph, CycleResult, make_cycle


def girth_bfs(g: ColoredGraph) -> int | None:
    """Length of a shortest cycle of ``g`` ignoring colors, or None if acyclic.

    Full breadth-first search from every vertex; each non-tree edge ``u-w``
    met from root ``r`` gives a closed walk of length
    ``dist[u] + dist[w] + 1``, and the minimum over all roots is the girth.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def rainbow_girth_exact(g: ColoredGraph, cutoff: int | None = None) -> CycleResult | None:
    """A minimum-length rainbow cycle of ``g``, or None.

    Depth-first enumeration of simple paths that carry their set of used
    colors.  Each cycle is enumerated once, in canonical form: it starts at
    its minimum vertex ``s``, only visits vertices above ``s``, and its
    second vertex is smaller than its last.  Starts and neighbors are tried
    in increasing order and only strictly shorter cycles replace the
    incumbent, so among minimum-length rainbow cycles the lexicographically
    smallest canonical sequence is returned.

    ``cutoff`` is the largest cycle length of interest; when given, None
    means no rainbow cycle of length <= cutoff exists.  Exponential in
    general; intended for roughly n <= 32.
    """
    if cutoff is not None and cutoff < 3:
        return None
    adj = g.adjacency
    color_of = g.color_of
    # best length + 1 acts as the exclusive upper limit on lengths to look for
    limit = (cutoff + 1) if cutoff is not None else g.n + 1
    best: list[int] | None = None

    path: list[int] = []
    on_path = [False] * g.n
    used: set[int] = set()

    def extend(u: int, s: int) -> None:
        nonlocal limit, best
        # closing from u back to s yields a cycle of len(path) edges
        k = len(path)
        if 3 <= k < limit and path[1] < u and (s, u) in color_of:
            if color_of[(s, u)] not in used:
                limit = k
                best = list(path)
                return
        if k + 1 >= limit:
            return
        for w in adj[u]:
            if w <= s or on_path[w]:
                continue
            c = color_of[(u, w)] if u < w else color_of[(w, u)]
            if c in used:
                continue
            path.append(w)
            on_path[w] = True
            used.add(c)
            extend(w, s)
            used.discard(c)
            on_path[w] = False
            path.pop()

    for s in range(g.n):
        if g.n - s < 3:
            break
        path.append(s)
        on_path[s] = True
        extend(s, s)
        on_path[s] = False
        path.pop()
    if best is None:
        return None
    return make_cycle(best, color_of)
