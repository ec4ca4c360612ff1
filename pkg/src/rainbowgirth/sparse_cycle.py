"""Girth of sparse graphs: the Bollobas-Szemeredi upper bound and a shortest-cycle finder."""

from __future__ import annotations

import math
from collections import deque
from typing import Hashable, Iterable, Mapping

from .core import CycleResult, Edge, canonical_rotation, make_cycle


class AcyclicError(ValueError):
    pass


def bs_bound(N: float, k: float) -> float:
    """Upper bound on the girth of any graph with ``N`` vertices and ``N + k`` edges.

    ``2(N+k)/(3k) * (log2 k + log2 log2 k + 4)``, valid for ``N >= 4`` and
    ``k >= 2``.

    >>> bs_bound(4, 2)
    10.0
    """
    if N < 4 or k < 2:
        raise ValueError(f"bound needs N >= 4 and k >= 2, got N={N}, k={k}")
    lk = math.log2(k)
    return 2 * (N + k) / (3 * k) * (lk + math.log2(lk) + 4)


def two_core(adj: Mapping[Hashable, Iterable[Hashable]]) -> dict:
    """Strip vertices of degree <= 1 until none remain.  Cycles are untouched."""
    core = {v: set(ns) for v, ns in adj.items()}
    stack = [v for v, ns in core.items() if len(ns) <= 1]
    while stack:
        v = stack.pop()
        ns = core.pop(v, None)
        if ns is None:
            continue
        for w in ns:
            nw = core[w]
            nw.discard(v)
            if len(nw) == 1:
                stack.append(w)
    return core


def _path_to_root(parent: dict, v):
    path = [v]
    while parent[v] is not None:
        v = parent[v]
        path.append(v)
    return path


def shortest_cycle(adj: Mapping[Hashable, Iterable[Hashable]]) -> list | None:
    """Vertex sequence of a shortest cycle in an undirected simple graph, or None.

    Breadth-first search from every vertex of the 2-core.  A non-tree edge
    ``u-w`` seen from root ``r`` closes a walk of length
    ``dist[u] + dist[w] + 1``; the minimum over all roots is the girth and the
    minimizing walk is a simple cycle.  Each search stops once no shorter
    cycle can be closed.  Roots are visited in sorted order and only strict
    improvements replace the incumbent, so the result is deterministic.
    """
    core = two_core(adj)
    best_len = math.inf
    best: list | None = None
    for root in sorted(core):
        if best_len == 3:
            break
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best_len:
                break
            for w in sorted(core[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if length < best_len:
                        pu = _path_to_root(parent, u)
                        pw = _path_to_root(parent, w)
                        cyc = pu[::-1] + pw[:-1]
                        # shared prefix beyond the root: not simple, a shorter cycle exists
                        if len(set(cyc)) == len(cyc) == length:
                            best_len, best = length, cyc
    return best


def find_short_cycle(
    edges: Iterable[tuple[int, int]], colors: Mapping[Edge, int] | None = None
) -> CycleResult:
    """Return a shortest cycle of the graph formed by ``edges``.

    Colors play no part in the search.  When ``colors`` maps each edge to a
    color id the result carries that certificate and a meaningful rainbow
    flag; otherwise colors are ``None`` and ``rainbow`` is False.  Raises
    :class:`AcyclicError` when the edges form a forest.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    cyc = shortest_cycle(adj)
    if cyc is None:
        raise AcyclicError("edge set is acyclic")
    return make_cycle(canonical_rotation(cyc), colors)
