import doctest
import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowgirth import sparse_cycle
from rainbowgirth.core import build_colored_graph
from rainbowgirth.oracle import girth_bfs
from rainbowgirth.sparse_cycle import AcyclicError, bs_bound, find_short_cycle, shortest_cycle, two_core


def hand_bound(N, k):
    # same formula through natural logs, written out independently
    l2 = math.log(k) / math.log(2)
    return (2 * (N + k) / (3 * k)) * (l2 + math.log(l2) / math.log(2) + 4)


def test_doctests():
    assert doctest.testmod(sparse_cycle).failed == 0


def test_bs_bound_values():
    assert bs_bound(4, 2) == 10.0
    assert bs_bound(100, 50) == pytest.approx(24.2814, abs=1e-3)
    assert bs_bound(100, 50) == pytest.approx(hand_bound(100, 50), rel=1e-12)
    assert bs_bound(8, 2) == pytest.approx(20 / 6 * 5)


@pytest.mark.parametrize("N, k", [(4, 1), (3, 2), (10, 1.5)])
def test_bs_bound_preconditions(N, k):
    with pytest.raises(ValueError):
        bs_bound(N, k)


def test_chorded_pentagon():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]
    cyc = find_short_cycle(edges)
    assert cyc.length == 3
    assert cyc.vertices == (0, 1, 2)
    assert not cyc.rainbow and cyc.colors == [None, None, None]


def test_colored_certificate():
    edges = [(0, 1), (1, 2), (0, 2), (2, 3)]
    colors = {(0, 1): 5, (1, 2): 6, (0, 2): 7, (2, 3): 8}
    cyc = find_short_cycle(edges, colors)
    assert cyc.rainbow and sorted(cyc.colors) == [5, 6, 7]


def test_tree_rejected():
    with pytest.raises(AcyclicError):
        find_short_cycle([(0, 1), (1, 2), (1, 3), (3, 4)])


def test_two_core_keeps_cycles():
    adj = {0: {1}, 1: {0, 2, 4}, 2: {1, 3}, 3: {2, 4}, 4: {3, 1, 5}, 5: {4}}
    core = two_core(adj)
    assert set(core) == {1, 2, 3, 4}
    assert shortest_cycle(adj) == [1, 2, 3, 4] or len(shortest_cycle(adj)) == 4


def random_graph(rng: random.Random, N: int, m: int) -> list[tuple[int, int]]:
    if m > N * (N - 1) // 4:
        return rng.sample(list(itertools.combinations(range(N), 2)), m)
    edges = set()
    while len(edges) < m:
        u, v = rng.randrange(N), rng.randrange(N)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def excess_graphs(count: int, seed: int):
    """Seeded graphs with N in [4, 200] and N + k edges, k in [2, N] (capped by K_N)."""
    rng = random.Random(seed)
    for _ in range(count):
        N = rng.randint(4, 200)
        k_max = min(N, N * (N - 1) // 2 - N)
        k = rng.randint(2, k_max)
        yield N, k, random_graph(rng, N, N + k)


def check_cycle(edges, cyc):
    es = set(edges)
    vs = cyc.vertices
    assert len(set(vs)) == len(vs) >= 3
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        assert (min(a, b), max(a, b)) in es


def test_pruning_preserves_girth_and_bound():
    for N, k, edges in excess_graphs(60, seed=11):
        g = build_colored_graph(N, [[e] for e in edges])
        cyc = find_short_cycle(edges)
        check_cycle(edges, cyc)
        assert cyc.length == girth_bfs(g)
        assert cyc.length <= bs_bound(N, k)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 12).flatmap(
    lambda n: st.lists(
        st.sampled_from(list(itertools.combinations(range(n), 2))), unique=True, min_size=1
    )
))
def test_matches_networkx_girth(edges):
    G = nx.Graph(edges)
    expected = nx.girth(G)
    if expected == math.inf:
        with pytest.raises(AcyclicError):
            find_short_cycle(edges)
    else:
        cyc = find_short_cycle(edges)
        check_cycle(edges, cyc)
        assert cyc.length == expected
