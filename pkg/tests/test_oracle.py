import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import (
    brute_rainbow_cycles,
    brute_rainbow_girth,
    colored_graphs,
    nx_graph,
    permutation_rainbow_girth,
    single_edge_graphs,
)
from rainbowgirth.core import build_colored_graph, is_rainbow_cycle
from rainbowgirth.generators import gen_half_matchings_gadget, gen_rainbow_ncycle
from rainbowgirth.oracle import girth_bfs, rainbow_girth_exact


def test_girth_examples():
    assert girth_bfs(gen_rainbow_ncycle(5)) == 5
    assert girth_bfs(build_colored_graph(3, [[(0, 1), (1, 2), (0, 2)]])) == 3
    assert girth_bfs(build_colored_graph(2, [[(0, 1)]])) is None


def test_gadget_n8():
    cyc = rainbow_girth_exact(gen_half_matchings_gadget(8))
    assert cyc.length == 4 and cyc.rainbow


def test_monochromatic_triangle_has_none():
    assert rainbow_girth_exact(build_colored_graph(3, [[(0, 1), (1, 2), (0, 2)]])) is None


def test_gadget_n12_golden():
    cyc = rainbow_girth_exact(gen_half_matchings_gadget(12))
    assert cyc.vertices == (0, 3, 4, 7, 8, 11)


def test_cutoff():
    g = gen_rainbow_ncycle(7)
    assert rainbow_girth_exact(g, cutoff=6) is None
    assert rainbow_girth_exact(g, cutoff=7).length == 7
    assert rainbow_girth_exact(g, cutoff=2) is None


@settings(max_examples=150, deadline=None)
@given(colored_graphs(max_n=12))
def test_agrees_with_enumerator(g):
    cyc = rainbow_girth_exact(g)
    expected = brute_rainbow_girth(g)
    if expected is None:
        assert cyc is None
        return
    assert cyc.length == expected
    assert is_rainbow_cycle(g, cyc.vertices).rainbow
    # canonical start and lexicographic tie-break
    vs = cyc.vertices
    assert vs[0] == min(vs) and vs[1] < vs[-1]
    assert vs == min(c for c in brute_rainbow_cycles(g, expected) if len(c) == expected)


@settings(max_examples=60, deadline=None)
@given(colored_graphs(max_n=7))
def test_agrees_with_permutation_search(g):
    cyc = rainbow_girth_exact(g)
    assert (cyc.length if cyc else None) == permutation_rainbow_girth(g)


@settings(max_examples=100, deadline=None)
@given(colored_graphs(max_n=12))
def test_rainbow_girth_at_least_girth(g):
    cyc = rainbow_girth_exact(g)
    girth = girth_bfs(g)
    nx_girth = nx.girth(nx_graph(g))
    assert girth == (None if nx_girth == float("inf") else nx_girth)
    if cyc is not None:
        assert cyc.length >= girth


@settings(max_examples=100, deadline=None)
@given(single_edge_graphs(max_n=10))
def test_singles_rainbow_girth_equals_girth(g):
    cyc = rainbow_girth_exact(g)
    assert (cyc.length if cyc else None) == girth_bfs(g)


@pytest.mark.parametrize("n", [8, 12, 16])
def test_deterministic(n):
    g = gen_half_matchings_gadget(n)
    assert rainbow_girth_exact(g) == rainbow_girth_exact(g)
