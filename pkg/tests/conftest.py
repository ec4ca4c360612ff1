from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from rainbowgirth.core import ColoredGraph, build_colored_graph, canonical_rotation


# ---------------------------------------------------------------------------
# independent brute-force oracles (share no code with the package search)


def nx_graph(g: ColoredGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def brute_rainbow_cycles(g: ColoredGraph, length_bound: int | None = None) -> list[tuple[int, ...]]:
    """Every rainbow cycle of ``g`` in canonical form, via networkx's simple-cycle enumerator."""
    out = []
    for cyc in nx.simple_cycles(nx_graph(g), length_bound=length_bound):
        if len(cyc) < 3:
            continue
        k = len(cyc)
        colors = [g.color_of[tuple(sorted((cyc[i], cyc[(i + 1) % k])))] for i in range(k)]
        if len(set(colors)) == k:
            out.append(canonical_rotation(cyc))
    return out


def brute_rainbow_girth(g: ColoredGraph) -> int | None:
    cycles = brute_rainbow_cycles(g)
    return min((len(c) for c in cycles), default=None)


def permutation_rainbow_girth(g: ColoredGraph) -> int | None:
    """Rainbow girth by trying every vertex sequence; only for n <= 7."""
    for k in range(3, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            first, rest = combo[0], combo[1:]
            for perm in itertools.permutations(rest):
                seq = (first, *perm)
                colors = []
                for i in range(k):
                    c = g.color(seq[i], seq[(i + 1) % k])
                    if c is None:
                        break
                    colors.append(c)
                else:
                    if len(set(colors)) == k:
                        return k
    return None


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def colored_graphs(draw, min_n: int = 3, max_n: int = 9, max_class: int = 3) -> ColoredGraph:
    """Arbitrary simple graph with its edges split into disjoint classes of 1..max_class edges."""
    n = draw(st.integers(min_n, max_n))
    all_edges = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(all_edges), unique=True, min_size=1, max_size=len(all_edges)))
    classes = []
    i = 0
    while i < len(edges):
        size = draw(st.integers(1, max_class))
        classes.append(edges[i : i + size])
        i += size
    return build_colored_graph(n, classes)


@st.composite
def single_edge_graphs(draw, min_n: int = 3, max_n: int = 9) -> ColoredGraph:
    n = draw(st.integers(min_n, max_n))
    all_edges = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(all_edges), unique=True, min_size=1, max_size=len(all_edges)))
    return build_colored_graph(n, [[e] for e in edges])


@st.composite
def cycles_in(draw, g_strategy=None):
    """A colored graph together with one of its cycles (as a vertex list)."""
    g = draw((g_strategy or colored_graphs()).filter(lambda g: nx.cycle_basis(nx_graph(g))))
    basis = nx.cycle_basis(nx_graph(g))
    cyc = draw(st.sampled_from(basis))
    return g, cyc


# ---------------------------------------------------------------------------
# acceptance reporting: one pass/fail line per criterion at the end of the run


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def report(label: str, ok: bool, detail: str = "") -> None:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        print(lines[-1])

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
