"""Constructive short-rainbow-cycle finders.

Four routes, one per class mix:

* :func:`find_matching_edge_sampled` - size-2 matchings and single edges;
  sample a vertex set S that always contains the heavy vertices, check the
  concentration conditions, then take a shortest cycle of a rainbow edge set
  inside S.
* :func:`find_simplified` - same class mix, plain p-sampling and a single
  expectation-style acceptance test.
* :func:`find_triangle_edge` - triangles and single edges; keep two edges of
  every triangle, take a shortest cycle, and repair repeated colors.
* :func:`find_matchings_appendix` - matchings only; one random edge per
  matching, accept when enough vertices are left untouched.

:func:`find_mixed` dispatches matching/triangle instances to the first or
third route.  Every returned cycle is re-certified against the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import ParameterSet, appendix_gamma_ok, feasible_params, gamma_prime, matching_rate
from .core import (
    MATCHING2,
    SINGLE,
    TRIANGLE,
    ColoredGraph,
    CycleResult,
    Edge,
    build_colored_graph,
    canonical_rotation,
    is_rainbow_cycle,
)
from .seeds import make_rng, splitmix64
from .sparse_cycle import bs_bound, find_short_cycle

DEFAULT_RETRIES = 64
DEFAULT_DISPATCH_ALPHA = 0.05


class FinderError(ValueError):
    pass


class WrongKindError(FinderError):
    pass


class HypothesisError(FinderError):
    """The instance does not meet a count or excess requirement of the route."""


class RepairError(FinderError):
    pass


class RetriesExhausted(RuntimeError):
    def __init__(self, message: str, trials: list["TrialRecord"]):
        super().__init__(message)
        self.trials = trials


@dataclass
class TrialRecord:
    """Measurements of one randomized trial.

    For the sampling routes ``size_s`` is |S|, ``x`` the number of matching
    classes with an edge inside S, ``y`` the singles inside S and
    ``r_s = x + y``.  For the appendix route ``x`` is the number of chosen
    edges, ``size_z`` the untouched vertices and ``size_s`` the vertices
    spanned by the chosen edges.
    """

    seed: int
    size_s: int | None = None
    heavy_count: int | None = None
    x: int | None = None
    y: int | None = None
    r_s: int | None = None
    size_z: int | None = None
    accepted: bool = False
    reasons: list[str] = field(default_factory=list)

    @property
    def excess(self) -> int | None:
        if self.size_s is None or self.x is None:
            return None
        return self.x + (self.y or 0) - self.size_s

    def bound(self) -> float | None:
        """Girth bound for the accepted edge set: N = size_s vertices, N + excess edges."""
        k = self.excess
        if k is None or k < 2 or self.size_s < 4:
            return None
        return bs_bound(self.size_s, k)


def _require_kinds(g: ColoredGraph, allowed: set[str], route: str) -> None:
    for cls in g.classes:
        if cls.kind not in allowed:
            raise WrongKindError(
                f"{route} accepts only {sorted(allowed)} classes; class {cls.id} is {cls.kind}"
            )


def _certify(g: ColoredGraph, cycle: CycleResult) -> CycleResult:
    out = is_rainbow_cycle(g, canonical_rotation(cycle.vertices))
    if not out.rainbow:
        raise AssertionError(f"finder produced a non-rainbow cycle {out.vertices}")
    return out


def budget_heavy_threshold(g: ColoredGraph) -> int:
    """Smallest threshold >= 2 leaving at most n^(2/3)/2 heavy vertices.

    Keeps the forced part of S small next to the n^(2/3) slack in the |S|
    condition, which the fixed desk-scale default does not guarantee.
    """
    budget = g.n ** (2 / 3) / 2
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    t = 2
    while sum(1 for d in degrees if d >= t) > budget:
        t += 1
    return t


def heavy_vertices(g: ColoredGraph, threshold: int) -> set[int]:
    """Vertices incident to at least ``threshold`` colored edges."""
    if threshold < 1:
        raise ValueError(f"threshold must be >= 1, got {threshold}")
    return {v for v in range(g.n) if g.degree(v) >= threshold}


# ---------------------------------------------------------------------------
# matchings + single edges


class SubsetSampler:
    """Vectorized bookkeeping for sampling vertex subsets of a matching/single instance."""

    def __init__(self, g: ColoredGraph):
        _require_kinds(g, {MATCHING2, SINGLE}, "matching/single sampler")
        self.g = g
        self.n = g.n
        mats = g.classes_of_kind(MATCHING2)
        sgls = g.classes_of_kind(SINGLE)
        self.mat_ids = [c.id for c in mats]
        self.sgl_ids = [c.id for c in sgls]
        self.mat = np.array([c.edges for c in mats], dtype=np.int64).reshape(-1, 2, 2)
        self.sgl = np.array([c.edges[0] for c in sgls], dtype=np.int64).reshape(-1, 2)
        self.degree = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)

    @property
    def num_matchings(self) -> int:
        return len(self.mat_ids)

    @property
    def num_singles(self) -> int:
        return len(self.sgl_ids)

    def sample(self, p: float, seed: int, threshold: int | None) -> tuple[np.ndarray, int]:
        """Keep each vertex with probability p; vertices of degree >= threshold always."""
        keep = make_rng(seed).random(self.n) < p
        heavy = 0
        if threshold is not None:
            forced = self.degree >= threshold
            heavy = int(forced.sum())
            keep |= forced
        return keep, heavy

    def measure(self, keep: np.ndarray) -> tuple[int, np.ndarray, np.ndarray]:
        """|S|, per-matching (edge0 inside, edge1 inside), per-single inside."""
        inside_m = keep[self.mat[:, :, 0]] & keep[self.mat[:, :, 1]]
        inside_s = keep[self.sgl[:, 0]] & keep[self.sgl[:, 1]]
        return int(keep.sum()), inside_m, inside_s

    def rainbow_edges(self, inside_m: np.ndarray, inside_s: np.ndarray) -> list[Edge]:
        """One edge per qualifying matching (the smaller if both) plus every contained single."""
        out: list[Edge] = []
        for k in np.flatnonzero(inside_m.any(axis=1)):
            j = 0 if inside_m[k, 0] else 1
            out.append(tuple(int(x) for x in self.mat[k, j]))
        out.extend(tuple(int(x) for x in self.sgl[k]) for k in np.flatnonzero(inside_s))
        return out


def lemma_thresholds(params: ParameterSet, n: int, n_matchings: int, n_singles: int) -> dict[str, float]:
    """Bounds the sampled trial is checked against: |S| <= s_max, X >= x_min, Y >= y_min."""
    p, eps = params.p, params.epsilon
    return {
        "s_max": n * p + n ** (2 / 3),
        "x_min": (1 - eps) * n_matchings * matching_rate(p),
        "y_min": (1 - eps) * n_singles * p**2,
    }


def sampled_trial(sampler: SubsetSampler, params: ParameterSet, seed: int):
    """One trial of the heavy-vertex sampler.  Returns (record, inside_m, inside_s)."""
    n = sampler.n
    keep, heavy = sampler.sample(params.p, seed, params.threshold_for(n))
    size_s, inside_m, inside_s = sampler.measure(keep)
    x = int(inside_m.any(axis=1).sum())
    y = int(inside_s.sum())
    rec = TrialRecord(seed=seed, size_s=size_s, heavy_count=heavy, x=x, y=y, r_s=x + y)
    th = lemma_thresholds(params, n, sampler.num_matchings, sampler.num_singles)
    if not size_s <= th["s_max"]:
        rec.reasons.append(f"|S|={size_s} > np+n^(2/3)={th['s_max']:.3f}")
    if not x >= th["x_min"]:
        rec.reasons.append(f"X={x} < {th['x_min']:.3f}")
    if not y >= th["y_min"]:
        rec.reasons.append(f"Y={y} < {th['y_min']:.3f}")
    if not x + y >= size_s + 2:
        rec.reasons.append(f"X+Y={x + y} < |S|+2={size_s + 2}")
    rec.accepted = not rec.reasons
    return rec, inside_m, inside_s


def simplified_trial(sampler: SubsetSampler, params: ParameterSet, seed: int):
    n = sampler.n
    keep, _ = sampler.sample(params.p, seed, None)
    size_s, inside_m, inside_s = sampler.measure(keep)
    x = int(inside_m.any(axis=1).sum())
    y = int(inside_s.sum())
    rec = TrialRecord(seed=seed, size_s=size_s, heavy_count=0, x=x, y=y, r_s=x + y)
    if not x + y - size_s >= params.c * n:
        rec.reasons.append(f"r_S-|S|={x + y - size_s} < cn={params.c * n:.3f}")
    if not x + y >= size_s + 2:
        rec.reasons.append(f"r_S={x + y} < |S|+2={size_s + 2}")
    rec.accepted = not rec.reasons
    return rec, inside_m, inside_s


def _check_counts(sampler: SubsetSampler, params: ParameterSet) -> None:
    n = sampler.n
    lo_m = (params.alpha - params.xi) * n
    lo_e = (1 - params.alpha - params.xi) * n
    if sampler.num_matchings < lo_m or sampler.num_singles < lo_e:
        raise HypothesisError(
            f"need >= {lo_m:.2f} matchings and >= {lo_e:.2f} singles, "
            f"got {sampler.num_matchings} and {sampler.num_singles}"
        )


def _run_sampling(g, params, seed, max_retries, trial_fn, check_counts):
    sampler = SubsetSampler(g)
    if check_counts:
        _check_counts(sampler, params)
    trials: list[TrialRecord] = []
    s = seed
    for _ in range(max_retries):
        rec, inside_m, inside_s = trial_fn(sampler, params, s)
        trials.append(rec)
        if rec.accepted:
            edges = sampler.rainbow_edges(inside_m, inside_s)
            cycle = find_short_cycle(edges, g.color_of)
            return _certify(g, cycle), trials
        s = splitmix64(s)
    raise RetriesExhausted(f"no accepted trial in {max_retries} retries", trials)


def find_matching_edge_sampled(
    g: ColoredGraph, params: ParameterSet, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> tuple[CycleResult, list[TrialRecord]]:
    """Rainbow cycle for an instance of size-2 matchings and single edges.

    Each trial puts every heavy vertex (degree >= the parameter threshold)
    into S and every other vertex independently with probability ``p``.  A
    trial is accepted when |S| <= np + n^(2/3),
    X >= (1-eps)|F_M|(2p^2-p^4), Y >= (1-eps)|F_E|p^2 and X+Y >= |S|+2.  The
    rainbow edge set inside S then has at least |S|+2 edges on at most |S|
    vertices, and its shortest cycle has length <= bs_bound(|S|, X+Y-|S|).

    Trial seeds are ``seed``, ``splitmix64(seed)``, ...; raises
    :class:`RetriesExhausted` (carrying the trial log) when no trial passes.
    """
    return _run_sampling(g, params, seed, max_retries, sampled_trial, True)


def find_simplified(
    g: ColoredGraph, params: ParameterSet, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> tuple[CycleResult, list[TrialRecord]]:
    """Like :func:`find_matching_edge_sampled` without heavy vertices.

    Accepts a trial when r_S - |S| >= c n and r_S >= |S| + 2.
    """
    return _run_sampling(g, params, seed, max_retries, simplified_trial, False)


# ---------------------------------------------------------------------------
# triangles + single edges


def triangle_selection(g: ColoredGraph) -> list[Edge]:
    """The two smallest edges of every triangle class plus every single edge."""
    out: list[Edge] = []
    for cls in g.classes:
        if cls.kind == TRIANGLE:
            out.extend(cls.edges[:2])
        elif cls.kind == SINGLE:
            out.append(cls.edges[0])
    return out


def selection_stats(edges: list[Edge]) -> tuple[int, int]:
    """(vertices spanned, edges - vertices spanned)."""
    span = len({x for e in edges for x in e})
    return span, len(edges) - span


def repair_swap(
    g: ColoredGraph, cycle: CycleResult, history: list[CycleResult] | None = None
) -> CycleResult:
    """Remove repeated triangle colors from ``cycle`` one splice at a time.

    Two cycle edges of one triangle class share a vertex ``v`` and are
    therefore consecutive, ``u-v-w``; replacing them by the third edge
    ``u-w`` shortens the cycle by one.  Repeats until the cycle is rainbow.
    Each intermediate cycle, starting with the input, is appended to
    ``history`` when given.
    """
    cur = is_rainbow_cycle(g, cycle.vertices)
    if history is not None:
        history.append(cur)
    while not cur.rainbow:
        colors = cur.colors
        L = cur.length
        seen: dict[int, int] = {}
        i = j = -1
        for pos, c in enumerate(colors):
            if c in seen:
                i, j = seen[c], pos
                break
            seen[c] = pos
        c = colors[i]
        cls = g.classes[c]
        if cls.kind != TRIANGLE:
            raise RepairError(f"color {c} repeats on the cycle but is {cls.kind}, not a triangle")
        if colors.count(c) != 2:
            raise RepairError(f"triangle color {c} appears {colors.count(c)} times on the cycle")
        vs = list(cur.vertices)
        if j == i + 1:
            mid = j
        elif i == 0 and j == L - 1:
            mid = 0
        else:
            raise RepairError(f"edges {i} and {j} of color {c} are not consecutive")
        u, w = vs[mid - 1], vs[(mid + 1) % L]
        if u == w or (min(u, w), max(u, w)) not in cls.edges:
            raise RepairError(f"splice edge {u}-{w} is not the third edge of triangle {c}")
        del vs[mid]
        nxt = is_rainbow_cycle(g, vs)
        assert nxt.length == L - 1
        cur = nxt
        if history is not None:
            history.append(cur)
    return cur


def find_triangle_edge(
    g: ColoredGraph, seed: int = 0, history: list[CycleResult] | None = None
) -> CycleResult:
    """Rainbow cycle for an instance of triangles and single edges.

    Keeps the two smallest edges of each triangle and every single, takes a
    shortest cycle of that selection, then :func:`repair_swap`.  Needs
    2 * triangles + singles >= n + 2 so the selection has excess >= 2.
    ``seed`` is accepted for interface symmetry; the selection is
    deterministic.
    """
    _require_kinds(g, {TRIANGLE, SINGLE}, "triangle/single finder")
    counts = g.kind_counts()
    selected = 2 * counts[TRIANGLE] + counts[SINGLE]
    if selected < g.n + 2:
        raise HypothesisError(
            f"2*triangles + singles = {selected} < n + 2 = {g.n + 2}: not enough excess edges"
        )
    cycle = find_short_cycle(triangle_selection(g), g.color_of)
    return _certify(g, repair_swap(g, cycle, history))


# ---------------------------------------------------------------------------
# matchings only


def appendix_trial(g: ColoredGraph, mat: np.ndarray, gamma: float, seed: int):
    """Choose one edge per matching uniformly.  Returns (record, chosen edges)."""
    n = g.n
    pick = make_rng(seed).integers(0, 2, size=len(mat))
    chosen = mat[np.arange(len(mat)), pick]
    touched = np.zeros(n, dtype=bool)
    touched[chosen.ravel()] = True
    span = int(touched.sum())
    rec = TrialRecord(seed=seed, size_s=span, x=len(mat), y=0, r_s=len(mat), size_z=n - span)
    z_min = n * 0.5 ** (4 * gamma)
    if not rec.size_z >= z_min:
        rec.reasons.append(f"|Z|={rec.size_z} < n 2^(-4 gamma)={z_min:.3f}")
    if not len(mat) >= span + 2:
        rec.reasons.append(f"|T|={len(mat)} < span+2={span + 2}")
    rec.accepted = not rec.reasons
    return rec, chosen


def check_appendix_hypotheses(g: ColoredGraph, gamma: float) -> None:
    _require_kinds(g, {MATCHING2}, "matching-only finder")
    if not appendix_gamma_ok(gamma):
        raise HypothesisError(f"gamma={gamma} fails 1 - 2^(-4 gamma) < gamma")
    if g.m < gamma * g.n:
        raise HypothesisError(f"{g.m} matchings < gamma n = {gamma * g.n:.2f}")
    if (gamma - gamma_prime(gamma)) * g.n < 2:
        raise HypothesisError(f"(gamma - gamma') n < 2 at n={g.n}: excess too small")


def find_matchings_appendix(
    g: ColoredGraph, gamma: float, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> tuple[CycleResult, list[TrialRecord]]:
    """Rainbow cycle for an instance of size-2 matchings only.

    Each trial picks one edge per matching uniformly at random (set T) and
    counts the vertices Z touched by no picked edge.  When
    |Z| >= n 2^(-4 gamma), T has |T| >= gamma n edges on at most
    (1 - 2^(-4 gamma)) n vertices and its shortest cycle, one edge per color,
    has length <= bs_bound(span, |T| - span).
    """
    check_appendix_hypotheses(g, gamma)
    mat = np.array([c.edges for c in g.classes], dtype=np.int64).reshape(-1, 2, 2)
    trials: list[TrialRecord] = []
    s = seed
    for _ in range(max_retries):
        rec, chosen = appendix_trial(g, mat, gamma, s)
        trials.append(rec)
        if rec.accepted:
            edges = [(int(u), int(v)) for u, v in chosen]
            return _certify(g, find_short_cycle(edges, g.color_of)), trials
        s = splitmix64(s)
    raise RetriesExhausted(f"no accepted trial in {max_retries} retries", trials)


# ---------------------------------------------------------------------------
# matchings + triangles


def _demote(g: ColoredGraph, kind: str) -> ColoredGraph:
    """Replace every class of ``kind`` by its smallest edge; ids are preserved."""
    return build_colored_graph(
        g.n, [cls.edges[:1] if cls.kind == kind else cls.edges for cls in g.classes]
    )


def find_mixed(
    g: ColoredGraph,
    seed: int = 0,
    alpha0: float = DEFAULT_DISPATCH_ALPHA,
    max_retries: int = DEFAULT_RETRIES,
    trials: list[TrialRecord] | None = None,
) -> CycleResult:
    """Rainbow cycle for n classes that are each a size-2 matching or a triangle.

    With at least ``alpha0 * n`` triangles, each matching is cut down to its
    smallest edge and the triangle/single route runs.  Otherwise each
    triangle is cut down to its smallest edge and the heavy-vertex sampler
    runs with parameters for the observed matching fraction and a heavy
    threshold from :func:`budget_heavy_threshold`.  Cutting a
    class to a sub-edge keeps any rainbow cycle rainbow in ``g``.
    Sampler trial records are appended to ``trials`` when given.
    """
    _require_kinds(g, {MATCHING2, TRIANGLE}, "matching/triangle finder")
    if g.m != g.n:
        raise HypothesisError(f"need exactly n={g.n} classes, got {g.m}")
    counts = g.kind_counts()
    if counts[TRIANGLE] >= alpha0 * g.n:
        cycle = find_triangle_edge(_demote(g, MATCHING2), seed)
    else:
        alpha = counts[MATCHING2] / g.n
        demoted = _demote(g, TRIANGLE)
        params = feasible_params(alpha, heavy_threshold=budget_heavy_threshold(demoted))
        if params is None:
            raise HypothesisError(f"no feasible sampling parameters at matching fraction {alpha}")
        cycle, log = find_matching_edge_sampled(demoted, params, seed, max_retries)
        if trials is not None:
            trials.extend(log)
    return _certify(g, cycle)


def dispatch_branch(g: ColoredGraph, alpha0: float = DEFAULT_DISPATCH_ALPHA) -> str:
    """Which route :func:`find_mixed` takes: ``"triangle"`` or ``"sampled"``."""
    return "triangle" if g.kind_counts()[TRIANGLE] >= alpha0 * g.n else "sampled"
