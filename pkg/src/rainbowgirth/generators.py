"""Instance generators: the two extremal constructions and random mixed instances."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ColoredGraph, Edge, build_colored_graph, canonical_edge
from .seeds import make_rng

RETRY_FACTOR = 1000


class GenerationError(RuntimeError):
    """Random generation gave up; ``kind`` is the class kind that could not be placed."""

    def __init__(self, message: str, kind: str | None = None):
        super().__init__(message)
        self.kind = kind


def gadget_vertex(i: int, j: int) -> int:
    """Dense label of the 1-based gadget vertex ``v_{i,j}``."""
    return 4 * (i - 1) + (j - 1)


def gen_half_matchings_gadget(n: int) -> ColoredGraph:
    """Chain of n/4 four-cycles with n/2 size-2 matchings and n/2 single edges.

    Each block ``i`` is the 4-cycle v_i1 v_i2 v_i3 v_i4 whose opposite edges
    v_i1v_i2, v_i3v_i4 form one matching and whose other two edges are
    singles.  Consecutive blocks are joined by the matching
    {v_i3 v_(i+1)2, v_i4 v_(i+1)1}, block indices taken cyclically.
    Its rainbow girth is n/2.
    """
    if n < 8 or n % 4:
        raise ValueError(f"gadget needs n >= 8 divisible by 4, got {n}")
    q = n // 4
    v = gadget_vertex
    classes: list[list[Edge]] = []
    for i in range(1, q + 1):
        nxt = i % q + 1
        classes.append([(v(i, 1), v(i, 2)), (v(i, 3), v(i, 4))])
        classes.append([(v(i, 2), v(i, 3))])
        classes.append([(v(i, 4), v(i, 1))])
        classes.append([(v(i, 3), v(nxt, 2)), (v(i, 4), v(nxt, 1))])
    return build_colored_graph(n, classes)


def gen_rainbow_ncycle(n: int) -> ColoredGraph:
    """The cycle 0-1-...-(n-1)-0 with every edge in its own color."""
    if n < 3:
        raise ValueError(f"an n-cycle needs n >= 3, got {n}")
    return build_colored_graph(n, [[(i, (i + 1) % n)] for i in range(n)])


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    matchings2: int = 0
    triangles: int = 0
    singles: int = 0
    seed: int = 0

    @property
    def num_classes(self) -> int:
        return self.matchings2 + self.triangles + self.singles

    @property
    def num_edges(self) -> int:
        return 2 * self.matchings2 + 3 * self.triangles + self.singles

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if min(self.matchings2, self.triangles, self.singles) < 0:
            raise ValueError("class counts must be nonnegative")
        if self.num_classes == 0:
            raise ValueError("at least one class must be requested")
        budget = self.n * (self.n - 1) // 2
        if self.num_edges > budget:
            raise ValueError(f"{self.num_edges} edges requested but K_{self.n} has {budget}")


def gen_random_mixed(spec: InstanceSpec) -> ColoredGraph:
    """Random instance with exactly the requested numbers of each class kind.

    Classes are placed by rejection sampling with a PCG64 stream seeded by
    ``spec.seed``: triangles first (uniform 3-sets whose edges are all
    unused), then size-2 matchings (uniform vertex-disjoint pairs of unused
    edges), then singles (uniform unused edges).  The output lists matchings,
    then triangles, then singles.  At most ``1000 * num_classes`` draws are
    made in total; :class:`GenerationError` reports the kind being placed
    when the cap is hit.
    """
    spec.validate()
    n = spec.n
    rng = make_rng(spec.seed)
    used: set[Edge] = set()
    budget = RETRY_FACTOR * spec.num_classes
    draws = 0

    def place(kind: str, count: int, width: int) -> list[list[Edge]]:
        nonlocal draws
        out = []
        while len(out) < count:
            if draws >= budget:
                raise GenerationError(
                    f"could not place {kind} class {len(out) + 1}/{count} "
                    f"after {draws} draws (retry cap {budget})",
                    kind,
                )
            draws += 1
            pts = [int(x) for x in rng.integers(0, n, size=width)]
            if len(set(pts)) != width:
                continue
            if width == 3:
                a, b, c = pts
                es = [canonical_edge(a, b), canonical_edge(b, c), canonical_edge(a, c)]
            else:
                es = [canonical_edge(pts[k], pts[k + 1]) for k in range(0, width, 2)]
            if any(e in used for e in es):
                continue
            used.update(es)
            out.append(sorted(es))
        return out

    if n < 3 and spec.triangles or n < 4 and spec.matchings2 or n < 2:
        raise GenerationError(f"n={n} is too small for the requested kinds")
    tri = place("triangle", spec.triangles, 3)
    mat = place("matching2", spec.matchings2, 4)
    sgl = place("single", spec.singles, 2)
    return build_colored_graph(n, mat + tri + sgl)


def counts_for_alpha(n: int, alpha: float, major: str, minor: str, seed: int = 0) -> InstanceSpec:
    """Split ``n`` classes into ``round(alpha * n)`` of ``major`` kind and the rest ``minor``."""
    k = int(round(alpha * n))
    counts = {"matchings2": 0, "triangles": 0, "singles": 0}
    counts[major] += k
    counts[minor] += n - k
    return InstanceSpec(n=n, seed=seed, **counts)


def matchings_for_gamma(n: int, gamma: float) -> int:
    """Smallest matching count >= gamma * n, ignoring float noise in the product."""
    return math.ceil(gamma * n - 1e-9)
