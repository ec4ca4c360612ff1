"""Edge-colored graph model, color-class classification and the instance format.

A :class:`ColoredGraph` is a vertex count plus an ordered sequence of pairwise
disjoint, nonempty color classes.  Vertices are the integers ``0..n-1`` and
every edge is stored as a sorted pair ``(u, v)`` with ``u < v``.  The class id
of a color class is its position in the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]

SINGLE = "single"
MATCHING2 = "matching2"
TRIANGLE = "triangle"
OTHER = "other"
KINDS = (SINGLE, MATCHING2, TRIANGLE, OTHER)

# edge count each kind must carry in the instance format (None: any)
KIND_EDGE_COUNT = {SINGLE: 1, MATCHING2: 2, TRIANGLE: 3, OTHER: None}


class InstanceError(ValueError):
    """Invalid colored-graph data.  ``class_id`` names the offending class."""

    def __init__(self, message: str, class_id: int | None = None):
        super().__init__(message)
        self.class_id = class_id


class ClassOverlapError(InstanceError):
    pass


class VertexRangeError(InstanceError):
    pass


class SelfLoopError(InstanceError):
    pass


class EmptyClassError(InstanceError):
    pass


class DuplicateEdgeError(InstanceError):
    pass


class ParseError(InstanceError):
    pass


class CycleError(ValueError):
    """A vertex sequence that is not a cycle of the graph."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def classify_class(edges: Iterable[Edge]) -> str:
    """Return the kind of a nonempty edge set.

    >>> classify_class([(0, 1)])
    'single'
    >>> classify_class([(0, 1), (0, 2)])
    'other'
    >>> classify_class([(0, 1), (1, 2), (2, 0)])
    'triangle'
    """
    es = {canonical_edge(u, v) for u, v in edges}
    verts = {x for e in es for x in e}
    if len(es) == 1:
        return SINGLE
    if len(es) == 2 and len(verts) == 4:
        return MATCHING2
    # three distinct edges on three vertices are exactly K3
    if len(es) == 3 and len(verts) == 3:
        return TRIANGLE
    return OTHER


@dataclass(frozen=True)
class ColorClass:
    id: int
    edges: tuple[Edge, ...]
    kind: str

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable edge-colored simple graph on vertices ``0..n-1``.

    Build instances with :func:`build_colored_graph`; the constructor assumes
    already-validated, canonical classes.
    """

    n: int
    classes: tuple[ColorClass, ...]
    color_of: Mapping[Edge, int] = field(init=False, repr=False, compare=False)
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        color_of = {}
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for cls in self.classes:
            for u, v in cls.edges:
                color_of[(u, v)] = cls.id
                nbrs[u].append(v)
                nbrs[v].append(u)
        object.__setattr__(self, "color_of", color_of)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.classes)

    @property
    def num_edges(self) -> int:
        return len(self.color_of)

    def edges(self) -> list[Edge]:
        return sorted(self.color_of)

    def color(self, u: int, v: int) -> int | None:
        return self.color_of.get(canonical_edge(u, v))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def kind_counts(self) -> dict[str, int]:
        counts = dict.fromkeys(KINDS, 0)
        for cls in self.classes:
            counts[cls.kind] += 1
        return counts

    def classes_of_kind(self, kind: str) -> list[ColorClass]:
        return [cls for cls in self.classes if cls.kind == kind]


def build_colored_graph(n: int, classes: Sequence[Iterable[Sequence[int]]]) -> ColoredGraph:
    """Validate ``classes`` and return the corresponding :class:`ColoredGraph`.

    Each class is an iterable of 2-element vertex pairs.  Raises a subclass of
    :class:`InstanceError` naming the offending class on overlap between
    classes, an out-of-range vertex, a self-loop, an empty class or an edge
    listed twice within one class.
    """
    if n < 1:
        raise InstanceError(f"vertex count must be >= 1, got {n}")
    owner: dict[Edge, int] = {}
    built = []
    for cid, raw in enumerate(classes):
        es: list[Edge] = []
        seen: set[Edge] = set()
        for pair in raw:
            u, v = (int(x) for x in pair)
            if u == v:
                raise SelfLoopError(f"class {cid}: self-loop at vertex {u}", cid)
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexRangeError(f"class {cid}: vertex {x} outside 0..{n - 1}", cid)
            e = canonical_edge(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"class {cid}: edge {e} listed twice", cid)
            if e in owner:
                raise ClassOverlapError(
                    f"class {cid}: edge {e} already belongs to class {owner[e]}", cid
                )
            seen.add(e)
            es.append(e)
        if not es:
            raise EmptyClassError(f"class {cid} is empty", cid)
        for e in es:
            owner[e] = cid
        es.sort()
        built.append(ColorClass(cid, tuple(es), classify_class(es)))
    return ColoredGraph(n, tuple(built))


@dataclass(frozen=True)
class CycleResult:
    """A cycle with its edge-color certificate.

    ``vertices`` is the cyclic vertex order; ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[i + 1]`` (cyclically) and carries its color.
    A color of ``None`` means the cycle was found in an uncolored edge set.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[Edge, int | None], ...]
    length: int
    rainbow: bool

    @property
    def colors(self) -> list[int | None]:
        return [c for _, c in self.edges]


def cycle_edges(vertices: Sequence[int]) -> list[Edge]:
    k = len(vertices)
    return [canonical_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def make_cycle(vertices: Sequence[int], color_of: Mapping[Edge, int] | None = None) -> CycleResult:
    """Wrap a vertex sequence already known to be a cycle."""
    vs = tuple(vertices)
    es = cycle_edges(vs)
    if color_of is None:
        pairs = tuple((e, None) for e in es)
        return CycleResult(vs, pairs, len(vs), False)
    pairs = tuple((e, color_of[e]) for e in es)
    return CycleResult(vs, pairs, len(vs), len({c for _, c in pairs}) == len(pairs))


def is_rainbow_cycle(g: ColoredGraph, vertices: Sequence[int]) -> CycleResult:
    """Resolve ``vertices`` to a colored cycle of ``g`` and flag whether it is rainbow.

    Raises :class:`CycleError` on fewer than 3 vertices, a repeated vertex,
    or a missing edge between cyclically consecutive vertices.
    """
    vs = tuple(int(v) for v in vertices)
    if len(vs) < 3:
        raise CycleError(f"a cycle needs at least 3 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise CycleError(f"repeated vertex in {vs}")
    for e in cycle_edges(vs):
        if e not in g.color_of:
            raise CycleError(f"missing edge {e[0]}-{e[1]}")
    return make_cycle(vs, g.color_of)


def canonical_rotation(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle to start at its minimum vertex, heading to the smaller neighbor."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


# ---------------------------------------------------------------------------
# instance text format


def serialize_instance(g: ColoredGraph) -> str:
    lines = [f"n {g.n} m {g.m}"]
    for cls in g.classes:
        flat = " ".join(f"{u} {v}" for u, v in cls.edges)
        lines.append(f"{cls.kind} {len(cls.edges)} {flat}")
    return "\n".join(lines) + "\n"


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> ColoredGraph:
    """Parse the line-based instance format.

    First non-comment line is ``n <int> m <int>``; then one line per class,
    ``<kind> <edgecount> u1 v1 u2 v2 ...``.  Lines starting with ``#`` and
    blank lines are ignored.  The declared kind must agree with the edge
    count and with the classified shape of the edges.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            rows.append((lineno, s.split()))
    if not rows:
        raise ParseError("empty instance")
    lineno, head = rows[0]
    if len(head) != 4 or head[0] != "n" or head[2] != "m":
        raise ParseError(f"line {lineno}: malformed header {' '.join(head)!r}")
    n, m = _ints([head[1], head[3]], lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares m={m} classes, found {len(rows) - 1}")
    classes = []
    kinds = []
    for cid, (lineno, toks) in enumerate(rows[1:]):
        kind = toks[0]
        if kind not in KINDS:
            raise ParseError(f"line {lineno}: unknown kind {kind!r}", cid)
        if len(toks) < 2:
            raise ParseError(f"line {lineno}: missing edge count", cid)
        count, *flat = _ints(toks[1:], lineno)
        expected = KIND_EDGE_COUNT[kind]
        if expected is not None and count != expected:
            raise ParseError(f"line {lineno}: kind {kind} needs {expected} edges, declared {count}", cid)
        if len(flat) != 2 * count:
            raise ParseError(
                f"line {lineno}: declared {count} edges but found {len(flat)} endpoints", cid
            )
        classes.append(list(zip(flat[::2], flat[1::2])))
        kinds.append(kind)
    g = build_colored_graph(n, classes)
    for cls, kind in zip(g.classes, kinds):
        if cls.kind != kind:
            raise ParseError(f"class {cls.id}: declared {kind} but edges form {cls.kind}", cls.id)
    return g
