"""Domain types for linear layouts and the pairwise validity check.

A layout places the vertices of a graph on a spine (a vertex order) and
splits the edges into pages.  Every edge on a page carries one of four
types that say at which end of the deque the edge is inserted and removed:

    HH  insert head, remove head   (arc above the spine)
    TT  insert tail, remove tail   (arc below the spine)
    HT  insert head, remove tail   (wraps: above, then below)
    TH  insert tail, remove head   (wraps: below, then above)

Validation is pairwise: a page is valid iff no two of its edges conflict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class LayoutError(ValueError):
    """Raised for malformed inputs (bad ranks, invalid graphs, bad files)."""


class UnsupportedSize(LayoutError):
    """Raised when a construction or search is asked for an unsupported size."""


class EdgeType(str, enum.Enum):
    HH = "hh"
    TT = "tt"
    HT = "ht"
    TH = "th"

    def __str__(self) -> str:
        return self.value


class LayoutKind(str, enum.Enum):
    STACK = "stack"
    QUEUE = "queue"
    RIQUE = "rique"
    DEQUE = "deque"

    @property
    def allowed_types(self) -> tuple[EdgeType, ...]:
        return _ALLOWED[self]

    def __str__(self) -> str:
        return self.value


_ALLOWED = {
    LayoutKind.STACK: (EdgeType.HH,),
    LayoutKind.QUEUE: (EdgeType.HT,),
    LayoutKind.RIQUE: (EdgeType.HH, EdgeType.HT),
    LayoutKind.DEQUE: (EdgeType.HH, EdgeType.HT, EdgeType.TH, EdgeType.TT),
}


def _canon_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..num_vertices-1``.

    Edges are stored canonically: smaller id first, list sorted.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 0:
            raise LayoutError(f"negative vertex count {num_vertices}")
        canon = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise LayoutError(f"self-loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise LayoutError(f"edge ({u}, {v}) out of range for n={num_vertices}")
            ce = _canon_edge(u, v)
            if ce in canon:
                raise LayoutError(f"duplicate edge {ce}")
            canon.add(ce)
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(n: int) -> Graph:
    """K_{n,n} with parts A = 0..n-1 and B = n..2n-1."""
    return Graph(2 * n, ((i, n + j) for i in range(n) for j in range(n)))


@dataclass(frozen=True)
class VertexOrder:
    sequence: tuple[int, ...]
    position: tuple[int, ...] = field(repr=False, compare=False)

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(int(v) for v in sequence)
        n = len(seq)
        pos = [-1] * n
        for rank, v in enumerate(seq):
            if not 0 <= v < n or pos[v] != -1:
                raise LayoutError(f"order is not a permutation of 0..{n - 1}: {list(seq)}")
            pos[v] = rank
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "position", tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.sequence)

    def rank(self, v: int) -> int:
        return self.position[v]


@dataclass(frozen=True)
class TypedEdge:
    u: int
    v: int
    etype: EdgeType

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise LayoutError(f"self-loop at vertex {self.u}")
        object.__setattr__(self, "etype", EdgeType(self.etype))

    @property
    def key(self) -> tuple[int, int]:
        return _canon_edge(self.u, self.v)

    def ranks(self, order: VertexOrder) -> tuple[int, int]:
        a, b = order.position[self.u], order.position[self.v]
        return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Page:
    edges: tuple[TypedEdge, ...] = ()

    def __init__(self, edges: Iterable[TypedEdge] = ()):
        object.__setattr__(self, "edges", tuple(edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


@dataclass(frozen=True)
class LinearLayout:
    graph: Graph
    order: VertexOrder
    pages: tuple[Page, ...]
    kind: LayoutKind

    def __init__(self, graph: Graph, order: VertexOrder, pages: Iterable[Page], kind: LayoutKind):
        if len(order) != graph.num_vertices:
            raise LayoutError(
                f"order has {len(order)} vertices, graph has {graph.num_vertices}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "pages", tuple(pages))
        object.__setattr__(self, "kind", LayoutKind(kind))

    @property
    def num_pages(self) -> int:
        return len(self.pages)

    def page_sizes(self) -> list[int]:
        return [len(p) for p in self.pages]

    def canonical(self) -> "LinearLayout":
        """Same layout with each page sorted by (left rank, right rank)."""
        pos = self.order.position

        def sort_key(te: TypedEdge):
            return te.ranks(self.order)

        pages = []
        for page in self.pages:
            edges = []
            for te in page:
                u, v = (te.u, te.v) if pos[te.u] < pos[te.v] else (te.v, te.u)
                edges.append(TypedEdge(u, v, te.etype))
            pages.append(Page(sorted(edges, key=sort_key)))
        return LinearLayout(self.graph, self.order, pages, self.kind)


@dataclass(frozen=True)
class Violation:
    """One defect found by validation.

    ``category`` is one of ``conflict``, ``kind``, ``coverage``, ``order``.
    """

    category: str
    page: int | None
    edges: tuple[TypedEdge, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        where = f"page {self.page}" if self.page is not None else "layout"
        es = ", ".join(f"({e.u},{e.v},{e.etype})" for e in self.edges)
        return f"{self.category} @ {where}: {es} {self.detail}".rstrip()


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def by_category(self, category: str) -> list[Violation]:
        return [v for v in self.violations if v.category == category]

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.violations + other.violations)


# ---------------------------------------------------------------------------
# conflict predicate
# ---------------------------------------------------------------------------

def _inside(x: int, a: int, b: int) -> bool:
    return a < x < b


def _alternate(a: int, b: int, c: int, d: int) -> bool:
    return a < c < b < d or c < a < d < b


def _nest(a: int, b: int, c: int, d: int) -> bool:
    return a < c < d < b or c < a < b < d


def _disjoint(a: int, b: int, c: int, d: int) -> bool:
    return b <= c or d <= a


def _oriented(a: int, b: int, x: EdgeType, c: int, d: int, y: EdgeType) -> bool | None:
    """Rule for the pair (x, y) in this orientation, or None if listed the other way."""
    H, T, HT, TH = EdgeType.HH, EdgeType.TT, EdgeType.HT, EdgeType.TH
    if x is H:
        if y is H:
            return _alternate(a, b, c, d)
        if y is T:
            return False
        if y is HT:
            return _inside(c, a, b)
        return _inside(d, a, b)
    if x is T:
        if y is T:
            return _alternate(a, b, c, d)
        if y is HT:
            return _inside(d, a, b)
        if y is TH:
            return _inside(c, a, b)
        return None
    if x is HT:
        if y is HT:
            return _nest(a, b, c, d)
        if y is TH:
            return not _disjoint(a, b, c, d)
        return None
    if x is TH and y is TH:
        return _nest(a, b, c, d)
    return None


def conflicts(a: int, b: int, x: EdgeType, c: int, d: int, y: EdgeType) -> bool:
    """True iff edges with rank intervals (a, b) and (c, d) and types x, y
    cannot share a page.

    Intervals must be sorted (``a < b``, ``c < d``) and distinct.  The two
    edges may share one endpoint.
    """
    if not (a < b and c < d):
        raise LayoutError(f"rank intervals must be sorted: ({a},{b}), ({c},{d})")
    if (a, b) == (c, d):
        raise LayoutError(f"both edges span ({a},{b})")
    x, y = EdgeType(x), EdgeType(y)
    r = _oriented(a, b, x, c, d, y)
    if r is None:
        r = _oriented(c, d, y, a, b, x)
    return r


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _page_violations(order: VertexOrder, page: Page, kind: LayoutKind,
                     index: int | None) -> list[Violation]:
    out: list[Violation] = []
    n = len(order)
    allowed = kind.allowed_types
    placed: list[tuple[int, int, TypedEdge]] = []
    seen: dict[tuple[int, int], TypedEdge] = {}
    for te in page:
        if not (0 <= te.u < n and 0 <= te.v < n):
            out.append(Violation("order", index, (te,), "endpoint outside the vertex order"))
            continue
        if te.etype not in allowed:
            out.append(Violation("kind", index, (te,), f"type {te.etype} not allowed in a {kind}"))
        if te.key in seen:
            out.append(Violation("coverage", index, (seen[te.key], te), "edge repeated on page"))
            continue
        seen[te.key] = te
        a, b = te.ranks(order)
        placed.append((a, b, te))
    placed.sort(key=lambda t: (t[0], t[1]))
    for i, (a, b, e) in enumerate(placed):
        for c, d, f in placed[i + 1:]:
            if c >= b:
                # sorted by left end: f and all later edges start at/after b;
                # only wrapping types can still conflict
                if e.etype in (EdgeType.HH, EdgeType.TT):
                    break
            if conflicts(a, b, e.etype, c, d, f.etype):
                out.append(Violation("conflict", index, (e, f)))
    return out


def validate_page(order: VertexOrder, page: Page, kind: LayoutKind = LayoutKind.DEQUE,
                  index: int | None = None) -> VerificationReport:
    return VerificationReport(tuple(_page_violations(order, page, LayoutKind(kind), index)))


def validate_layout(layout: LinearLayout) -> VerificationReport:
    out: list[Violation] = []
    where: dict[tuple[int, int], int] = {}
    graph_edges = layout.graph.edge_set()
    for i, page in enumerate(layout.pages):
        out.extend(_page_violations(layout.order, page, layout.kind, i))
        for te in page:
            k = te.key
            if k not in graph_edges:
                out.append(Violation("coverage", i, (te,), "edge not in graph"))
            elif k in where:
                out.append(Violation("coverage", i, (te,), f"edge also on page {where[k]}"))
            else:
                where[k] = i
    for k in sorted(graph_edges - where.keys()):
        out.append(Violation("coverage", None, (), f"edge {k} on no page"))
    return VerificationReport(tuple(out))


def induced_sublayout(layout: LinearLayout, keep: Iterable[int]) -> LinearLayout:
    """Restrict to ``keep``; ids are compacted in their original id order."""
    keep_set = set(keep)
    n = layout.graph.num_vertices
    if any(not 0 <= v < n for v in keep_set):
        raise LayoutError("keep contains vertices outside the layout")
    new_id = {v: i for i, v in enumerate(sorted(keep_set))}
    graph = Graph(len(new_id), ((new_id[u], new_id[v]) for u, v in layout.graph.edges
                                if u in keep_set and v in keep_set))
    order = VertexOrder(new_id[v] for v in layout.order.sequence if v in keep_set)
    pages = [Page(TypedEdge(new_id[e.u], new_id[e.v], e.etype) for e in page
                  if e.u in keep_set and e.v in keep_set) for page in layout.pages]
    return LinearLayout(graph, order, pages, layout.kind)
