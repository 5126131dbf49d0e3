"""Bullet-list representation of explicit constructions.

Each construction is written as pages of labelled bullets, one bullet per
family of edges, mirroring how such layouts are usually described.  Vertex
labels are 1-based inside the bullets and mapped to ids on assembly.
:func:`diagnose` traces every defect back to the page and bullet it came
from; it drives the corrections recorded in ``docs/CORRECTIONS.md``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..core import (
    EdgeType,
    Graph,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    VertexOrder,
    conflicts,
)


def span(lo: int, hi: int) -> range:
    """Inclusive integer range lo..hi; empty when hi < lo."""
    return range(lo, hi + 1)


def down(hi: int, lo: int) -> range:
    """Inclusive descending range hi, hi-1, ..., lo."""
    return range(hi, lo - 1, -1)


@dataclass
class Bullet:
    label: str
    pairs: list[tuple[int, int]]          # vertex ids, already mapped
    etype: EdgeType
    correction: str | None = None         # id in docs/CORRECTIONS.md when not verbatim

    def __post_init__(self) -> None:
        self.etype = EdgeType(self.etype)


@dataclass
class PageSpec:
    name: str
    bullets: list[Bullet] = field(default_factory=list)
    stated_size: int | None = None
    size_correction: str | None = None

    def add(self, label: str, pairs: Iterable[tuple[int, int]], etype,
            correction: str | None = None) -> None:
        self.bullets.append(Bullet(label, list(pairs), etype, correction))

    def edges(self) -> list[tuple[int, int]]:
        return [p for b in self.bullets for p in b.pairs]


@dataclass
class Construction:
    graph: Graph
    order: VertexOrder
    kind: LayoutKind
    pages: list[PageSpec]

    def layout(self) -> LinearLayout:
        pages = []
        for ps in self.pages:
            pages.append(Page(TypedEdge(u, v, b.etype) for b in ps.bullets for u, v in b.pairs))
        return LinearLayout(self.graph, self.order, pages, self.kind).canonical()


@dataclass
class Diagnosis:
    out_of_range: list[tuple[str, str, tuple[int, int]]] = field(default_factory=list)
    self_loops: list[tuple[str, str, tuple[int, int]]] = field(default_factory=list)
    non_edges: list[tuple[str, str, tuple[int, int]]] = field(default_factory=list)
    duplicates: list[tuple[tuple[int, int], list[tuple[str, str]]]] = field(default_factory=list)
    missing: list[tuple[int, int]] = field(default_factory=list)
    conflicts: list[tuple[str, tuple[str, tuple[int, int], str], tuple[str, tuple[int, int], str]]] = \
        field(default_factory=list)
    size_mismatch: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (self.out_of_range or self.self_loops or self.non_edges or self.duplicates
                    or self.missing or self.conflicts)

    def summary(self) -> str:
        return (f"range={len(self.out_of_range)} loops={len(self.self_loops)} "
                f"nonedges={len(self.non_edges)} dup={len(self.duplicates)} "
                f"missing={len(self.missing)} conflicts={len(self.conflicts)} "
                f"size_mismatch={len(self.size_mismatch)}")


def diagnose(c: Construction, label_of: Callable[[int], str] = str) -> Diagnosis:
    d = Diagnosis()
    n = c.graph.num_vertices
    gset = c.graph.edge_set()
    where: dict[tuple[int, int], list[tuple[str, str]]] = defaultdict(list)
    pos = c.order.position
    for ps in c.pages:
        placed = []
        for b in ps.bullets:
            for u, v in b.pairs:
                tag = (ps.name, b.label)
                if not (0 <= u < n and 0 <= v < n):
                    d.out_of_range.append((ps.name, b.label, (u, v)))
                    continue
                if u == v:
                    d.self_loops.append((ps.name, b.label, (u, v)))
                    continue
                key = (min(u, v), max(u, v))
                if key not in gset:
                    d.non_edges.append((ps.name, b.label, key))
                    continue
                where[key].append(tag)
                a, bb = sorted((pos[u], pos[v]))
                placed.append((a, bb, b.etype, b.label, key))
        if ps.stated_size is not None and ps.stated_size != len(ps.edges()):
            d.size_mismatch.append((ps.name, ps.stated_size, len(ps.edges())))
        placed.sort()
        for i, (a, b_, x, lx, ex) in enumerate(placed):
            for c_, d_, y, ly, ey in placed[i + 1:]:
                if (a, b_) == (c_, d_):
                    continue
                if conflicts(a, b_, x, c_, d_, y):
                    d.conflicts.append((ps.name, (lx, ex, x.value), (ly, ey, y.value)))
    for key, tags in where.items():
        if len(tags) > 1:
            d.duplicates.append((key, tags))
    d.missing = sorted(gset - where.keys())
    return d


@dataclass(frozen=True)
class BipartiteLabels:
    """Ids of K_{n,n}: a_i -> i-1 and b_j -> n+j-1 for 1-based i, j."""

    n: int

    def a(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"a_{i} out of range 1..{self.n}")
        return i - 1

    def b(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"b_{j} out of range 1..{self.n}")
        return self.n + j - 1

    def label(self, v: int) -> str:
        return f"a{v + 1}" if v < self.n else f"b{v - self.n + 1}"


class BipartiteBullets:
    """Small DSL: ``ab(I, J)`` is the product of 1-based a- and b-labels."""

    def __init__(self, n: int):
        self.n = n

    def ab(self, I, J) -> list[tuple[int, int]]:
        if isinstance(I, int):
            I = [I]
        if isinstance(J, int):
            J = [J]
        return [(i - 1, self.n + j - 1) for i in I for j in J]

    def stair_a(self, i_hi: int, i_lo: int, j_lo: int, j_hi: int) -> list[tuple[int, int]]:
        """{(a_i, b_j), (a_{i-1}, b_j)}: i from i_hi down while j climbs from j_lo."""
        out = []
        for i, j in zip(down(i_hi, i_lo), span(j_lo, j_hi)):
            out += self.ab(i, j) + self.ab(i - 1, j)
        return out

    def stair_b(self, i_hi: int, i_lo: int, j_lo: int, j_hi: int) -> list[tuple[int, int]]:
        """{(a_i, b_j), (a_i, b_{j+1})}: i from i_hi down while j climbs from j_lo."""
        out = []
        for i, j in zip(down(i_hi, i_lo), span(j_lo, j_hi)):
            out += self.ab(i, j) + self.ab(i, j + 1)
        return out


def pairs(fixed_first: Sequence[int] | int, seconds: Sequence[int] | int) -> list[tuple[int, int]]:
    """Cartesian helper on 1-based K_n labels: (v_i, v_j) for i in first, j in second."""
    if isinstance(fixed_first, int):
        fixed_first = [fixed_first]
    if isinstance(seconds, int):
        seconds = [seconds]
    return [(i - 1, j - 1) for i in fixed_first for j in seconds]
