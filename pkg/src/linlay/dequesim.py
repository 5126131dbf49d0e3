"""Operational oracles: deque simulation, cylindric drawings, brute force.

Nothing here calls :func:`linlay.core.conflicts`; these routines exist to
check it.  ``simulate_page`` runs the data structure, ``drawable_pair`` and
``drawable_page`` enumerate cylindric drawings, and ``exact_page_number``
searches all orders and page assignments of a tiny graph.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .core import (
    EdgeType,
    Graph,
    LayoutError,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    UnsupportedSize,
    VertexOrder,
    validate_layout,
)

SIM_MAX_VERTICES = 12
SIM_MAX_EDGES = 20
EXACT_MAX_VERTICES = 8

_INSERT_AT_HEAD = {EdgeType.HH: True, EdgeType.HT: True, EdgeType.TT: False, EdgeType.TH: False}
_REMOVE_AT_HEAD = {EdgeType.HH: True, EdgeType.HT: False, EdgeType.TT: False, EdgeType.TH: True}


# ---------------------------------------------------------------------------
# deque simulation
# ---------------------------------------------------------------------------

def simulate_page(order: VertexOrder, page: Page | Iterable[TypedEdge],
                  removals_first: bool = False) -> bool:
    """Can one deque process the page's edges along ``order``?

    At each vertex the removals of edges ending there and the insertions of
    edges starting there may be interleaved in any order (or, with
    ``removals_first``, all removals precede all insertions).  A removal
    succeeds only if the edge sits at the end its type prescribes.
    """
    edges = list(page)
    n = len(order)
    if n > SIM_MAX_VERTICES or len(edges) > SIM_MAX_EDGES:
        raise UnsupportedSize(
            f"simulation capped at {SIM_MAX_VERTICES} vertices / {SIM_MAX_EDGES} edges")
    for te in edges:
        if not (0 <= te.u < n and 0 <= te.v < n):
            raise LayoutError(f"edge ({te.u},{te.v}) outside order")
    spans = [te.ranks(order) for te in edges]
    return simulate_spans(n, spans, [te.etype for te in edges], removals_first)


def simulate_spans(n: int, spans: Sequence[tuple[int, int]], types: Sequence[EdgeType],
                   removals_first: bool = False) -> bool:
    """:func:`simulate_page` on rank intervals; no size cap, no validation."""
    starts: list[list[int]] = [[] for _ in range(n)]
    ends: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(spans):
        starts[a].append(i)
        ends[b].append(i)
    ins_head = [_INSERT_AT_HEAD[t] for t in types]
    rem_head = [_REMOVE_AT_HEAD[t] for t in types]

    states: set[tuple[int, ...]] = {()}
    for x in range(n):
        todo_r = frozenset(ends[x])
        todo_i = frozenset(starts[x])
        if not todo_r and not todo_i:
            continue
        reached: set[tuple[int, ...]] = set()
        seen: set = set()
        stack = [(dq, todo_r, todo_i) for dq in states]
        while stack:
            item = stack.pop()
            if item in seen:
                continue
            seen.add(item)
            dq, rem, ins = item
            if not rem and not ins:
                reached.add(dq)
                continue
            if rem and dq:
                h, t = dq[0], dq[-1]
                if h in rem and rem_head[h]:
                    stack.append((dq[1:], rem - {h}, ins))
                if t in rem and not rem_head[t]:
                    stack.append((dq[:-1], rem - {t}, ins))
            if removals_first and rem:
                continue
            for e in ins:
                stack.append(((e,) + dq if ins_head[e] else dq + (e,), rem, ins - {e}))
        if not reached:
            return False
        states = reached
    return True


# ---------------------------------------------------------------------------
# cylindric drawings
# ---------------------------------------------------------------------------

def _arcs(a: int, b: int, t: EdgeType, wrap: int) -> list[tuple[str, int, int]]:
    """Semicircles of one edge; ``wrap`` is a position right of every vertex."""
    if t is EdgeType.HH:
        return [("up", a, b)]
    if t is EdgeType.TT:
        return [("down", a, b)]
    if t is EdgeType.HT:
        return [("up", a, wrap), ("down", b, wrap)]
    return [("down", a, wrap), ("up", b, wrap)]


def _arcs_cross(p: tuple[str, int, int], q: tuple[str, int, int]) -> bool:
    if p[0] != q[0]:
        return False
    _, x1, y1 = p
    _, x2, y2 = q
    return x1 < x2 < y1 < y2 or x2 < x1 < y2 < y1


def _drawing_ok(items: Sequence[tuple[int, int, EdgeType]], wraps: Sequence[int]) -> bool:
    arcs = [_arcs(a, b, t, w) for (a, b, t), w in zip(items, wraps)]
    for i, j in combinations(range(len(arcs)), 2):
        if any(_arcs_cross(p, q) for p in arcs[i] for q in arcs[j]):
            return False
    return True


def drawable_pair(a: int, b: int, x: EdgeType, c: int, d: int, y: EdgeType) -> bool:
    """Exhaustive check: is there a crossing-free cylindric drawing of two edges?

    Both relative orders of the two wrap points are tried.
    """
    x, y = EdgeType(x), EdgeType(y)
    big = max(a, b, c, d) + 1
    items = [(a, b, x), (c, d, y)]
    return any(_drawing_ok(items, w) for w in ((big, big + 1), (big + 1, big)))


def drawable_page(order: VertexOrder, page: Page | Iterable[TypedEdge]) -> bool:
    """Exhaustive global check over every order of the wrap points."""
    items = [(*te.ranks(order), te.etype) for te in page]
    wrapping = [i for i, it in enumerate(items) if it[2] in (EdgeType.HT, EdgeType.TH)]
    if len(wrapping) > 8:
        raise UnsupportedSize("drawing enumeration capped at 8 wrapping edges")
    big = len(order) + 1
    for perm in permutations(range(len(wrapping))):
        wraps = [0] * len(items)
        for slot, i in zip(perm, wrapping):
            wraps[i] = big + slot
        if _drawing_ok(items, wraps):
            return True
    return False


# ---------------------------------------------------------------------------
# rique forbidden pattern
# ---------------------------------------------------------------------------

def rique_pattern_check(order: VertexOrder, edges: Iterable[Sequence[int]]) -> bool:
    """True iff no three edges (a,a'), (b,b'), (c,c') with
    a < b < c < b' < a' and b' < c' (ranks) exist, i.e. the edges fit in one
    rique under ``order``.  a' = c' is allowed.
    """
    pos = order.position
    spans = []
    for e in edges:
        x, y = pos[e[0]], pos[e[1]]
        spans.append((x, y) if x < y else (y, x))
    for (b, b2) in spans:
        # a: starts before b, ends after b2; c: starts strictly between b and b2, ends after b2
        has_a = any(a < b and a2 > b2 for a, a2 in spans)
        if not has_a:
            continue
        if any(b < c < b2 and c2 > b2 for c, c2 in spans):
            return False
    return True


# ---------------------------------------------------------------------------
# exhaustive page numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_verdict(a: int, b: int, x: EdgeType, c: int, d: int, y: EdgeType) -> bool:
    return drawable_pair(a, b, x, c, d, y)


def _assign(spans, types, p: int) -> list[tuple[int, EdgeType]] | None:
    """Backtracking page/type assignment for a fixed order, or None."""
    m = len(spans)
    idx = sorted(range(m), key=lambda i: (spans[i][0], -spans[i][1]))
    choice: list[tuple[int, EdgeType] | None] = [None] * m
    placed: list[list[int]] = [[] for _ in range(p)]

    def ok(i: int, page: int, t: EdgeType) -> bool:
        a, b = spans[i]
        for j in placed[page]:
            c, d = spans[j]
            if not _pair_verdict(a, b, t, c, d, choice[j][1]):
                return False
        return True

    def rec(k: int, used: int) -> bool:
        if k == m:
            return True
        i = idx[k]
        for page in range(min(used + 1, p)):
            for t in types:
                if ok(i, page, t):
                    choice[i] = (page, t)
                    placed[page].append(i)
                    if rec(k + 1, max(used, page + 1)):
                        return True
                    placed[page].pop()
                    choice[i] = None
        return False

    return list(choice) if rec(0, 0) else None


def _candidate_orders(graph: Graph, kind: LayoutKind):
    """Vertex orders up to relabelling (identical ordered graphs) and,
    for reversal-invariant kinds, up to reversal."""
    n = graph.num_vertices
    seen: set[frozenset[tuple[int, int]]] = set()
    reversible = kind is not LayoutKind.RIQUE
    for perm in permutations(range(n)):
        pos = [0] * n
        for r, v in enumerate(perm):
            pos[v] = r
        spans = frozenset(tuple(sorted((pos[u], pos[v]))) for u, v in graph.edges)
        if spans in seen:
            continue
        seen.add(spans)
        if reversible:
            seen.add(frozenset((n - 1 - b, n - 1 - a) for a, b in spans))
        yield VertexOrder(perm)


def exact_page_number(graph: Graph, kind: LayoutKind, max_pages: int
                      ) -> tuple[int | None, LinearLayout | None]:
    """Smallest p <= max_pages admitting a layout of ``kind``; (None, None) if none.

    Exhaustive over vertex orders (deduplicated by ordered-graph shape) and
    page/type assignments.  Pair compatibility comes from ``drawable_pair``.
    """
    kind = LayoutKind(kind)
    if graph.num_vertices > EXACT_MAX_VERTICES:
        raise UnsupportedSize(f"exact search capped at {EXACT_MAX_VERTICES} vertices")
    if graph.num_edges == 0:
        return 0, LinearLayout(graph, VertexOrder.identity(graph.num_vertices), [], kind)
    types = kind.allowed_types
    orders = list(_candidate_orders(graph, kind))
    for p in range(1, max_pages + 1):
        for order in orders:
            spans = [tuple(sorted((order.position[u], order.position[v]))) for u, v in graph.edges]
            sol = _assign(spans, types, p)
            if sol is None:
                continue
            pages = [[] for _ in range(p)]
            for (u, v), (page, t) in zip(graph.edges, sol):
                pages[page].append(TypedEdge(u, v, t))
            layout = LinearLayout(graph, order, [Page(es) for es in pages], kind)
            report = validate_layout(layout)
            if not report.valid:
                raise AssertionError(f"search produced an invalid layout: {report.violations[:3]}")
            return p, layout
    return None, None
