"""Exhaustive agreement between the pairwise validator and the deque simulator.

Both verdicts are hereditary: deleting an edge from a pairwise-valid page
keeps it valid, and deleting an edge from a successful deque schedule
leaves every other edge at the same end of the deque, so the schedule
still works.  Hence the two agree on every page of a domain iff

  * they agree on every page with one or two edges, and
  * the simulator accepts every pairwise-valid page.

(If a page is pairwise invalid it contains a conflicting pair, which the
simulator rejects by the first point, and so rejects the page too.)  The
pairwise-valid pages are enumerated by a depth-first search that never
extends an invalid page, which makes the full domain of up to 8 vertices
and 5 edges tractable.  ``brute_force_agreement`` does the naive
enumeration and is used on a smaller domain to cross-check the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .core import EdgeType, LayoutKind, Page, TypedEdge, VertexOrder, conflicts, validate_page
from .dequesim import rique_pattern_check, simulate_spans

TYPES = tuple(EdgeType)


@dataclass
class Agreement:
    max_vertices: int
    max_edges: int
    removals_first: bool
    small_pages: int = 0          # 1- and 2-edge pages, all typings
    valid_pages: int = 0          # pairwise-valid pages handed to the simulator
    disagreements: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements


def _pair_ok(s: tuple[int, int], x: EdgeType, t: tuple[int, int], y: EdgeType) -> bool:
    return not conflicts(s[0], s[1], x, t[0], t[1], y)


def _compressed(spans) -> int | None:
    """Vertex count if the spans use exactly the vertices 0..k-1."""
    used = {v for s in spans for v in s}
    k = max(used) + 1
    return k if len(used) == k else None


def _all_spans(max_vertices: int) -> list[tuple[int, int]]:
    return list(combinations(range(max_vertices), 2))


def exhaustive_agreement(max_vertices: int = 8, max_edges: int = 5,
                         removals_first: bool = False, limit: int = 20) -> Agreement:
    res = Agreement(max_vertices, max_edges, removals_first)
    spans_all = _all_spans(max_vertices)

    def record(spans, types, v, s):
        if len(res.disagreements) < limit:
            res.disagreements.append((tuple(spans), tuple(t.value for t in types), v, s))

    # pages with one or two edges, every typing
    for m in (1, 2):
        for spans in combinations(spans_all, m):
            k = _compressed(spans)
            if k is None:
                continue
            for types in product(TYPES, repeat=m):
                v = m == 1 or _pair_ok(spans[0], types[0], spans[1], types[1])
                s = simulate_spans(k, spans, types, removals_first)
                res.small_pages += 1
                if v != s:
                    record(spans, types, v, s)

    # pairwise-valid pages, grown edge by edge in lexicographic span order
    spans: list[tuple[int, int]] = []
    types: list[EdgeType] = []

    def grow(start: int) -> None:
        if spans:
            k = _compressed(spans)
            if k is not None:
                res.valid_pages += 1
                if not simulate_spans(k, spans, types, removals_first):
                    record(spans, types, True, False)
        if len(spans) == max_edges:
            return
        for i in range(start, len(spans_all)):
            sp = spans_all[i]
            for t in TYPES:
                if all(_pair_ok(sp, t, q, y) for q, y in zip(spans, types)):
                    spans.append(sp)
                    types.append(t)
                    grow(i + 1)
                    spans.pop()
                    types.pop()

    grow(0)
    return res


def brute_force_agreement(max_vertices: int, max_edges: int,
                          removals_first: bool = False, limit: int = 20) -> tuple[int, list]:
    """Naive check over every page and typing; returns (pages checked, disagreements)."""
    spans_all = _all_spans(max_vertices)
    checked, bad = 0, []
    for m in range(1, max_edges + 1):
        for spans in combinations(spans_all, m):
            k = _compressed(spans)
            if k is None:
                continue
            for types in product(TYPES, repeat=m):
                v = all(_pair_ok(spans[i], types[i], spans[j], types[j])
                        for i, j in combinations(range(m), 2))
                s = simulate_spans(k, spans, types, removals_first)
                checked += 1
                if v != s and len(bad) < limit:
                    bad.append((spans, tuple(t.value for t in types), v, s))
    return checked, bad


def rique_typing(order: VertexOrder, edges) -> Page | None:
    """An HH/HT typing of ``edges`` that passes validate_page as a rique, or None.

    Backtracking over edges sorted by left endpoint; each choice is checked
    pairwise against the edges typed so far.
    """
    pos = order.position
    spans = sorted((min(pos[u], pos[v]), max(pos[u], pos[v]), u, v) for u, v in edges)
    chosen: list[EdgeType] = []
    allowed = LayoutKind.RIQUE.allowed_types

    def rec(i: int) -> bool:
        if i == len(spans):
            return True
        a, b = spans[i][:2]
        for t in allowed:
            if all(not conflicts(c, d, y, a, b, t) for (c, d, _, _), y in zip(spans, chosen)):
                chosen.append(t)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    page = Page(TypedEdge(u, v, t) for (_, _, u, v), t in zip(spans, chosen))
    if not validate_page(order, page, LayoutKind.RIQUE).valid:
        raise AssertionError("pairwise typing rejected by validate_page")
    return page


def rique_pattern_agreement(max_vertices: int = 7, max_edges: int = 6) -> tuple[int, list]:
    """Compare rique_pattern_check with rique_typing on every edge set of
    K_{max_vertices} (identity order) with at most ``max_edges`` edges."""
    order = VertexOrder.identity(max_vertices)
    spans_all = _all_spans(max_vertices)
    checked, bad = 0, []
    for m in range(1, max_edges + 1):
        for edges in combinations(spans_all, m):
            checked += 1
            if rique_pattern_check(order, edges) != (rique_typing(order, edges) is not None):
                bad.append(edges)
    return checked, bad
