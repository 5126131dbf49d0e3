"""Rique layouts of K_{n,n} with floor((n-1)/2) - 1 pages.

Spine order interleaves the first halves of both parts:
a_1, b_1, a_2, b_2, ..., a_h, b_h, b_{h+1}, ..., b_n, a_{h+1}, ..., a_n
with h = floor(n/2) for odd n and h = n/2 - 1 for even n.  Bullets carrying
a correction id deviate from the original lists; see docs/CORRECTIONS.md.
"""

from __future__ import annotations

from ..core import (
    EdgeType,
    LayoutKind,
    LinearLayout,
    UnsupportedSize,
    VertexOrder,
    complete_bipartite_graph,
)
from .base import BipartiteBullets, Construction, PageSpec, span

HH, HT = EdgeType.HH, EdgeType.HT

RIQUE_KNN_MIN = {1: 27, 0: 28}


def knn_interleaved_order(n: int) -> VertexOrder:
    h = n // 2 if n % 2 else n // 2 - 1
    seq = []
    for i in range(h):
        seq += [i, n + i]
    seq += [n + j for j in range(h, n)]
    seq += list(range(h, n))
    return VertexOrder(seq)


def _odd(n: int) -> list[PageSpec]:
    d = BipartiteBullets(n)
    ab = d.ab
    H = n // 2
    C = H + 1
    pages = []

    pg = PageSpec("1", stated_size=3 * n)
    pg.add("dark red", ab(1, span(1, n)), HT)
    pg.add("red", ab(span(C, n), 1), HT)
    pg.add("gray", ab(H, span(2, H)), HH)
    pg.add("blue", ab(span(C, n), 2), HH)
    pg.add("light blue", ab(C, span(C, n)), HH)
    pages.append(pg)

    pg = PageSpec("2", stated_size=(5 * n - 1) // 2 + 1, size_correction="RKNN1-GT")
    pg.add("dark red", ab(span(2, H), 1), HT)
    pg.add("yellow", ab(2, H), HT)
    pg.add("light red", ab(2, span(C, n)), HT)
    pg.add("red", ab(3, n), HT)
    pg.add("dark blue", ab(span(C, n), 3), HT)
    pg.add("light blue", ab(n - 3, span(H - 2, C + 1)), HH)
    pg.add("blue", ab(span(C + 1, n - 4), C + 1), HH)
    pg.add("gray", ab(C + 1, span(C + 2, n)), HH)
    pg.add("moved gray", ab(H - 2, 3), HH, "RKNN1-GT")
    pages.append(pg)

    for p in (3, 4, 5):
        pg = PageSpec(str(p), stated_size=(5 * n - 1) // 2 + 1)
        pg.add("dark red", ab(p - 1, span(2, H - p + 2)), HT)
        pg.add("red", ab(p, span(H - p + 2, n - p + 2)), HT)
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT)
        pg.add("dark blue", ab(span(C, n), p + 1), HT)
        pg.add("gray", ab(n + p - 5, span(H - 2, C + p - 1)), HH)
        pg.add("blue", ab(span(C + p - 1, n + p - 6), C + p - 1), HH)
        pg.add("light blue", ab(C + p - 1, span(C + p, n)), HH)
        pages.append(pg)

    pg = PageSpec("6", stated_size=(5 * n - 1) // 2 - 8)
    pg.add("dark red", ab(5, span(2, H - 4)), HT)
    pg.add("red", ab(6, span(H - 4, n - 4)), HT)
    pg.add("light red", ab(7, span(n - 4, n)), HT)
    pg.add("dark blue", ab(span(C, n), 7), HT)
    pg.add("blue", ab(span(C + 5, n), C + 5), HH)
    pg.add("light red (hh)", ab(C + 5, span(C + 6, n)), HH)
    pages.append(pg)

    pg = PageSpec("7", stated_size=(3 * n + 1) // 2 + 4)
    pg.add("dark red", ab(6, span(2, H - 5)), HT)
    pg.add("red", ab(7, span(H - 5, n - 5)), HT)
    pg.add("light red", ab(8, span(n - 5, n)), HT)
    pg.add("blue", ab(span(C, n), 8), HT)
    pg.add("light blue", ab(H, span(C, C + 2)), HH)
    pages.append(pg)

    for p in span(8, H - 6):
        pg = PageSpec(str(p), stated_size=(5 * n + 3) // 2 - 2 * p + 4)
        pg.add("dark red", ab(p - 1, span(2, H - p + 2)), HT)
        pg.add("red", ab(p, span(H - p + 2, n - p + 2)), HT)
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT)
        pg.add("dark blue", ab(span(C, n), p + 1), HT)
        pg.add("blue", ab(span(C + p - 2, n), C + p - 2), HH)
        pg.add("light blue", ab(C + p - 2, span(C + p - 1, n)), HH)
        pages.append(pg)

    pg = PageSpec(str(H - 5), stated_size=2 * n - 3)
    p = H - 5
    pg.add("dark red", ab(p - 1, span(2, H - p + 2)), HT, "RKNN1-ST")
    pg.add("red", ab(p, span(H - p + 2, n - p + 2)), HT, "RKNN1-ST")
    pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT, "RKNN1-ST")
    pg.add("light blue", ab(span(C, n), H - 4), HT)
    pg.add("blue", ab(span(C + 5, n), H - 3), HH)
    pages.append(pg)

    for kk in (4, 3, 2):
        p = H - kk
        pg = PageSpec(str(p), stated_size=(3 * n - 1) // 2 - 2 * kk + 20)
        pg.add("dark red", ab(p - 1, span(2, H - p + 2)), HT, "RKNN1-ST")
        pg.add("red", ab(p, span(H - p + 2, n - p + 2)), HT, "RKNN1-ST")
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT, "RKNN1-ST")
        pg.add("dark pink", ab(span(C, C + kk), p + 1), HT)
        pg.add("light pink", ab(span(C + kk, n - 8 + kk), p + 2), HT)
        pg.add("pink", ab(n - 8 + kk, span(p + 3, C)), HT, "RKNN1-PK")
        pg.add("dark blue", ab(span(n + kk - 8, n), n + 2 * kk - 9), HT)
        pg.add("blue", ab(span(n + kk - 8, n), n + 2 * kk - 8), HH)
        pg.add("gray", ab(n + kk - 8, span(n + 2 * kk - 7, n)), HH)
        pages.append(pg)

    pg = PageSpec(str(H - 1), stated_size=(3 * n + 1) // 2 + 18, size_correction="RKNN1-GT")
    pg.add("dark red", ab(H - 1, span(2, C + 3)), HT)
    pg.add("red", ab(H, span(C + 3, n)), HT)
    pg.add("light red", ab([C, C + 1], H), HT)
    pg.add("dark pink", ab(span(C + 1, n - 7), C), HT)
    pg.add("pink", ab(span(n - 7, n), n - 7), HT, "RKNN1-L")
    pg.add("dark blue", ab(span(n - 7, n), n - 6), HH, "RKNN1-L")
    pg.add("blue", ab(n - 7, span(n - 5, n)), HH, "RKNN1-L")
    pg.add("gray", ab(H - 2, 2), HT, "RKNN1-GT")
    pages.append(pg)
    return pages


def _even(n: int) -> list[PageSpec]:
    d = BipartiteBullets(n)
    ab = d.ab
    m = n // 2
    pages = []

    pg = PageSpec("1", stated_size=3 * n + 1)
    pg.add("dark red", ab(1, span(1, n)), HT)
    pg.add("red", ab(span(m, n), 1), HT)
    pg.add("light blue", ab(m - 1, span(2, m - 1)), HH)
    pg.add("light red", ab(span(m, n), 2), HH)
    pg.add("blue", ab(m, span(m, n)), HH)
    pages.append(pg)

    pg = PageSpec("2", stated_size=5 * m + 2, size_correction="RKNN0-GT")
    pg.add("dark red", ab(span(2, m - 1), 1), HT)
    pg.add("orange", ab(2, m - 1), HT)
    pg.add("red", ab(2, span(m, n)), HT)
    pg.add("light red", ab(3, n), HT)
    pg.add("light blue", ab(span(m, n), 3), HT)
    pg.add("blue", ab(n - 3, span(m - 3, m + 1)), HH)
    pg.add("dark blue", ab(span(m + 1, n - 4), m + 1), HH)
    pg.add("gray", ab(m + 1, span(m + 2, n)), HH)
    pg.add("moved blue", ab(m - 3, 3), HH, "RKNN0-GT")
    pages.append(pg)

    for p in (3, 4, 5):
        pg = PageSpec(str(p), stated_size=5 * m + 2)
        pg.add("dark red", ab(p - 1, span(2, m - p + 1)), HT)
        pg.add("red", ab(p, span(m - p + 1, n - p + 2)), HT)
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT)
        pg.add("dark blue", ab(span(m, n), p + 1), HT)
        pg.add("light blue", ab(n + p - 5, span(m - 3, m + p - 1)), HH, "RKNN0-R")
        pg.add("blue", ab(span(m + p - 1, n + p - 6), m + p - 1), HH)
        pg.add("gray", ab(m + p - 1, span(m + p, n)), HH)
        pages.append(pg)

    pg = PageSpec("6", stated_size=5 * m - 7)
    pg.add("dark red", ab(5, span(2, m - 5)), HT)
    pg.add("red", ab(6, span(m - 5, n - 4)), HT)
    pg.add("light red", ab(7, span(n - 4, n)), HT)
    pg.add("dark blue", ab(span(m, n), 7), HT)
    pg.add("blue", ab(span(m + 5, n), m + 5), HH)
    pg.add("gray", ab(m + 5, span(m + 6, n)), HH)
    pages.append(pg)

    pg = PageSpec("7", stated_size=3 * m + 23)
    pg.add("dark red", ab(6, span(2, m - 6)), HT)
    pg.add("red", ab(7, span(m - 6, n - 5)), HT)
    pg.add("light red", ab(8, span(n - 5, n)), HT)
    pg.add("dark blue", ab(span(m, n), 8), HT)
    pg.add("gray", ab(m - 1, span(m, m + 3)), HH)
    pg.add("blue", ab(n - 8, span(n - 8, n)), HH)
    pg.add("light blue", ab(span(n - 7, n), n - 8), HH)
    pages.append(pg)

    for p in span(8, m - 7):
        pg = PageSpec(str(p), stated_size=5 * m - 2 * p + 7)
        pg.add("dark red", ab(p - 1, span(2, m - p + 1)), HT)
        pg.add("red", ab(p, span(m - p + 1, n - p + 2)), HT)
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT)
        pg.add("dark blue", ab(span(m, n), p + 1), HT)
        pg.add("blue", ab(span(m + p - 2, n), m + p - 2), HH)
        pg.add("light blue", ab(m + p - 2, span(m + p - 1, n)), HH)
        pages.append(pg)

    pg = PageSpec(str(m - 6), stated_size=2 * n - 2)
    p = m - 6
    pg.add("dark red", ab(p - 1, span(2, m - p + 1)), HT, "RKNN0-ST")
    pg.add("red", ab(p, span(m - p + 1, n - p + 2)), HT, "RKNN0-ST")
    pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT, "RKNN0-ST")
    pg.add("blue", ab(span(m, n), m - 5), HT)
    pg.add("dark blue", ab(span(m + 5, n), m - 4), HH)
    pages.append(pg)

    for kk in (5, 4, 3):
        p = m - kk
        pg = PageSpec(str(p), stated_size=3 * m - 2 * kk + 22)
        pg.add("dark red", ab(p - 1, span(2, m - p + 1)), HT)
        pg.add("red", ab(p, span(m - p + 1, n - p + 2)), HT)
        pg.add("light red", ab(p + 1, span(n - p + 2, n)), HT)
        pg.add("pink", ab(span(m, m + kk - 1), p + 1), HT)
        pg.add("light pink", ab(span(m + kk - 1, n - 9 + kk), p + 2), HT, "RKNN0-L")
        pg.add("blue", ab(n - 9 + kk, span(p + 3, m)), HT, "RKNN0-PK")
        pg.add("light blue", ab(span(n - 9 + kk, n), n + 2 * kk - 11), HT, "RKNN0-L")
        pg.add("dark blue", ab(span(n - 9 + kk, n), n + 2 * kk - 10), HH, "RKNN0-L")
        pg.add("gray", ab(n - 9 + kk, span(n + 2 * kk - 9, n)), HH, "RKNN0-L")
        pages.append(pg)

    pg = PageSpec(str(m - 2), stated_size=3 * m + 19, size_correction="RKNN0-GT")
    pg.add("dark red", ab(m - 2, span(2, m + 4)), HT)
    pg.add("red", ab(m - 1, span(m + 4, n)), HT)
    pg.add("light red", ab([m, m + 1], m - 1), HT)
    pg.add("pink", ab(span(m + 1, n - 7), m), HT)
    pg.add("dark blue", ab(span(n - 7, n), n - 7), HT, "RKNN0-L")
    pg.add("light blue", ab(span(n - 7, n), n - 6), HH, "RKNN0-L")
    pg.add("gray", ab(n - 7, span(n - 5, n)), HH, "RKNN0-L")
    pg.add("blue", ab(m - 3, 2), HT, "RKNN0-GT")
    pages.append(pg)
    return pages


def rique_knn_construction(n: int) -> Construction:
    par = n % 2
    if n < RIQUE_KNN_MIN[par]:
        raise UnsupportedSize(
            f"rique construction for K_n,n with {'odd' if par else 'even'} n needs "
            f"n >= {RIQUE_KNN_MIN[par]}, got {n}; use the SAT search for smaller n")
    return Construction(complete_bipartite_graph(n), knn_interleaved_order(n), LayoutKind.RIQUE,
                        _odd(n) if par else _even(n))


def rique_layout_Knn(n: int) -> LinearLayout:
    """(floor((n-1)/2) - 1)-rique layout of K_{n,n}."""
    return rique_knn_construction(n).layout()
