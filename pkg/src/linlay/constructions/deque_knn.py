"""Deque layout of K_{n,n} with n/3 pages (n divisible by 3).

Spine order: a_1..a_{n/3}, b_1..b_{2n/3}, a_{n/3+1}..a_n, b_{2n/3+1}..b_n.
Ids follow BipartiteLabels (a_i -> i-1, b_j -> n+j-1).  Edge types are
relative to the spine: the left endpoint's operation comes first.

The two-edge "staircase" bullets {(a_i, b_j), (a_{i-1}, b_j)} advance i
and j together, one step per pair.  Bullets carrying a correction id
deviate from the original lists; see docs/CORRECTIONS.md.
"""

from __future__ import annotations

import logging

from ..core import (
    EdgeType,
    LayoutKind,
    LinearLayout,
    UnsupportedSize,
    VertexOrder,
    complete_bipartite_graph,
    induced_sublayout,
)
from .base import BipartiteBullets, Construction, PageSpec, down, span

HH, TT, HT, TH = EdgeType.HH, EdgeType.TT, EdgeType.HT, EdgeType.TH
log = logging.getLogger(__name__)

# smallest n (divisible by 3) for which every page is well formed; found by
# sweeping n upward with the validator (see tests)
DEQUE_KNN_MIN = 36


def knn_block_order(n: int) -> VertexOrder:
    k = n // 3
    a = lambda i: i - 1
    b = lambda j: n + j - 1
    seq = ([a(i) for i in span(1, k)] + [b(j) for j in span(1, 2 * k)]
           + [a(i) for i in span(k + 1, n)] + [b(j) for j in span(2 * k + 1, n)])
    return VertexOrder(seq)


def _pages(n: int) -> list[PageSpec]:
    k = n // 3
    d = BipartiteBullets(n)
    ab, stair_a, stair_b = d.ab, d.stair_a, d.stair_b
    pages = []

    pg = PageSpec("1", stated_size=2 * n + 16)
    pg.add("dark red", ab(1, span(2 * k + 4, n)), HH)
    pg.add("red", ab(1, 6), HH)
    pg.add("light red", ab(2, span(1, 6)), HH)
    pg.add("orange", ab(k + 8, [8, 9, 10]), HH)
    pg.add("light orange", ab(span(k + 1, k + 7), 10), HH)
    pg.add("green", ab(span(k + 8, n), 2 * k + 4), HH)
    pg.add("dark blue", ab(2, span(n - 2, n)), TT)
    pg.add("blue", ab(span(k - 2, k), 2 * k + 5), TT)
    pg.add("light blue", ab(k, [2 * k + 1, 2 * k + 2]), TT)
    pg.add("pink", ab(n, [1, 2]) + ab(n - 1, 2), TT)
    pg.add("light pink", stair_a(n - 1, 2 * k + 3, 4, k), TT)
    pg.add("dark orange", ab(2 * k + 1, k), TT, "DKNN-P1")
    pg.add("dark green", ab(2 * k + 1, span(k + 1, k + 3)), TT)
    pg.add("green (tt)", ab(span(k + 1, 2 * k), k + 3), TT)
    pages.append(pg)

    pg = PageSpec("2", stated_size=8 * k + 5, size_correction="DKNN-S")
    pg.add("black", ab(1, 2 * k + 3), HT)
    pg.add("dark red", ab(2, span(2 * k + 3, n - 3)), HT)
    pg.add("red", ab(3, span(n - 3, n - 1)), HT)
    pg.add("dark orange", ab(span(3, k), n), HT)
    pg.add("light orange", ab([n - 3, n - 4], 1), HH)
    pg.add("dark orange (hh)", ab([n - 4, n - 5], 2), HH)
    pg.add("dark pink", stair_a(n - 5, 2 * k + 1, 4, k - 2), HH)
    pg.add("light pink", ab(2 * k - 1, k - 2), HH, "DKNN-P2")
    pg.add("light gray", ab(2 * k - 1, [k - 1, k]), HH)
    pg.add("gray", ab(span(k + 1, 2 * k - 1), k + 1), HH)
    pg.add("pink", ab(span(n - 3, n), n), HH)
    pg.add("light green", ab(1, span(1, 5)), TT)
    pg.add("green", stair_b(n - 1, 2 * k + 4, 5, k), TT)
    pg.add("dark blue", ab([2 * k + 2, 2 * k + 3], k + 1), TT)
    pg.add("blue", ab(2 * k + 2, [k + 2, k + 3]), TT)
    pg.add("light blue", ab(span(k + 1, 2 * k + 2), k + 4), TT)
    pages.append(pg)

    for p in (3, 4):
        pg = PageSpec(str(p), stated_size=8 * k + p + 5, size_correction="DKNN-S")
        if p == 3:
            pg.add("green", ab(span(1, p - 1), 2 * p + 1), TT)
            pg.add("dark green", ab(p, span(1, 2 * p + 1)), TT)
        else:
            # column 2p+1 belongs to the next page's green
            pg.add("green", ab(span(1, p - 1), 2 * p), TT, "DKNN-G4")
            pg.add("dark green", ab(p, span(1, 2 * p)), TT, "DKNN-G4")
        pg.add("dark red", ab(span(1, p - 1), 2 * k + 5 - p), HT)
        pg.add("red", ab(p, span(2 * k + 5 - p, n - 1 - p)), HT)
        pg.add("pink", ab(p + 1, span(n - 1 - p, n + 1 - p)), HT)
        pg.add("light pink", ab(span(p + 1, k), n + 2 - p), HT)
        pg.add("purple", ab([n - 2 * p + 1, n - 2 * p], 1), HH)
        pg.add("orange", ab([n - 2 * p, n - 2 * p - 1], 2), HH)
        pg.add("yellow", stair_a(n - 2 * p - 1, 2 * k + 4 - p, 4, k - p - 1), HH)
        pg.add("dark pink", ab(down(2 * k - p + 3, 2 * k - p + 1), k - p), HH)
        pg.add("light yellow", ab(2 * k - p + 1, [k - p + 1, k - p + 2]), HH, "DKNN-LY")
        pg.add("dark yellow", ab(span(k + 1, 2 * k - p + 1), k - p + 3), HH)
        pg.add("light green", stair_b(n - 1, 2 * k + p + 2, 2 * p + 1, k + p - 2), TT, "DKNN-LG")
        pg.add("blue", ab([2 * k + p, 2 * k + p + 1], k + p - 1), TT)
        pg.add("dark blue", ab(2 * k + p, [k + p, k + p + 1]), TT)
        pg.add("light blue", ab(span(k + 1, 2 * k + p), k + p + 2), TT)
        pg.add("light gray", ab(n + 2 - 2 * p, span(n + 2 - p, n)), HH)
        pg.add("gray", ab(span(n + 3 - 2 * p, n), n + 2 - p), HH)
        pg.add("black", ab(n + 1 - 2 * p, span(n + 2 - p, n)), HT)
        pages.append(pg)

    for p in span(5, k - 4):
        late = p >= k - 7
        pg = PageSpec(str(p), stated_size=(8 * k - 2 * p - 1) if late else (8 * k + 2 * p + 18),
                      size_correction="DKNN-S")
        pg.add("purple", ab([n - 2 * p + 1, n - 2 * p], 1), HH)
        pg.add("orange", ab([n - 2 * p, n - 2 * p - 1], 2), HH)
        if late:
            pg.add("yellow", stair_a(n - 2 * p - 1, 2 * k + 4 - p, 4, k - p - 1), HH, "DKNN-Y")
            pg.add("dark pink", ab(span(2 * k - p + 1, 2 * k - p + 3), k - p), HH)
            pg.add("light orange", ab(2 * k - p, [k - p, k - p + 1]), HH)
            pg.add("orange (column)", ab(span(k + 1, 2 * k - p), k - p + 2), HH)
            pg.add("light green", stair_b(n - 1, 2 * k + p + 2, 2 * p + 1, k + p - 2), TT, "DKNN-LG")
        else:
            pg.add("yellow", stair_a(n - 2 * p - 1, 2 * k + 4 - p, 4, k - p - 1), HH)
            pg.add("dark pink", ab(down(2 * k - p + 3, 2 * k - p + 1), k - p), HH)
            pg.add("light yellow", ab(2 * k - p + 1, [k - p + 1, k - p + 2]), HH, "DKNN-LY")
            pg.add("dark yellow", ab(span(k + 1, 2 * k - p + 1), k - p + 3), HH)
            pg.add("light green", stair_b(n - 1, 2 * k + p + 2, 2 * p + 1, k + p - 2), TT, "DKNN-LG")
        pg.add("light blue", ab(span(k + 1, 2 * k + p), k + p + 2), TT)
        pg.add("blue", ab(2 * k + p, span(k + p - 1, k + p + 1)), TT)
        pg.add("dark blue", ab(2 * k + p + 1, k + p - 1), TT)
        pg.add("dark green", ab(p, span(1, 2 * p - 1)), TT)
        pg.add("green", ab(span(1, p - 1), 2 * p - 1), TT, "DKNN-G")
        pg.add("dark red", ab(span(1, p), 2 * p), HT)
        pg.add("red", ab(p, span(2 * k + 1, n - 1 - p)), HT)
        pg.add("pink", ab(p + 1, span(n - 1 - p, n + 1 - p)), HT)
        pg.add("light pink", ab(span(p + 1, k), n + 2 - p), HT)
        pg.add("light gray", ab(n + 2 - 2 * p, span(n + 2 - p, n)), HH)
        pg.add("gray", ab(span(n + 3 - 2 * p, n), n + 2 - p), HH)
        pg.add("black", ab(n + 1 - 2 * p, span(n + 2 - p, n)), HT)
        pages.append(pg)

    pg = PageSpec(str(k - 3), stated_size=10 * k + 11, size_correction="DKNN-S")
    pg.add("dark red", ab(span(1, k - 3), 2 * k - 6), HT)
    pg.add("red", ab(k - 3, [2 * k + 1, 2 * k + 2]), HT)
    pg.add("light red", ab(k - 2, span(2 * k + 2, 2 * k + 4)), HT)
    pg.add("orange", ab([k - 1, k], 2 * k + 4), HT)
    pg.add("dark orange", ab([k + 6, k + 7], 1), HH)
    pg.add("light orange", ab(span(k + 3, k + 6), 2), HH)
    pg.add("dark green", ab(k + 3, 4), HH)
    pg.add("pink", ab(span(k + 1, k + 3), 5), HH)
    pg.add("yellow", ab(k + 7, span(2 * k + 4, n)), HT)
    pg.add("dark blue", ab(k + 8, span(2 * k + 5, n)), HH)
    pg.add("blue", ab(span(k + 9, n), 2 * k + 5), HH, "DKNN-K3")
    pg.add("green", ab(span(1, k - 4), 2 * k - 7), TT, "DKNN-K3")
    pg.add("dark pink", ab(k - 3, span(1, 2 * k - 7)), TT, "DKNN-K3")
    pg.add("black", ab(n - 1, [2 * k - 5, 2 * k - 4]), TT)
    pg.add("gray", ab([n - 2, n - 3], 2 * k - 4), TT)
    pg.add("light blue", ab(n - 3, [2 * k - 3, 2 * k - 2]), TT)
    pg.add("dark gray", ab(span(k + 1, n - 3), 2 * k - 1), TT)
    pages.append(pg)

    pg = PageSpec(str(k - 2), stated_size=10 * k + 13, size_correction="DKNN-S")
    pg.add("dark red", ab(span(1, k - 2), 2 * k - 4), HT)
    pg.add("red", ab(k - 2, 2 * k + 1), HT)
    pg.add("light red", ab(k - 1, span(2 * k + 1, 2 * k + 3)), HT)
    pg.add("dark gray", ab(k, 2 * k + 3), HT)
    pg.add("light pink", ab(span(k + 2, k + 5), 1), HH)
    pg.add("gold", ab(k + 2, [2, 4]) + ab(k + 1, 4), HH)
    pg.add("gray", ab(k + 5, span(2 * k + 3, n)), HT)
    pg.add("light blue", ab(k + 6, span(2 * k + 3, n)), HH)
    pg.add("blue", ab(span(k + 7, n), 2 * k + 3), HH, "DKNN-K2")
    pg.add("orange", ab(span(1, k - 2), 2 * k - 5), TT)
    pg.add("dark pink", ab(k - 2, span(1, 2 * k - 6)), TT, "DKNN-K2")
    pg.add("black", ab(n - 1, 2 * k - 3), TT)
    pg.add("pink", ab(n - 2, span(2 * k - 3, 2 * k)), TT)
    pg.add("dark blue", ab(span(k + 1, n - 3), 2 * k), TT)
    pages.append(pg)

    pg = PageSpec(str(k - 1), stated_size=11 * k - 8, size_correction="DKNN-S")
    pg.add("dark red", ab(span(1, k - 1), 2 * k - 3), HH)
    pg.add("light red", ab(k - 1, span(1, 2 * k - 4)), HH)
    pg.add("red", ab(span(1, k - 1), 2 * k - 2), TH)
    pg.add("light orange", ab(n - 1, span(2 * k - 2, 2 * k)), HT)
    pg.add("dark blue", ab(k + 2, 2 * k + 1), HT)
    pg.add("gray", ab(k + 3, span(2 * k + 1, n)), HT)
    pg.add("light blue", ab(k + 4, span(2 * k + 3, n)), HH)
    pg.add("green", ab(k + 5, 2 * k + 2), HH, "DKNN-K1")
    pg.add("blue", ab(span(k + 6, n), 2 * k + 2), HH)
    pg.add("orange", ab(n - 1, 1) + ab(n - 2, [1, 2]) + ab(n - 3, 2), TT)
    pg.add("yellow", stair_a(n - 3, 2 * k + 2, 4, k - 2), TT)
    pg.add("pink", ab(down(2 * k + 2, 2 * k), k - 1), TT)
    pg.add("black", ab(2 * k, [k, k + 1]), TT)
    pg.add("dark pink", ab(span(k + 1, 2 * k), k + 2), TT)
    pages.append(pg)

    pg = PageSpec(str(k), stated_size=4 * n + 14, size_correction="DKNN-S")
    pg.add("dark red", ab(span(1, k), 2 * k), HT)
    pg.add("red", ab(k + 1, [1, 2, 3]), HT)
    pg.add("dark orange", ab(span(k + 2, n), 3), HT, "DKNN-K")
    pg.add("orange", ab(n, span(4, 2 * k)), HT)
    pg.add("gray", ab(k + 2, span(2 * k + 2, n)), HH)
    pg.add("yellow", ab(k + 4, 2 * k + 2), HH)
    pg.add("light blue", ab(span(k + 4, n), 2 * k + 1), HH)
    pg.add("light orange", ab(k + 1, span(2 * k + 1, n)), HT)
    pg.add("dark blue", ab(span(1, k), 2 * k - 1), TT, "DKNN-K")
    pg.add("blue", ab(k, span(1, 2 * k - 2)), TT, "DKNN-K")
    pages.append(pg)
    return pages


def deque_knn_construction(n: int) -> Construction:
    if n % 3 or n < DEQUE_KNN_MIN:
        raise UnsupportedSize(
            f"deque construction for K_n,n needs n divisible by 3 and n >= {DEQUE_KNN_MIN}, "
            f"got {n}; use the SAT search or padding")
    return Construction(complete_bipartite_graph(n), knn_block_order(n), LayoutKind.DEQUE,
                        _pages(n))


def deque_layout_Knn(n: int, *, pad_below_min: bool = False) -> LinearLayout:
    """ceil(n/3)-deque layout of K_{n,n}.

    Other n are padded to the next multiple of three and restricted back.
    Sizes below DEQUE_KNN_MIN raise unless ``pad_below_min`` is set, in which
    case the DEQUE_KNN_MIN/3 pages of the smallest supported layout are used.
    """
    if n < 1:
        raise UnsupportedSize(f"n must be positive, got {n}")
    m = 3 * -(-n // 3)
    if m < DEQUE_KNN_MIN:
        if not pad_below_min:
            raise UnsupportedSize(
                f"deque construction for K_n,n needs n >= {DEQUE_KNN_MIN - 2} "
                f"(N_min = {DEQUE_KNN_MIN}), got {n}; use the SAT search or pad_below_min")
        log.warning("padding K_%d,%d to K_%d,%d inflates the page count to %d",
                    n, n, DEQUE_KNN_MIN, DEQUE_KNN_MIN, DEQUE_KNN_MIN // 3)
        m = DEQUE_KNN_MIN
    layout = deque_knn_construction(m).layout()
    if m == n:
        return layout
    keep = list(range(n)) + [m + j for j in range(n)]
    return induced_sublayout(layout, keep).canonical()
