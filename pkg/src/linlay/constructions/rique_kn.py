"""Rique layouts of K_n with floor((n-1)/3) pages, one builder per n mod 3.

Vertices v_1..v_n sit on the spine in natural order (v_i has id i-1).
Every bullet below is one edge family of the original description; the
ones marked with a correction id deviate from it and are explained in
docs/CORRECTIONS.md.
"""

from __future__ import annotations

from ..core import EdgeType, LayoutKind, LinearLayout, UnsupportedSize, VertexOrder, complete_graph
from .base import Construction, PageSpec, pairs, span

HT, HH = EdgeType.HT, EdgeType.HH

# smallest n of each residue class for which every page is well formed;
# found by sweeping n upward with the validator (see tests)
RIQUE_KN_MIN = {0: 21, 1: 10, 2: 11}


def _case0(n: int) -> list[PageSpec]:
    k = n // 3
    pages = []

    p1 = PageSpec("1", stated_size=2 * n, size_correction="RKN0-S")
    p1.add("dark red", pairs(1, span(2, n)), HT)
    p1.add("red", pairs(span(2, k), n), HT)
    p1.add("light red", pairs(k, span(k + 1, 2 * k + 1)), HH)
    p1.add("blue", pairs(2 * k + 1, span(2 * k + 2, n)), HH)
    p1.add("light blue", pairs(n - 1, n), HH)
    pages.append(p1)

    p2 = PageSpec("2", stated_size=2 * n - 7, size_correction="RKN0-S")
    p2.add("dark red", pairs(2, span(3, n - 1)), HT)
    p2.add("red", pairs(span(3, k + 1), n - 1), HT)
    p2.add("orange", pairs(k + 1, n), HT)
    p2.add("blue", pairs(k + 1, span(k + 2, 2 * k)), HH)
    p2.add("light blue", pairs(2 * k, span(2 * k + 1, n)), HH)
    pages.append(p2)

    p3 = PageSpec("3", stated_size=2 * n - 5, size_correction="RKN0-S")
    p3.add("dark red", pairs(3, span(4, n - 2)), HT)
    p3.add("red", pairs(span(4, k + 1), n - 2), HT)
    p3.add("orange", pairs(2 * k + 2, span(n - 2, n)), HT)
    p3.add("blue", pairs(k + 1, 2 * k + 1), HH)
    p3.add("light blue", pairs(k + 2, [2 * k - 1, 2 * k, 2 * k + 1]), HH)
    p3.add("pink", pairs(k + 3, span(k + 4, 2 * k - 1)), HH)
    p3.add("light red", pairs(2 * k + 2, span(2 * k + 3, n - 3)), HH)
    p3.add("light orange", pairs(n - 3, [n - 2, n - 1, n]), HH)
    pages.append(p3)

    for p in span(4, k - 4):
        pg = PageSpec(str(p), stated_size=k - 2 * p + 3, size_correction="RKN0-S")
        pg.add("dark red", pairs(p, span(p + 1, n - p + 1)), HT)
        pg.add("red", pairs(span(p + 1, k + 1), n - p + 1), HT)
        pg.add("pink", pairs(k + p + 1, span(n - p + 1, n)), HT)
        pg.add("blue", pairs(k + p + 1, span(2 * k + p - 2, n - p)), HH)
        pg.add("light blue", pairs(n - p, span(n - p + 1, n)), HH, "RKN0-LB")
        # the printed end 2n/3+p-2 only fits n = 30; stop where the next
        # page's pink row begins, or at this page's light blue row
        stop = n - p - 1 if p < k - 4 else n - p
        if 2 * k + p - 2 > stop:
            pg.add("orange", pairs(k + p + 2, span(k + p + 3, stop)), HH, "RKN0-OR")
        else:
            pg.add("orange", pairs(k + p + 2, span(k + p + 3, 2 * k + p - 2)), HH)
        pages.append(pg)

    pa = PageSpec(f"{k - 3}", stated_size=4 * k + 6)
    pa.add("dark red", pairs(k - 3, span(k - 2, 2 * k + 4)), HT)
    pa.add("red", pairs(span(k - 2, k + 1), 2 * k + 4), HT)
    pa.add("light blue", pairs(k + 3, span(2 * k + 4, n - 1)), HT)
    pa.add("pink", pairs(2 * k + 3, [n - 1, n]), HT)
    pa.add("dark blue", pairs(k + 3, span(2 * k, 2 * k + 3)), HH)
    pa.add("orange", pairs(k + 4, span(k + 5, 2 * k)), HH)
    pa.add("red (hh)", pairs(2 * k + 3, span(2 * k + 4, n - 2)), HH, "RKN0-RH")
    pa.add("dark orange", pairs(n - 2, [n - 1, n]), HH)
    pages.append(pa)

    pb = PageSpec(f"{k - 2}", stated_size=4 * k + 3)
    pb.add("dark red", pairs(k - 2, span(k - 1, 2 * k + 3)), HT)
    pb.add("red", pairs(span(k - 1, k + 1), 2 * k + 3), HT)
    pb.add("light red", pairs(k + 2, span(2 * k + 3, n)), HT)
    pb.add("pink", pairs(k + 3, n), HT)
    pb.add("dark orange", pairs(k + 4, span(2 * k + 1, n)), HH)
    pb.add("orange", pairs(k + 5, span(k + 6, 2 * k + 1)), HH)
    pages.append(pb)

    pc = PageSpec(f"{k - 1}", stated_size=n + 9,
                  size_correction="RKN0-LR" if n > 30 else None)
    pc.add("dark red", pairs(k - 1, span(k, 2 * k + 2)), HT)
    pc.add("red", pairs(span(k, k + 2), 2 * k + 2), HT)
    if n > 30:
        # continue the row that page n/3-4 leaves off at 2n/3+4
        pc.add("light red", pairs(2 * k - 2, span(2 * k + 5, n)), HT, "RKN0-LR")
    else:
        pc.add("light red", pairs(2 * k - 2, span(n - 5, n)), HT)
    pc.add("orange", pairs(k + 2, span(k + 3, 2 * k - 2)), HH)
    pc.add("light orange", pairs(2 * k - 1, span(2 * k, n)), HH)
    pages.append(pc)
    return pages


def _case1(n: int) -> list[PageSpec]:
    k = (n - 1) // 3
    pages = []
    p1 = PageSpec("1", stated_size=2 * n - 1)
    p1.add("dark red", pairs(1, span(2, n)), HT)
    p1.add("red", pairs(span(2, k + 1), n), HT)
    p1.add("light red", pairs(k + 1, span(k + 2, 2 * k + 1)), HH)
    p1.add("blue", pairs(2 * k + 1, span(2 * k + 2, n)), HH)
    p1.add("light blue", pairs(n - 1, n), HH)
    pages.append(p1)

    p2 = PageSpec("2", stated_size=2 * n - 4)
    p2.add("dark red", pairs(2, span(3, n - 1)), HT)
    p2.add("red", pairs(span(3, k + 1), n - 1), HT)
    p2.add("light red", pairs(k + 2, [n - 1, n]), HT)
    p2.add("blue", pairs(k + 2, span(k + 3, n - 2)), HH)
    p2.add("light blue", pairs(n - 2, [n - 1, n]), HH)
    pages.append(p2)

    for p in span(3, k - 1):
        pg = PageSpec(str(p), stated_size=2 * n - 3 * p + 2)
        pg.add("dark red", pairs(p, span(p + 1, n - p + 1)), HT)
        pg.add("red", pairs(span(p + 1, k + 1), n - p + 1), HT)
        pg.add("orange", pairs(k + p, span(n - p + 1, n)), HT)
        pg.add("blue", pairs(k + p, span(k + p + 1, n - p)), HH)
        pg.add("light blue", pairs(n - p, span(n - p + 1, n)), HH)
        pages.append(pg)

    pk = PageSpec(str(k), stated_size=2 * k + 4)
    pk.add("dark red", pairs(k, span(k + 1, 2 * k + 2)), HT)
    pk.add("red", pairs(k + 1, 2 * k + 2), HT)
    pk.add("orange", pairs(2 * k, span(2 * k + 1, n)), HH)
    pages.append(pk)
    return pages


def _case2(n: int) -> list[PageSpec]:
    k = (n - 2) // 3
    pages = []
    p1 = PageSpec("1", stated_size=2 * n, size_correction="RKN2-LR")
    p1.add("dark red", pairs(1, span(2, n)), HT)
    p1.add("red", pairs(span(2, k + 1), n), HT)
    p1.add("light red", pairs(k + 1, span(k + 2, 2 * k + 1)), HH, "RKN2-LR")
    p1.add("blue", pairs(2 * k + 1, span(2 * k + 2, n)), HH, "RKN2-B")
    p1.add("light blue", pairs(n - 1, n), HH)
    pages.append(p1)

    p2 = PageSpec("2", stated_size=2 * n - 4, size_correction="RKN2-P2")
    p2.add("dark red", pairs(2, span(3, n - 1)), HT)
    p2.add("red", pairs(span(3, k + 1), n - 1), HT, "RKN2-P2")
    p2.add("blue", pairs(k + 2, span(k + 3, 2 * k + 2)), HH, "RKN2-P2")
    p2.add("light blue", pairs(n - 2, [n - 1, n]), HH)
    p2.add("moved from page 1 light red", pairs(k + 1, 2 * k + 2), HH, "RKN2-LR")
    p2.add("moved from page 3 light blue", pairs(n - 3, [n - 1, n]), HT, "RKN2-P3")
    pages.append(p2)

    for p in span(3, k):
        pg = PageSpec(str(p), stated_size=2 * n - 3 * p + 2, size_correction="RKN2-RED")
        pg.add("dark red", pairs(p, span(p + 1, n - p + 1)), HT)
        # row k+2 continues along the red columns
        pg.add("red", pairs(span(p + 1, k + 2), n - p + 1), HT, "RKN2-RED")
        if p == 3:
            pg.add("moved from page 2 light red", pairs(k + 2, [n - 1, n]), HT, "RKN2-P2")
            pg.add("light red", pairs(k + 3, n), HT, "RKN2-P3")
            pg.add("blue", pairs(k + 3, span(k + 4, n - 1)), HH, "RKN2-P3")
            pg.add("light blue", pairs(n - 3, n - 2), HH, "RKN2-P3")
        else:
            pg.add("light red", pairs(k + p, span(n - p + 1, n)), HT)
            pg.add("blue", pairs(k + p, span(k + p + 1, n - p)), HH)
            pg.add("light blue", pairs(n - p, span(n - p + 1, n)), HH)
        pages.append(pg)
    return pages


_BUILDERS = {0: _case0, 1: _case1, 2: _case2}


def rique_kn_construction(n: int) -> Construction:
    case = n % 3
    if n < RIQUE_KN_MIN[case]:
        raise UnsupportedSize(
            f"rique construction for K_n with n mod 3 = {case} needs n >= {RIQUE_KN_MIN[case]}; "
            "use the SAT search for smaller n")
    return Construction(complete_graph(n), VertexOrder.identity(n), LayoutKind.RIQUE,
                        _BUILDERS[case](n))


def rique_layout_Kn(n: int) -> LinearLayout:
    """floor((n-1)/3)-rique layout of K_n."""
    return rique_kn_construction(n).layout()
