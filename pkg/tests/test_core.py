from itertools import permutations

import pytest

from linlay.core import (
    EdgeType,
    Graph,
    LayoutError,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    VertexOrder,
    complete_bipartite_graph,
    complete_graph,
    conflicts,
    induced_sublayout,
    validate_layout,
    validate_page,
)
from linlay.constructions import deque_layout_Kn

HH, TT, HT, TH = EdgeType.HH, EdgeType.TT, EdgeType.HT, EdgeType.TH


def page(*triples):
    return Page(TypedEdge(u, v, t) for u, v, t in triples)


# --- graph and order types -------------------------------------------------

def test_graph_canonical_storage():
    g = Graph(4, [(3, 1), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1), (1, 0)], [(0, 4)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(LayoutError):
        Graph(4, edges)


def test_complete_graph_sizes():
    assert complete_graph(6).num_edges == 15
    g = complete_bipartite_graph(4)
    assert g.num_vertices == 8 and g.num_edges == 16
    assert all(u < 4 <= v for u, v in g.edges)


def test_vertex_order_inverse():
    o = VertexOrder([2, 0, 3, 1])
    assert [o.rank(v) for v in range(4)] == [1, 3, 0, 2]
    assert all(o.sequence[o.position[v]] == v for v in range(4))


@pytest.mark.parametrize("seq", [[0, 0, 1], [0, 2], [1, 2, 3]])
def test_vertex_order_rejects_non_permutations(seq):
    with pytest.raises(LayoutError):
        VertexOrder(seq)


def test_typed_edge_rejects_self_loop():
    with pytest.raises(LayoutError):
        TypedEdge(2, 2, HH)


# --- conflict predicate ----------------------------------------------------

@pytest.mark.parametrize("args, expected", [
    ((1, 3, HH, 2, 4, HH), True),
    ((1, 3, HH, 2, 4, TT), False),
    ((1, 4, HH, 2, 3, HT), True),
    ((1, 2, HT, 3, 4, TH), False),
    ((1, 3, HT, 2, 4, TH), True),
])
def test_conflict_examples(args, expected):
    assert conflicts(*args) is expected


@pytest.mark.parametrize("args", [(3, 1, HH, 2, 4, HH), (1, 3, HH, 1, 3, TT), (2, 2, HH, 0, 1, HH)])
def test_conflict_rejects_bad_intervals(args):
    with pytest.raises(LayoutError):
        conflicts(*args)


def test_stack_and_queue_conditions():
    for perm in permutations(range(4)):
        a, b = sorted(perm[:2])
        c, d = sorted(perm[2:])
        alternate = a < c < b < d or c < a < d < b
        nest = a < c < d < b or c < a < b < d
        assert conflicts(a, b, HH, c, d, HH) == alternate
        assert conflicts(a, b, TT, c, d, TT) == alternate
        assert conflicts(a, b, HT, c, d, HT) == nest
        assert conflicts(a, b, TH, c, d, TH) == nest


def test_hh_tt_never_conflict():
    for perm in permutations(range(4)):
        a, b = sorted(perm[:2])
        c, d = sorted(perm[2:])
        assert not conflicts(a, b, HH, c, d, TT)


def test_hh_th_with_right_end_outside_never_conflicts():
    # TH edge (c, d) with d outside the HH edge (a, b)
    for a, b, c, d in [(0, 2, 1, 3), (1, 2, 0, 3), (0, 1, 2, 3), (2, 3, 0, 1)]:
        assert not conflicts(a, b, HH, c, d, TH)


def test_shared_endpoint_conflicts_follow_operational_semantics():
    # HT inserted at the head, TT at the tail of the same vertex: the HT
    # edge can never reach the tail first
    assert conflicts(0, 1, HT, 0, 2, TT)
    # outer HH with inner HT ending at the same vertex
    assert conflicts(0, 2, HH, 1, 2, HT)
    # shared endpoints between same-side stack edges never conflict
    assert not conflicts(0, 1, HH, 0, 2, HH)
    assert not conflicts(0, 2, HH, 1, 2, HH)


# --- validation ------------------------------------------------------------

def test_validate_page_examples():
    o = VertexOrder.identity(4)
    r = validate_page(o, page((0, 2, HH), (1, 3, HH)), LayoutKind.DEQUE)
    assert not r.valid and len(r.by_category("conflict")) == 1
    assert validate_page(o, page((0, 2, HH), (1, 3, TT)), LayoutKind.DEQUE).valid


def test_rique_pattern_invalid_under_every_typing():
    o = VertexOrder.identity(6)
    # a < b < c < b' < a', c' with a=0, b=1, c=2, b'=3, a'=4, c'=5
    for ta in (HH, HT):
        for tb in (HH, HT):
            for tc in (HH, HT):
                p = page((0, 4, ta), (1, 3, tb), (2, 5, tc))
                assert not validate_page(o, p, LayoutKind.RIQUE).valid


def test_validate_page_kind_and_order_defects():
    o = VertexOrder.identity(3)
    r = validate_page(o, page((0, 1, TT), (1, 5, HH)), LayoutKind.RIQUE)
    assert {v.category for v in r.violations} == {"kind", "order"}


def test_validate_layout_coverage():
    g = complete_graph(3)
    o = VertexOrder.identity(3)
    good = LinearLayout(g, o, [page((0, 1, HH), (0, 2, HH), (1, 2, HH))], LayoutKind.STACK)
    assert validate_layout(good).valid
    dup = LinearLayout(g, o, [page((0, 1, HH), (0, 2, HH), (1, 2, HH)), page((0, 1, HH))],
                       LayoutKind.STACK)
    assert validate_layout(dup).by_category("coverage")
    same_page = LinearLayout(g, o, [page((0, 1, HH), (0, 2, HH), (1, 2, HH), (1, 0, HH))],
                             LayoutKind.STACK)
    assert validate_layout(same_page).by_category("coverage")
    missing = LinearLayout(g, o, [page((0, 1, HH))], LayoutKind.STACK)
    assert len(validate_layout(missing).by_category("coverage")) == 2
    extra = LinearLayout(Graph(3, [(0, 1)]), o, [page((0, 1, HH), (1, 2, HH))], LayoutKind.STACK)
    assert validate_layout(extra).by_category("coverage")


def test_deque_layout_relabelled_as_rique_reports_kind():
    lay = deque_layout_Kn(8)
    assert any(e.etype is TT for p in lay.pages for e in p)
    relabelled = LinearLayout(lay.graph, lay.order, lay.pages, LayoutKind.RIQUE)
    assert validate_layout(relabelled).by_category("kind")


# --- induced sublayouts ----------------------------------------------------

def test_induced_sublayout_identity():
    lay = deque_layout_Kn(7)
    assert induced_sublayout(lay, range(7)) == lay


def test_induced_sublayout_k6_to_k5():
    lay = deque_layout_Kn(6)
    first5 = lay.order.sequence[:5]
    sub = induced_sublayout(lay, first5)
    assert sub.graph == complete_graph(5)
    assert sub.num_pages <= lay.num_pages
    assert validate_layout(sub).valid


def test_induced_sublayout_empty_keep():
    lay = deque_layout_Kn(5)
    sub = induced_sublayout(lay, [])
    assert sub.graph.num_vertices == 0
    assert sub.num_pages == lay.num_pages and all(len(p) == 0 for p in sub.pages)
    assert validate_layout(sub).valid


def test_induced_sublayout_rejects_foreign_vertices():
    with pytest.raises(LayoutError):
        induced_sublayout(deque_layout_Kn(4), [0, 9])
