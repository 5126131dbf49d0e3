import itertools

from hypothesis import assume, given, settings, strategies as st

from linlay.constructions import deque_layout_Kn, merge_stacks_to_deques, rique_layout_Kn, stack_layout_Kn
from linlay.core import (
    EdgeType,
    Graph,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    VertexOrder,
    conflicts,
    induced_sublayout,
    validate_layout,
    validate_page,
)
from linlay.dequesim import drawable_page, simulate_page
from linlay.layout_io import parse_layout, serialize_layout
from linlay.sat.cdcl import CDCLSolver

TYPES = st.sampled_from(list(EdgeType))


@st.composite
def interval_pairs(draw):
    ranks = draw(st.lists(st.integers(0, 9), min_size=3, max_size=4, unique=True))
    if len(ranks) == 3:
        ranks = [ranks[0], ranks[1], ranks[0], ranks[2]]
    a, b = sorted(ranks[:2])
    c, d = sorted(ranks[2:])
    return a, b, c, d


@given(interval_pairs(), TYPES, TYPES)
def test_conflicts_symmetric(iv, x, y):
    a, b, c, d = iv
    assert conflicts(a, b, x, c, d, y) == conflicts(c, d, y, a, b, x)


@st.composite
def small_pages(draw, max_vertices=7, max_edges=6):
    n = draw(st.integers(2, max_vertices))
    spans = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(spans), min_size=1, max_size=max_edges, unique=True))
    types = draw(st.lists(TYPES, min_size=len(chosen), max_size=len(chosen)))
    perm = draw(st.permutations(list(range(n))))
    return VertexOrder(perm), Page(TypedEdge(u, v, t) for (u, v), t in zip(chosen, types))


@settings(max_examples=300, deadline=None)
@given(small_pages(), st.booleans())
def test_simulation_is_hereditary(op, removals_first):
    order, page = op
    assume(simulate_page(order, page, removals_first))
    edges = list(page)
    for i in range(len(edges)):
        assert simulate_page(order, Page(edges[:i] + edges[i + 1:]), removals_first)


@settings(max_examples=300, deadline=None)
@given(small_pages(max_vertices=6, max_edges=5))
def test_three_oracles_agree(op):
    order, page = op
    v = validate_page(order, page, LayoutKind.DEQUE).valid
    assert v == simulate_page(order, page) == simulate_page(order, page, True)
    assert v == drawable_page(order, page)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 24), st.data())
def test_sublayout_monotone(n, data):
    lay = data.draw(st.sampled_from([deque_layout_Kn, stack_layout_Kn]))(n)
    keep = data.draw(st.sets(st.integers(0, n - 1)))
    sub = induced_sublayout(lay, keep)
    assert sub.graph.num_vertices == len(keep)
    assert sub.num_pages == lay.num_pages
    assert validate_layout(sub).valid


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([10, 13, 16, 22]), st.data())
def test_edge_deletion_keeps_validity(n, data):
    lay = rique_layout_Kn(n)
    drop = data.draw(st.sets(st.sampled_from(lay.graph.edges), max_size=30))
    pages = [Page(e for e in p if e.key not in drop) for p in lay.pages]
    g = Graph(n, [e for e in lay.graph.edges if e not in drop])
    assert validate_layout(LinearLayout(g, lay.order, pages, lay.kind)).valid


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30))
def test_merged_stacks_are_deques(n):
    lay = merge_stacks_to_deques(stack_layout_Kn(n))
    assert lay.kind is LayoutKind.DEQUE
    assert lay.num_pages == -(-n // 4)
    assert validate_layout(lay).valid


@st.composite
def random_layouts(draw):
    n = draw(st.integers(0, 9))
    kind = draw(st.sampled_from(list(LayoutKind)))
    spans = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(spans), unique=True, max_size=12)) if spans else []
    p = draw(st.integers(1, 4))
    pages = [[] for _ in range(p)]
    for u, v in edges:
        i = draw(st.integers(0, p - 1))
        pages[i].append(TypedEdge(u, v, draw(st.sampled_from(kind.allowed_types))))
    order = VertexOrder(draw(st.permutations(list(range(n)))))
    return LinearLayout(Graph(n, edges), order, [Page(e) for e in pages], kind)


@settings(max_examples=200, deadline=None)
@given(random_layouts())
def test_serialize_round_trip(lay):
    assert parse_layout(serialize_layout(lay)) == lay.canonical()


@st.composite
def cnfs(draw):
    n = draw(st.integers(1, 8))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=3), min_size=1, max_size=30))
    return n, clauses


@settings(max_examples=300, deadline=None)
@given(cnfs())
def test_cdcl_matches_truth_table(f):
    n, clauses = f
    truth = any(all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses)
                for bits in itertools.product([False, True], repeat=n))
    s = CDCLSolver(n, clauses)
    assert s.solve() == truth
    if truth:
        m = s.model()
        assert all(any(m[abs(l)] == (l > 0) for l in c) for c in clauses)
