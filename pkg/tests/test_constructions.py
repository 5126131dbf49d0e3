import re
from pathlib import Path

import pytest

from linlay.core import LayoutKind, UnsupportedSize, complete_bipartite_graph, complete_graph, validate_layout
from linlay.constructions import (
    DEQUE_KNN_MIN,
    RIQUE_KN_MIN,
    RIQUE_KNN_MIN,
    deque_knn_construction,
    deque_layout_Kn,
    deque_layout_Knn,
    diagnose,
    merge_stacks_to_deques,
    rique_kn_construction,
    rique_knn_construction,
    rique_layout_Kn,
    rique_layout_Knn,
    stack_layout_Kn,
)
from linlay.dequesim import rique_pattern_check

CORRECTIONS = Path(__file__).resolve().parents[1] / "docs" / "CORRECTIONS.md"


def _ids_in(construction):
    ids = set()
    for ps in construction.pages:
        if ps.size_correction:
            ids.add(ps.size_correction)
        ids.update(b.correction for b in ps.bullets if b.correction)
    return ids


def _check_sizes(construction):
    for ps in construction.pages:
        if ps.stated_size is not None and ps.stated_size != len(ps.edges()):
            assert ps.size_correction, f"page {ps.name}: size {len(ps.edges())} != {ps.stated_size}"


# --- K_n ------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 21))
def test_stack_layout_Kn(n):
    lay = stack_layout_Kn(n)
    assert lay.kind is LayoutKind.STACK
    assert lay.num_pages == -(-n // 2)
    assert validate_layout(lay).valid


@pytest.mark.parametrize("n", [2, 3, 4, 5, 9, 16, 17, 30])
def test_deque_layout_Kn(n):
    lay = deque_layout_Kn(n)
    assert lay.num_pages == -(-n // 4)
    assert lay.graph == complete_graph(n)
    assert validate_layout(lay).valid


def test_merge_rejects_non_stack():
    with pytest.raises(Exception):
        merge_stacks_to_deques(deque_layout_Kn(6))


@pytest.mark.parametrize("n", [10, 11, 13, 14, 21, 22, 23, 28, 29, 30, 31, 32, 33, 45, 60])
def test_rique_layout_Kn(n):
    c = rique_kn_construction(n)
    assert diagnose(c).clean
    _check_sizes(c)
    lay = rique_layout_Kn(n)
    assert lay.num_pages == max(1, (n - 1) // 3)
    assert validate_layout(lay).valid
    assert all(rique_pattern_check(lay.order, [(e.u, e.v) for e in p]) for p in lay.pages)


@pytest.mark.parametrize("case", [0, 1, 2])
def test_rique_kn_min_is_tight(case):
    n_min = RIQUE_KN_MIN[case]
    below = n_min - 3
    with pytest.raises(UnsupportedSize, match=str(n_min)):
        rique_kn_construction(below)
    if below >= 4:
        # the printed lists really break below N_min
        from linlay.constructions.rique_kn import _BUILDERS
        from linlay.constructions.base import Construction
        from linlay.core import VertexOrder
        raw = Construction(complete_graph(below), VertexOrder.identity(below), LayoutKind.RIQUE,
                           _BUILDERS[case](below))
        assert not diagnose(raw).clean or not validate_layout(raw.layout()).valid


# --- K_{n,n} ----------------------------------------------------------------

@pytest.mark.parametrize("n", [36, 39, 42, 45])
def test_deque_layout_Knn(n):
    c = deque_knn_construction(n)
    assert diagnose(c).clean
    _check_sizes(c)
    lay = deque_layout_Knn(n)
    assert lay.num_pages == n // 3 and lay.graph.num_edges == n * n
    assert validate_layout(lay).valid


@pytest.mark.parametrize("n", [37, 38, 40])
def test_deque_layout_Knn_padding(n):
    lay = deque_layout_Knn(n)
    assert lay.graph == complete_bipartite_graph(n)
    assert lay.num_pages == -(-n // 3)
    assert validate_layout(lay).valid


def test_deque_layout_Knn_below_min():
    with pytest.raises(UnsupportedSize, match=f"N_min = {DEQUE_KNN_MIN}"):
        deque_layout_Knn(12)
    lay = deque_layout_Knn(12, pad_below_min=True)
    assert lay.num_pages == DEQUE_KNN_MIN // 3
    assert validate_layout(lay).valid


def test_deque_knn_min_is_tight():
    with pytest.raises(UnsupportedSize):
        deque_knn_construction(DEQUE_KNN_MIN - 3)
    from linlay.constructions.deque_knn import _pages, knn_block_order
    from linlay.constructions.base import Construction
    m = DEQUE_KNN_MIN - 3
    try:
        raw = Construction(complete_bipartite_graph(m), knn_block_order(m), LayoutKind.DEQUE, _pages(m))
        broken = not diagnose(raw).clean
    except (ValueError, IndexError):
        broken = True
    assert broken


@pytest.mark.parametrize("n", [27, 28, 29, 30, 41, 44, 59, 60])
def test_rique_layout_Knn(n):
    c = rique_knn_construction(n)
    assert diagnose(c).clean
    _check_sizes(c)
    lay = rique_layout_Knn(n)
    assert lay.num_pages == (n - 1) // 2 - 1 and lay.graph.num_edges == n * n
    assert validate_layout(lay).valid
    assert all(rique_pattern_check(lay.order, [(e.u, e.v) for e in p]) for p in lay.pages)


@pytest.mark.parametrize("parity", [0, 1])
def test_rique_knn_below_min(parity):
    with pytest.raises(UnsupportedSize):
        rique_knn_construction(RIQUE_KNN_MIN[parity] - 2)


# --- correction ids ---------------------------------------------------------

def test_every_correction_id_is_documented():
    documented = set(re.findall(r"^\| ([A-Z0-9]+-[A-Z0-9]+) \|", CORRECTIONS.read_text(), re.M))
    used = set()
    for c in (rique_kn_construction(30), rique_kn_construction(31), rique_kn_construction(32),
              deque_knn_construction(39), rique_knn_construction(29), rique_knn_construction(30)):
        used |= _ids_in(c)
    assert used
    assert used <= documented
