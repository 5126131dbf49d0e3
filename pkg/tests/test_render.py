from xml.etree import ElementTree

import pytest

from linlay.constructions import deque_layout_Kn, rique_layout_Kn
from linlay.core import EdgeType, LayoutError, LayoutKind, LinearLayout, Page, TypedEdge, VertexOrder, complete_graph
from linlay.render import RenderSpec, palette, render

SVG = "{http://www.w3.org/2000/svg}"


def test_palette_distinct():
    for k in (1, 5, 40, 200):
        cols = palette(k)
        assert len(cols) == k == len(set(cols))


@pytest.mark.parametrize("mode", ["grid", "arcs"])
def test_one_group_per_page(mode):
    lay = rique_layout_Kn(30)
    root = ElementTree.fromstring(render(lay, RenderSpec(mode=mode, title="K30 & co")))
    groups = [g for g in root.iter(f"{SVG}g") if g.get("class") == "page"]
    assert [g.get("data-page") for g in groups] == [str(i) for i in range(1, 10)]
    assert root.find(f"{SVG}title").text == "K30 & co"


def test_grid_marker_count_equals_edges():
    lay = deque_layout_Kn(9)
    root = ElementTree.fromstring(render(lay, RenderSpec(mode="grid")))
    marks = 0
    for g in root.iter(f"{SVG}g"):
        if g.get("class") == "page":
            marks += len(list(g))
    assert marks == 36


def test_wrapping_edges_are_dashed():
    g = complete_graph(3)
    lay = LinearLayout(g, VertexOrder.identity(3), [Page([
        TypedEdge(0, 1, EdgeType.HH), TypedEdge(1, 2, EdgeType.HT), TypedEdge(0, 2, EdgeType.HT)])],
        LayoutKind.RIQUE)
    root = ElementTree.fromstring(render(lay, RenderSpec(mode="arcs")))
    paths = list(root.iter(f"{SVG}path"))
    assert len(paths) == 3
    assert sum(p.get("stroke-dasharray") is not None for p in paths) == 2


def test_render_refuses_invalid():
    g = complete_graph(4)
    bad = LinearLayout(g, VertexOrder.identity(4), [Page([
        TypedEdge(0, 2, EdgeType.HH), TypedEdge(1, 3, EdgeType.HH)])], LayoutKind.DEQUE)
    with pytest.raises(LayoutError):
        render(bad)


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(mode="pie")
    with pytest.raises(ValueError):
        RenderSpec(cell=0)
    with pytest.raises(ValueError):
        RenderSpec(colors=["#000", "#000"])
    with pytest.raises(ValueError):
        render(deque_layout_Kn(12), RenderSpec(colors=["#000"]))
