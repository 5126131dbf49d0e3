from pathlib import Path

import pytest

from linlay.constructions import deque_layout_Kn, rique_layout_Kn
from linlay.core import EdgeType, LayoutKind, complete_graph, validate_layout
from linlay.layout_io import LayoutParseError, parse_layout, read_layout, serialize_layout, write_layout

K4_DOC = Path(__file__).resolve().parents[1] / "docs" / "k4_deque.linlay"


@pytest.mark.parametrize("lay", [deque_layout_Kn(9), rique_layout_Kn(13)])
def test_round_trip(lay):
    text = serialize_layout(lay, comment="fixture\nsecond line")
    assert text.startswith("# fixture\n# second line\n")
    assert parse_layout(text) == lay.canonical()


def test_file_round_trip(tmp_path):
    lay = deque_layout_Kn(6)
    path = tmp_path / "k6.linlay"
    write_layout(lay, path)
    assert read_layout(path) == lay.canonical()


def test_k4_document():
    lay = read_layout(K4_DOC)
    assert lay.kind is LayoutKind.DEQUE
    assert lay.graph == complete_graph(4)
    assert lay.num_pages == 1
    assert validate_layout(lay).valid
    assert serialize_layout(lay) in K4_DOC.read_text()


GOOD = """linlay 1 deque 3 1
order: 0 1 2
page 1:
0 1 hh
1 2 hh
0 2 tt  # trailing comment
"""


def test_parse_good():
    lay = parse_layout(GOOD)
    assert lay.graph.num_edges == 3
    assert [e.etype for e in lay.pages[0]] == [EdgeType.HH, EdgeType.HH, EdgeType.TT]


@pytest.mark.parametrize("text, field", [
    ("", "header"),
    ("linlay 2 deque 3 1\norder: 0 1 2\npage 1:\n", "version"),
    ("linlay 1 heap 3 1\norder: 0 1 2\npage 1:\n", "kind"),
    ("linlay 1 deque x 1\norder: 0 1 2\npage 1:\n", "n"),
    ("linlay 1 deque 3 1\npage 1:\n", "order"),
    ("linlay 1 deque 3 1\norder: 0 1\npage 1:\n", "order"),
    ("linlay 1 deque 3 1\norder: 0 1 1\npage 1:\n", "order"),
    ("linlay 1 deque 3 1\norder: 0 1 2\npage 2:\n", "page"),
    ("linlay 1 deque 3 1\norder: 0 1 2\n0 1 hh\n", "edge"),
    ("linlay 1 deque 3 1\norder: 0 1 2\npage 1:\n0 1 xx\n", "etype"),
    ("linlay 1 deque 3 1\norder: 0 1 2\npage 1:\n0 5 hh\n", "v"),
    ("linlay 1 deque 3 1\norder: 0 1 2\npage 1:\n1 1 hh\n", "edge"),
    ("linlay 1 deque 3 1\norder: 0 1 2\npage 1:\n0 1\n", "edge"),
    ("linlay 1 rique 3 1\norder: 0 1 2\npage 1:\n0 1 tt\n", "etype"),
    ("linlay 1 deque 3 2\norder: 0 1 2\npage 1:\n0 1 hh\n", "pages"),
    ("linlay 1 deque 3 2\norder: 0 1 2\npage 1:\n0 1 hh\npage 2:\n1 0 tt\n", "edge"),
])
def test_parse_errors_name_the_field(text, field):
    with pytest.raises(LayoutParseError) as exc:
        parse_layout(text)
    assert exc.value.field == field
    assert field in str(exc.value)


def test_unknown_etype_reports_line():
    with pytest.raises(LayoutParseError, match="line 4: etype"):
        parse_layout("linlay 1 deque 3 1\norder: 0 1 2\npage 1:\n0 1 xx\n")
