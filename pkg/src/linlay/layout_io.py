"""Line-oriented text format for layouts.

    linlay 1 <kind> <n> <pages>
    order: r0 r1 ... r(n-1)
    page 1:
    <u> <v> <hh|tt|ht|th>
    ...

``#`` starts a comment.  The graph is the union of the page edges, so a
file always describes a layout that covers its own graph; whether the
pages are valid is left to the validator.
"""

from __future__ import annotations

from .core import EdgeType, Graph, LayoutError, LayoutKind, LinearLayout, Page, TypedEdge, VertexOrder

MAGIC = "linlay"
VERSION = 1


class LayoutParseError(LayoutError):
    def __init__(self, lineno: int, field: str, msg: str):
        super().__init__(f"line {lineno}: {field}: {msg}")
        self.lineno = lineno
        self.field = field


def serialize_layout(layout: LinearLayout, comment: str | None = None) -> str:
    layout = layout.canonical()
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"{MAGIC} {VERSION} {layout.kind.value} {layout.graph.num_vertices} {layout.num_pages}")
    out.append("order: " + " ".join(map(str, layout.order.sequence)))
    for i, page in enumerate(layout.pages, 1):
        out.append(f"page {i}:")
        out += [f"{e.u} {e.v} {e.etype.value}" for e in page]
    return "\n".join(out) + "\n"


def _int(tok: str, lineno: int, field: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise LayoutParseError(lineno, field, f"expected an integer, got {tok!r}") from None


def parse_layout(text: str) -> LinearLayout:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise LayoutParseError(0, "header", "empty document")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 5 or parts[0] != MAGIC:
        raise LayoutParseError(lineno, "header", f"expected '{MAGIC} 1 <kind> <n> <pages>'")
    if _int(parts[1], lineno, "version") != VERSION:
        raise LayoutParseError(lineno, "version", f"unsupported version {parts[1]}")
    try:
        kind = LayoutKind(parts[2].lower())
    except ValueError:
        raise LayoutParseError(lineno, "kind", f"unknown kind {parts[2]!r}") from None
    n = _int(parts[3], lineno, "n")
    num_pages = _int(parts[4], lineno, "pages")
    if n < 0 or num_pages < 0:
        raise LayoutParseError(lineno, "header", "negative size")

    if len(lines) < 2 or not lines[1][1].startswith("order:"):
        raise LayoutParseError(lines[1][0] if len(lines) > 1 else lineno, "order",
                               "missing 'order:' line")
    lineno, line = lines[1]
    seq = [_int(t, lineno, "order") for t in line[len("order:"):].split()]
    if len(seq) != n:
        raise LayoutParseError(lineno, "order", f"{len(seq)} vertices listed, header says {n}")
    try:
        order = VertexOrder(seq)
    except LayoutError as exc:
        raise LayoutParseError(lineno, "order", str(exc)) from None

    pages: list[list[TypedEdge]] = []
    for lineno, line in lines[2:]:
        if line.startswith("page"):
            label = line[4:].rstrip(":").strip()
            if not line.endswith(":") or _int(label, lineno, "page") != len(pages) + 1:
                raise LayoutParseError(lineno, "page", f"expected 'page {len(pages) + 1}:'")
            pages.append([])
            continue
        if not pages:
            raise LayoutParseError(lineno, "edge", "edge before the first 'page' line")
        toks = line.split()
        if len(toks) != 3:
            raise LayoutParseError(lineno, "edge", "expected '<u> <v> <type>'")
        u, v = _int(toks[0], lineno, "u"), _int(toks[1], lineno, "v")
        try:
            et = EdgeType(toks[2].lower())
        except ValueError:
            raise LayoutParseError(lineno, "etype", f"unknown edge type {toks[2]!r}") from None
        for x, name in ((u, "u"), (v, "v")):
            if not 0 <= x < n:
                raise LayoutParseError(lineno, name, f"vertex {x} outside 0..{n - 1}")
        if u == v:
            raise LayoutParseError(lineno, "edge", f"self-loop at {u}")
        if et not in kind.allowed_types:
            raise LayoutParseError(lineno, "etype", f"type {et.value} not allowed in a {kind.value} layout")
        pages[-1].append(TypedEdge(u, v, et))
    if len(pages) != num_pages:
        raise LayoutParseError(lines[-1][0], "pages", f"{len(pages)} pages found, header says {num_pages}")

    seen: dict[tuple[int, int], int] = {}
    for i, page in enumerate(pages, 1):
        for e in page:
            if e.key in seen:
                raise LayoutParseError(0, "edge", f"edge {e.key} on page {i} already on page {seen[e.key]}")
            seen[e.key] = i
    graph = Graph(n, seen.keys())
    return LinearLayout(graph, order, [Page(p) for p in pages], kind)


def read_layout(path) -> LinearLayout:
    with open(path, encoding="utf-8") as fh:
        return parse_layout(fh.read())


def write_layout(layout: LinearLayout, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_layout(layout, comment))
