"""SVG renderings of layouts: grid representation and cylindric arc diagrams."""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .core import EdgeType, LayoutError, LinearLayout, validate_layout

WRAPPING = (EdgeType.HT, EdgeType.TH)


def palette(k: int) -> list[str]:
    """k distinct colors, hues spaced by the golden angle."""
    out = []
    for i in range(k):
        h = (i * 0.618033988749895) % 1.0
        light = 0.42 if i % 2 == 0 else 0.55
        r, g, b = colorsys.hls_to_rgb(h, light, 0.75)
        out.append("#%02x%02x%02x" % (round(r * 255), round(g * 255), round(b * 255)))
    # golden-angle hues never repeat, but rounding could in principle collide
    seen = set()
    for i, c in enumerate(out):
        while c in seen:
            c = "#%06x" % ((int(c[1:], 16) + 1) % 0xFFFFFF)
        out[i] = c
        seen.add(c)
    return out


@dataclass
class RenderSpec:
    mode: str = "grid"              # grid | arcs
    cell: int = 14
    colors: list[str] = field(default_factory=list)
    title: str | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("grid", "arcs"):
            raise ValueError(f"unknown render mode {self.mode!r}")
        if self.cell <= 0:
            raise ValueError("cell size must be positive")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("palette colors must be distinct")


def _svg(width: float, height: float, body: list[str], title: str | None) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        head.append(f"<title>{escape(title)}</title>")
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _legend(colors: list[str], x: float, y: float) -> list[str]:
    out = []
    for i, c in enumerate(colors):
        out.append(f'<rect x="{x:.1f}" y="{y + 14 * i:.1f}" width="10" height="10" fill="{c}"/>')
        out.append(f'<text x="{x + 14:.1f}" y="{y + 14 * i + 9:.1f}" font-size="10" '
                   f'font-family="sans-serif">page {i + 1}</text>')
    return out


def render_grid(layout: LinearLayout, spec: RenderSpec) -> str:
    """Edge with ranks i < j drawn at column i, row j of an n x n grid.

    Head-head and tail-tail edges are filled markers, the wrapping types
    hollow with a dashed outline; tail-side types use squares.
    """
    n = len(layout.order)
    s = spec.cell
    m = 30
    colors = spec.colors or palette(layout.num_pages)
    size = m + n * s + m
    body = [f'<g stroke="#ddd" stroke-width="0.5">']
    for i in range(n + 1):
        body.append(f'<line x1="{m}" y1="{m + i * s}" x2="{m + n * s}" y2="{m + i * s}"/>')
        body.append(f'<line x1="{m + i * s}" y1="{m}" x2="{m + i * s}" y2="{m + n * s}"/>')
    body.append("</g>")
    for p, page in enumerate(layout.pages):
        c = colors[p]
        body.append(f'<g class="page" data-page="{p + 1}">')
        for e in page:
            i, j = e.ranks(layout.order)
            cx, cy = m + (i + 0.5) * s, m + (j + 0.5) * s
            r = s * 0.32
            style = (f'fill="{c}" stroke="{c}"' if e.etype not in WRAPPING
                     else f'fill="none" stroke="{c}" stroke-dasharray="2,1.5"')
            if e.etype in (EdgeType.HH, EdgeType.HT):
                body.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{r:.1f}" {style}/>')
            else:
                body.append(f'<rect x="{cx - r:.1f}" y="{cy - r:.1f}" width="{2 * r:.1f}" '
                            f'height="{2 * r:.1f}" {style}/>')
        body.append("</g>")
    body += _legend(colors, size, m)
    return _svg(size + 70, max(size, m + 14 * len(colors) + m), body, spec.title)


def _wrap_slots(layout: LinearLayout, page) -> dict:
    # type-(ii) edges wrap right of all vertices; an earlier left endpoint
    # gets an outer wrap point so that queue-like edges stay uncrossed
    wrapping = [e for e in page if e.etype in WRAPPING]
    wrapping.sort(key=lambda e: e.ranks(layout.order))
    return {e: len(wrapping) - k for k, e in enumerate(wrapping)}


def render_arcs(layout: LinearLayout, spec: RenderSpec) -> str:
    """Cylindric drawing, one panel per page.

    HH arcs above the spine, TT below; an HT edge leaves its left endpoint
    above and returns below through a wrap point right of all vertices (TH
    the other way round).
    """
    n = len(layout.order)
    s = spec.cell * 2
    colors = spec.colors or palette(layout.num_pages)
    maxw = max((sum(e.etype in WRAPPING for e in pg) for pg in layout.pages), default=0)
    width = 40 + (n + maxw + 1) * s
    panel = (n + maxw + 2) * s
    body = []
    for p, page in enumerate(layout.pages):
        y0 = panel * p + panel / 2
        c = colors[p]
        x = lambda r: 20 + r * s
        body.append(f'<g class="page" data-page="{p + 1}">')
        body.append(f'<line x1="10" y1="{y0:.1f}" x2="{width - 10:.1f}" y2="{y0:.1f}" stroke="#888"/>')
        for r, v in enumerate(layout.order.sequence):
            body.append(f'<circle cx="{x(r):.1f}" cy="{y0:.1f}" r="3" fill="black"/>')
            body.append(f'<text x="{x(r):.1f}" y="{y0 + 14:.1f}" font-size="9" text-anchor="middle" '
                        f'font-family="sans-serif">{v}</text>')
        slots = _wrap_slots(layout, page)
        for e in page:
            a, b = e.ranks(layout.order)
            if e.etype in (EdgeType.HH, EdgeType.TT):
                sweep = 1 if e.etype is EdgeType.HH else 0
                rad = (x(b) - x(a)) / 2
                body.append(f'<path d="M {x(a):.1f} {y0:.1f} A {rad:.1f} {rad:.1f} 0 0 {sweep} '
                            f'{x(b):.1f} {y0:.1f}" fill="none" stroke="{c}"/>')
            else:
                w = x(n - 1 + slots[e])
                up, down = (1, 1) if e.etype is EdgeType.HT else (0, 0)
                r1, r2 = (w - x(a)) / 2, (w - x(b)) / 2
                body.append(
                    f'<path d="M {x(a):.1f} {y0:.1f} A {r1:.1f} {r1:.1f} 0 0 {up} {w:.1f} {y0:.1f} '
                    f'A {r2:.1f} {r2:.1f} 0 0 {down} {x(b):.1f} {y0:.1f}" fill="none" '
                    f'stroke="{c}" stroke-dasharray="4,2"/>')
        body.append("</g>")
    return _svg(width, panel * max(1, layout.num_pages), body, spec.title)


def render(layout: LinearLayout, spec: RenderSpec | None = None) -> str:
    """Render a verified layout; invalid layouts are refused."""
    spec = spec or RenderSpec()
    report = validate_layout(layout)
    if not report.valid:
        raise LayoutError(f"refusing to render an invalid layout ({len(report.violations)} violations)")
    if spec.colors and len(spec.colors) < layout.num_pages:
        raise ValueError(f"palette has {len(spec.colors)} colors for {layout.num_pages} pages")
    return render_grid(layout, spec) if spec.mode == "grid" else render_arcs(layout, spec)
