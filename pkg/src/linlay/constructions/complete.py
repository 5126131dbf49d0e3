"""Stack layouts of K_n and deque layouts obtained by pairing stacks."""

from __future__ import annotations

from ..core import (
    EdgeType,
    LayoutError,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    VertexOrder,
    complete_graph,
    induced_sublayout,
)


def _zigzag(start: int, n: int) -> list[int]:
    """Hamiltonian path start, start+1, start-1, start+2, ... on Z_n."""
    path = [start]
    for step in range(1, n):
        off = (step + 1) // 2 if step % 2 else -(step // 2)
        path.append((start + off) % n)
    return path


def stack_layout_Kn(n: int) -> LinearLayout:
    """ceil(n/2)-stack layout of K_n on the natural order.

    For even n the n/2 zig-zag Hamiltonian paths of the circle are pairwise
    edge-disjoint and each is non-crossing; odd n drops the last vertex of
    the layout for n + 1.
    """
    if n < 2:
        raise LayoutError(f"stack_layout_Kn needs n >= 2, got {n}")
    if n % 2:
        return induced_sublayout(stack_layout_Kn(n + 1), range(n))
    pages = []
    for s in range(n // 2):
        path = _zigzag(s, n)
        pages.append(Page(TypedEdge(min(u, v), max(u, v), EdgeType.HH)
                          for u, v in zip(path, path[1:])))
    return LinearLayout(complete_graph(n), VertexOrder.identity(n), pages,
                        LayoutKind.STACK).canonical()


def merge_stacks_to_deques(layout: LinearLayout) -> LinearLayout:
    """Pair stack pages (0,1), (2,3), ...: first becomes head-head, second tail-tail."""
    if layout.kind is not LayoutKind.STACK:
        raise LayoutError(f"expected a stack layout, got {layout.kind}")
    pages = []
    src = list(layout.pages)
    for i in range(0, len(src), 2):
        edges = [TypedEdge(e.u, e.v, EdgeType.HH) for e in src[i]]
        if i + 1 < len(src):
            edges += [TypedEdge(e.u, e.v, EdgeType.TT) for e in src[i + 1]]
        pages.append(Page(edges))
    return LinearLayout(layout.graph, layout.order, pages, LayoutKind.DEQUE).canonical()


def deque_layout_Kn(n: int) -> LinearLayout:
    """ceil(n/4)-deque layout of K_n."""
    if n < 2:
        raise LayoutError(f"deque_layout_Kn needs n >= 2, got {n}")
    return merge_stacks_to_deques(stack_layout_Kn(n))
