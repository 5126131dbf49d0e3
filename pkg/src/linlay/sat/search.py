"""Turn models into layouts and search for the least satisfiable page count."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, TextIO

import networkx as nx

from ..bounds import density_lower_bound
from ..core import (
    Graph,
    LayoutError,
    LayoutKind,
    LinearLayout,
    Page,
    TypedEdge,
    VertexOrder,
    validate_layout,
)
from .encoder import CnfInstance, VarMap, encode
from .solver import SolveResult, solve

log = logging.getLogger(__name__)


class DecodeError(RuntimeError):
    """A model did not decode to a valid layout: the encoding is broken."""


def decode(assignment: list[bool], varmap: VarMap, graph: Graph, kind: LayoutKind) -> LinearLayout:
    kind = LayoutKind(kind)
    n = graph.num_vertices
    # sigma is a tournament; acyclic iff the out-degrees are 0..n-1
    wins = [0] * n
    for (u, v), var in varmap.sigma_ids.items():
        if assignment[var]:
            wins[u] += 1
        else:
            wins[v] += 1
    seq = sorted(range(n), key=lambda v: -wins[v])
    if sorted(wins) != list(range(n)):
        raise DecodeError("sigma assignment is not a linear order")
    order = VertexOrder(seq)
    pages: list[list[TypedEdge]] = [[] for _ in range(varmap.pages)]
    for e, (u, v) in enumerate(graph.edges):
        placed = False
        for i in range(varmap.pages):
            if not assignment[varmap.phi(i, e)]:
                continue
            for x in varmap.types:
                if assignment[varmap.tau(i, e, x)]:
                    a, b = (u, v) if order.position[u] < order.position[v] else (v, u)
                    pages[i].append(TypedEdge(a, b, x))
                    placed = True
                    break
            if placed:
                break
        if not placed:
            raise DecodeError(f"edge {(u, v)} has no page/type in the model")
    layout = LinearLayout(graph, order, [Page(p) for p in pages], kind).canonical()
    report = validate_layout(layout)
    if not report.valid:
        raise DecodeError(f"decoded layout is invalid: {[str(v) for v in report.violations[:3]]}")
    return layout


def is_vertex_transitive(graph: Graph, max_vertices: int = 64) -> bool:
    """Whether every vertex can be mapped to vertex 0 by an automorphism.

    Checked with networkx isomorphism tests on a marked copy; graphs larger
    than ``max_vertices`` are reported as not transitive (conservative).
    """
    n = graph.num_vertices
    if n <= 1:
        return True
    if n > max_vertices:
        return False
    degs = [0] * n
    for u, v in graph.edges:
        degs[u] += 1
        degs[v] += 1
    if len(set(degs)) != 1:
        return False
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(graph.edges)
    nx.set_node_attributes(g, {v: v == 0 for v in range(n)}, "mark")
    for w in range(1, n):
        h = g.copy()
        nx.set_node_attributes(h, {v: v == w for v in range(n)}, "mark")
        if not nx.is_isomorphic(g, h, node_match=lambda a, b: a["mark"] == b["mark"]):
            return False
    return True


@dataclass
class SearchStep:
    pages: int
    status: str
    seconds: float
    num_vars: int
    num_clauses: int


@dataclass
class SearchResult:
    pages: int | None
    layout: LinearLayout | None
    lower: int
    upper: int | None
    steps: list[SearchStep] = field(default_factory=list)
    status: str = "EXACT"           # EXACT, UNKNOWN (bracket only) or NONE (> hi)

    @property
    def bracket(self) -> tuple[int, int | None]:
        return self.lower, self.upper


def solve_layout(graph: Graph, pages: int, kind: LayoutKind, backend: str | None = None,
                 timeout: float | None = None, symmetry_breaking: bool | None = None,
                 fixed_order=None) -> tuple[SolveResult, CnfInstance, LinearLayout | None]:
    """Encode, solve and decode one (graph, pages, kind) instance."""
    if symmetry_breaking is None:
        symmetry_breaking = fixed_order is None and is_vertex_transitive(graph)
    cnf = encode(graph, pages, kind, fixed_order=fixed_order,
                 symmetry_breaking=symmetry_breaking)
    res = solve(cnf, backend, timeout)
    layout = decode(res.assignment, cnf.varmap, graph, kind) if res.sat else None
    return res, cnf, layout


def page_number_search(graph: Graph, kind: LayoutKind, lo: int = 1, hi: int | None = None,
                       backend: str | None = None, timeout: float | None = None,
                       use_bounds: bool = True, log_sink: TextIO | None = None,
                       graph_label: str = "", on_step: Callable[[SearchStep], None] | None = None
                       ) -> SearchResult:
    """Least p in [lo, hi] with a p-page layout, scanning upward from lo.

    The density lower bound raises ``lo`` when ``use_bounds``.  An UNKNOWN
    answer from the backend stops the scan and is reported with the
    bracket established so far.
    """
    kind = LayoutKind(kind)
    if lo < 1:
        raise LayoutError("lo must be at least 1")
    if hi is None:
        hi = max(lo, graph.num_edges)
    if lo > hi:
        raise LayoutError(f"empty range lo={lo} > hi={hi}")
    if graph.num_edges == 0:
        layout = LinearLayout(graph, VertexOrder.identity(graph.num_vertices), [Page()], kind)
        return SearchResult(1, layout, 1, 1)
    if use_bounds and graph.num_vertices >= 3:
        lo = max(lo, density_lower_bound(graph.num_vertices, graph.num_edges, kind))
    symmetric = is_vertex_transitive(graph)
    steps: list[SearchStep] = []
    lower = lo
    for p in range(lo, hi + 1):
        res, cnf, layout = solve_layout(graph, p, kind, backend, timeout, symmetric)
        step = SearchStep(p, res.status, round(res.seconds, 4), cnf.num_vars, cnf.num_clauses)
        steps.append(step)
        log.info("%s %s p=%d: %s in %.2fs", graph_label, kind, p, res.status, res.seconds)
        if on_step:
            on_step(step)
        if log_sink is not None:
            log_sink.write(json.dumps({
                "graph": graph_label, "kind": kind.value, "pages": p, "status": res.status,
                "seconds": step.seconds, "vars": cnf.num_vars, "clauses": cnf.num_clauses,
            }) + "\n")
        if res.status == "UNKNOWN":
            return SearchResult(None, None, lower, None, steps, status="UNKNOWN")
        if res.sat:
            return SearchResult(p, layout, p, p, steps)
        lower = p + 1
    return SearchResult(None, None, lower, None, steps, status="NONE")
