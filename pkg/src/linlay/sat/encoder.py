"""CNF encoding of "G has a p-page layout of a given kind".

Variables:
    sigma(u, v)   u left of v; one variable per unordered pair, with
                  sigma(v, u) represented as the negated literal
    phi(i, e)     edge e on page i
    tau(i, e, x)  edge e has type x on page i (allowed types only)
    chi(e, f)     e and f share a page (only with ``emit_chi``)

Forbidden configurations are emitted per page, per edge pair and per type
pair as one clause for every relative order of the endpoints that
:func:`linlay.core.conflicts` rejects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from ..core import EdgeType, Graph, LayoutError, LayoutKind, conflicts


@dataclass
class VarMap:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    pages: int
    types: tuple[EdgeType, ...]
    sigma_ids: dict[tuple[int, int], int] = field(default_factory=dict)
    phi_ids: dict[tuple[int, int], int] = field(default_factory=dict)
    tau_ids: dict[tuple[int, int, EdgeType], int] = field(default_factory=dict)
    chi_ids: dict[tuple[int, int], int] = field(default_factory=dict)
    num_vars: int = 0

    def _new(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def sigma(self, u: int, v: int) -> int:
        """Literal for 'u precedes v'."""
        if u < v:
            return self.sigma_ids[(u, v)]
        return -self.sigma_ids[(v, u)]

    def phi(self, page: int, e: int) -> int:
        return self.phi_ids[(page, e)]

    def tau(self, page: int, e: int, x: EdgeType) -> int:
        return self.tau_ids[(page, e, EdgeType(x))]

    def chi(self, e: int, f: int) -> int:
        return self.chi_ids[(min(e, f), max(e, f))]


@dataclass
class CnfInstance:
    num_vars: int
    clauses: list[list[int]]
    varmap: VarMap
    kind: LayoutKind
    trivial: bool = False

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@lru_cache(maxsize=None)
def forbidden_orders(shape: tuple[int, int, int, int], x: EdgeType, y: EdgeType
                     ) -> tuple[tuple[int, ...], ...]:
    """Relative orders of the endpoint labels that make (x, y) conflict.

    ``shape`` names the endpoints of two edges with small labels, e.g.
    (0, 1, 2, 3) for independent edges or (0, 1, 0, 2) for edges sharing
    their first endpoint.  Each returned tuple lists the labels left to right.
    """
    labels = sorted(set(shape))
    out = []
    for perm in permutations(labels):
        rank = {lab: r for r, lab in enumerate(perm)}
        a, b = sorted((rank[shape[0]], rank[shape[1]]))
        c, d = sorted((rank[shape[2]], rank[shape[3]]))
        if conflicts(a, b, x, c, d, y):
            out.append(perm)
    return tuple(out)


def _shape(e: tuple[int, int], f: tuple[int, int]) -> tuple[tuple[int, int, int, int], list[int]]:
    verts: list[int] = []
    for v in (*e, *f):
        if v not in verts:
            verts.append(v)
    lab = {v: i for i, v in enumerate(verts)}
    return (lab[e[0]], lab[e[1]], lab[f[0]], lab[f[1]]), verts


def encode(graph: Graph, pages: int, kind: LayoutKind, *, fixed_order=None,
           symmetry_breaking: bool = False, emit_chi: bool = False,
           fix_first_edge: bool = True) -> CnfInstance:
    """Build the CNF.

    ``symmetry_breaking`` places vertex 0 first; that is only sound for
    graphs where every vertex is equivalent (K_n, K_{n,n}), so callers
    decide.  ``fix_first_edge`` puts edge 0 on page 0, which is always sound
    because pages are interchangeable.
    """
    kind = LayoutKind(kind)
    if pages <= 0:
        raise LayoutError(f"page count must be positive (got {pages})")
    types = kind.allowed_types
    n = graph.num_vertices
    edges = graph.edges
    vm = VarMap(n, edges, pages, types)
    if not edges:
        return CnfInstance(0, [], vm, kind, trivial=True)

    for u, v in combinations(range(n), 2):
        vm.sigma_ids[(u, v)] = vm._new()
    for i in range(pages):
        for e in range(len(edges)):
            vm.phi_ids[(i, e)] = vm._new()
    for i in range(pages):
        for e in range(len(edges)):
            for x in types:
                vm.tau_ids[(i, e, x)] = vm._new()
    if emit_chi:
        for e, f in combinations(range(len(edges)), 2):
            vm.chi_ids[(e, f)] = vm._new()

    clauses: list[list[int]] = []
    s = vm.sigma

    # linear order: no directed 3-cycles in the sigma tournament
    for u, v, w in combinations(range(n), 3):
        clauses.append([-s(u, v), -s(v, w), -s(w, u)])
        clauses.append([-s(u, w), -s(w, v), -s(v, u)])

    for e in range(len(edges)):
        clauses.append([vm.tau(i, e, x) for i in range(pages) for x in types])
        clauses.append([vm.phi(i, e) for i in range(pages)])
        for i in range(pages):
            clauses.append([-vm.phi(i, e)] + [vm.tau(i, e, x) for x in types])
            for x in types:
                clauses.append([-vm.tau(i, e, x), vm.phi(i, e)])

    if emit_chi:
        for e, f in combinations(range(len(edges)), 2):
            c = vm.chi(e, f)
            for i in range(pages):
                clauses.append([-vm.phi(i, e), -vm.phi(i, f), c])

    for ei, fi in combinations(range(len(edges)), 2):
        shape, verts = _shape(edges[ei], edges[fi])
        for x in types:
            for y in types:
                orders = forbidden_orders(shape, x, y)
                if not orders:
                    continue
                chains = []
                for perm in orders:
                    ws = [verts[lab] for lab in perm]
                    chains.append([-s(ws[k], ws[k + 1]) for k in range(len(ws) - 1)])
                for i in range(pages):
                    head = [-vm.phi(i, ei), -vm.phi(i, fi), -vm.tau(i, ei, x), -vm.tau(i, fi, y)]
                    for chain in chains:
                        clauses.append(head + chain)

    if fixed_order is not None:
        seq = list(fixed_order.sequence if hasattr(fixed_order, "sequence") else fixed_order)
        if sorted(seq) != list(range(n)):
            raise LayoutError("fixed_order must be a permutation of the vertices")
        for r in range(n - 1):
            clauses.append([s(seq[r], seq[r + 1])])
    elif symmetry_breaking and n > 1:
        for v in range(1, n):
            clauses.append([s(0, v)])
    if fix_first_edge:
        clauses.append([vm.phi(0, 0)])

    return CnfInstance(vm.num_vars, clauses, vm, kind)
