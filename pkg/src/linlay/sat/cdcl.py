"""A small deterministic CDCL SAT solver.

Two watched literals per clause, first-UIP learning with self-subsuming
minimisation, VSIDS with a lazy heap, phase saving, Luby restarts and
LBD-based deletion of learned clauses.  Fine for the few-hundred-thousand
clause formulas produced by the layout encoder.
"""

from __future__ import annotations

import heapq
import time
from typing import Sequence


def luby(i: int) -> int:
    """i-th element (1-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


class SolverTimeout(Exception):
    pass


class CDCLSolver:
    def __init__(self, num_vars: int, clauses: Sequence[Sequence[int]]):
        self.n = num_vars
        off = num_vars
        self.off = off
        self.val = [0] * (2 * num_vars + 1)          # indexed by lit + off
        self.level = [0] * (num_vars + 1)
        self.reason: list[list[int] | None] = [None] * (num_vars + 1)
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * num_vars + 1)]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.activity = [0.0] * (num_vars + 1)
        self.var_inc = 1.0
        self.phase = [False] * (num_vars + 1)
        self.heap = [(-0.0, v) for v in range(1, num_vars + 1)]
        heapq.heapify(self.heap)
        self.learnts: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.ok = True
        self.conflicts = 0
        self.decisions = 0
        self.propagations = 0
        units = []
        for c in clauses:
            c = list(dict.fromkeys(c))
            if any(-l in c for l in c):
                continue
            if not c:
                self.ok = False
                return
            if len(c) == 1:
                units.append(c[0])
            else:
                self.watches[c[0] + off].append(c)
                self.watches[c[1] + off].append(c)
        for u in units:
            v = self.val[u + off]
            if v == -1:
                self.ok = False
                return
            if v == 0:
                self._enqueue(u, None)
        if self._propagate() is not None:
            self.ok = False

    # -- assignment -------------------------------------------------------
    def _enqueue(self, lit: int, reason) -> None:
        off = self.off
        self.val[lit + off] = 1
        self.val[-lit + off] = -1
        v = abs(lit)
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        val, watches, off = self.val, self.watches, self.off
        trail = self.trail
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.propagations += 1
            false_lit = -p
            ws = watches[false_lit + off]
            i = j = 0
            nws = len(ws)
            while i < nws:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0], c[1] = c[1], false_lit
                first = c[0]
                if val[first + off] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if val[lk + off] != -1:
                        c[1], c[k] = lk, false_lit
                        watches[lk + off].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if val[first + off] == -1:
                        while i < nws:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        return c
                    self._enqueue(first, c)
            del ws[j:]
        return None

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        off = self.off
        start = self.trail_lim[lvl]
        for lit in self.trail[start:]:
            v = abs(lit)
            self.val[lit + off] = 0
            self.val[-lit + off] = 0
            self.reason[v] = None
            self.phase[v] = lit > 0
            heapq.heappush(self.heap, (-self.activity[v], v))
        del self.trail[start:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    # -- heuristics -------------------------------------------------------
    def _bump(self, v: int) -> None:
        a = self.activity[v] + self.var_inc
        self.activity[v] = a
        if a > 1e100:
            self.activity = [x * 1e-100 for x in self.activity]
            self.var_inc *= 1e-100
            self.heap = [(-self.activity[u], u) for u in range(1, self.n + 1)
                         if self.val[u + self.off] == 0]
            heapq.heapify(self.heap)
        elif self.val[v + self.off] == 0:
            heapq.heappush(self.heap, (-a, v))

    def _pick(self) -> int:
        heap, val, off, act = self.heap, self.val, self.off, self.activity
        while heap:
            a, v = heapq.heappop(heap)
            if val[v + off] == 0 and -a == act[v]:
                return v if self.phase[v] else -v
        for v in range(1, self.n + 1):
            if val[v + off] == 0:
                return v if self.phase[v] else -v
        return 0

    # -- learning ---------------------------------------------------------
    def _analyze(self, confl: list[int]) -> tuple[list[int], int]:
        seen = set()
        learnt = [0]
        counter = 0
        p = 0
        idx = len(self.trail) - 1
        cur = len(self.trail_lim)
        level = self.level
        c = confl
        while True:
            for q in c:
                if q == p:
                    continue
                v = abs(q)
                if v in seen or level[v] == 0:
                    continue
                seen.add(v)
                self._bump(v)
                if level[v] >= cur:
                    counter += 1
                else:
                    learnt.append(q)
            while abs(self.trail[idx]) not in seen:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            counter -= 1
            if counter == 0:
                break
            c = self.reason[abs(p)]
        learnt[0] = -p
        # drop literals implied by the rest of the clause
        keep = [learnt[0]]
        in_clause = {abs(l) for l in learnt}
        for lit in learnt[1:]:
            r = self.reason[abs(lit)]
            if r is None or any(abs(q) not in in_clause and level[abs(q)] > 0
                                for q in r if abs(q) != abs(lit)):
                keep.append(lit)
        learnt = keep
        if len(learnt) == 1:
            return learnt, 0
        mi = max(range(1, len(learnt)), key=lambda k: level[abs(learnt[k])])
        learnt[1], learnt[mi] = learnt[mi], learnt[1]
        return learnt, level[abs(learnt[1])]

    def _reduce(self) -> None:
        locked = {id(self.reason[abs(l)]) for l in self.trail if self.reason[abs(l)] is not None}
        ranked = sorted(self.learnts, key=lambda c: (self.lbd[id(c)], len(c)))
        keep_n = len(ranked) // 2
        keep, drop = ranked[:keep_n], ranked[keep_n:]
        dropped = set()
        for c in drop:
            if id(c) in locked or self.lbd[id(c)] <= 2:
                keep.append(c)
            else:
                dropped.add(id(c))
        if not dropped:
            return
        for ws in self.watches:
            if ws:
                ws[:] = [c for c in ws if id(c) not in dropped]
        for k in dropped:
            self.lbd.pop(k, None)
        self.learnts = keep

    # -- main loop ----------------------------------------------------------
    def solve(self, time_limit: float | None = None) -> bool:
        """Return True (SAT) / False (UNSAT); raise SolverTimeout on timeout."""
        if not self.ok:
            return False
        deadline = None if time_limit is None else time.monotonic() + time_limit
        restart_no = 1
        budget = 100 * luby(restart_no)
        since_restart = 0
        max_learnts = max(2000, self.n)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                since_restart += 1
                if not self.trail_lim:
                    self.ok = False
                    return False
                learnt, back = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    off = self.off
                    self.watches[learnt[0] + off].append(learnt)
                    self.watches[learnt[1] + off].append(learnt)
                    self.learnts.append(learnt)
                    self.lbd[id(learnt)] = len({self.level[abs(l)] for l in learnt})
                    self._enqueue(learnt[0], learnt)
                self.var_inc *= 1.0 / 0.95
                if deadline is not None and self.conflicts % 64 == 0 and time.monotonic() > deadline:
                    raise SolverTimeout()
                continue
            if since_restart >= budget:
                restart_no += 1
                budget = 100 * luby(restart_no)
                since_restart = 0
                self._cancel_until(0)
                if len(self.learnts) > max_learnts:
                    self._reduce()
                    max_learnts = int(max_learnts * 1.1)
                continue
            lit = self._pick()
            if lit == 0:
                return True
            self.decisions += 1
            if deadline is not None and self.decisions % 256 == 0 and time.monotonic() > deadline:
                raise SolverTimeout()
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, None)

    def model(self) -> list[bool]:
        off = self.off
        return [False] + [self.val[v + off] == 1 for v in range(1, self.n + 1)]
