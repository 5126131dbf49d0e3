"""DIMACS CNF output and solver model parsing."""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from ..core import LayoutError


class ModelParseError(LayoutError):
    pass


def write_dimacs(num_vars: int, clauses: Iterable[list[int]], sink: TextIO,
                 comments: Iterable[str] = ()) -> None:
    clauses = list(clauses)
    for c in comments:
        sink.write(f"c {c}\n")
    sink.write(f"p cnf {num_vars} {len(clauses)}\n")
    for cl in clauses:
        sink.write(" ".join(map(str, cl)))
        sink.write(" 0\n")


def dimacs_string(num_vars: int, clauses: Iterable[list[int]]) -> str:
    buf = io.StringIO()
    write_dimacs(num_vars, clauses, buf)
    return buf.getvalue()


def read_dimacs(text: str) -> tuple[int, list[list[int]]]:
    num_vars = num_clauses = None
    clauses: list[list[int]] = []
    cur: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ModelParseError(f"line {lineno}: bad header {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ModelParseError(f"line {lineno}: clause before header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                if abs(lit) > num_vars:
                    raise ModelParseError(f"line {lineno}: literal {lit} exceeds {num_vars}")
                cur.append(lit)
    if cur:
        clauses.append(cur)
    if num_vars is None:
        raise ModelParseError("missing 'p cnf' header")
    if num_clauses != len(clauses):
        raise ModelParseError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return num_vars, clauses


def parse_model(text: str, num_vars: int) -> tuple[str, list[bool] | None]:
    """Parse solver output into (status, assignment).

    ``status`` is ``"SAT"``, ``"UNSAT"`` or ``"UNKNOWN"``.  The assignment is
    a list indexed by variable (index 0 unused).  Accepts competition output
    (``s`` / ``v`` lines) and bare literal lists, optionally 0-terminated.
    """
    status = None
    lits: list[int] = []
    terminated = False
    saw_literals = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word == "SATISFIABLE":
                status = "SAT"
            elif word == "UNSATISFIABLE":
                status = "UNSAT"
            else:
                status = "UNKNOWN"
            continue
        if line in ("SAT", "SATISFIABLE"):
            status = "SAT"
            continue
        if line in ("UNSAT", "UNSATISFIABLE"):
            status = "UNSAT"
            continue
        if line.startswith("v"):
            line = line[1:]
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ModelParseError(f"line {lineno}: unexpected token {tok!r}") from None
            if lit == 0:
                terminated = True
                continue
            if abs(lit) > num_vars:
                raise ModelParseError(f"line {lineno}: literal {lit} out of range 1..{num_vars}")
            lits.append(lit)
            saw_literals = True
    if status is None:
        status = "SAT" if saw_literals else "UNKNOWN"
    if status != "SAT":
        return status, None
    assignment: list[bool | None] = [None] * (num_vars + 1)
    for lit in lits:
        assignment[abs(lit)] = lit > 0
    missing = [v for v in range(1, num_vars + 1) if assignment[v] is None]
    if missing and not terminated:
        raise ModelParseError(
            f"truncated model: {len(missing)} variables unassigned (first: {missing[0]})")
    # variables a solver omits after a terminating 0 are don't-cares
    return "SAT", [bool(x) for x in assignment]
