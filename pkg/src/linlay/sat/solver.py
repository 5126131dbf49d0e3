"""Solver backends: the builtin CDCL solver or an external DIMACS solver."""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
import time
from dataclasses import dataclass, field

from .cdcl import CDCLSolver, SolverTimeout
from .dimacs import ModelParseError, parse_model, write_dimacs
from .encoder import CnfInstance

SOLVER_ENV = "LINLAY_SAT_CMD"
BUILTIN_MAX_CLAUSES = 200_000


@dataclass
class SolveResult:
    status: str                       # "SAT", "UNSAT" or "UNKNOWN"
    assignment: list[bool] | None = None
    seconds: float = 0.0
    backend: str = "builtin"
    diagnostics: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def sat(self) -> bool:
        return self.status == "SAT"


def default_backend() -> str:
    """External command from the environment if set, else ``builtin``."""
    return os.environ.get(SOLVER_ENV) or "builtin"


def solve(cnf: CnfInstance, backend: str | None = None, timeout: float | None = None,
          max_clauses: int = BUILTIN_MAX_CLAUSES) -> SolveResult:
    """Solve ``cnf``.

    ``backend`` is ``"builtin"`` or a shell command template containing
    ``{cnf}``, e.g. ``"kissat -q {cnf}"``.  Timeouts and failures of the
    external command give an ``UNKNOWN`` result with diagnostics.
    """
    backend = backend or default_backend()
    if cnf.trivial:
        return SolveResult("SAT", [False] * (cnf.num_vars + 1), backend=backend,
                           diagnostics="empty edge set")
    if backend == "builtin":
        return _solve_builtin(cnf, timeout, max_clauses)
    return _solve_external(cnf, backend, timeout)


def _solve_builtin(cnf: CnfInstance, timeout: float | None, max_clauses: int) -> SolveResult:
    if cnf.num_clauses > max_clauses:
        return SolveResult("UNKNOWN", diagnostics=(
            f"{cnf.num_clauses} clauses exceed the builtin cap of {max_clauses}; "
            f"use an external solver via ${SOLVER_ENV}"))
    t0 = time.monotonic()
    solver = CDCLSolver(cnf.num_vars, cnf.clauses)
    try:
        sat = solver.solve(time_limit=timeout)
    except SolverTimeout:
        return SolveResult("UNKNOWN", seconds=time.monotonic() - t0,
                           diagnostics=f"builtin solver timed out after {timeout}s",
                           stats={"conflicts": solver.conflicts})
    stats = {"conflicts": solver.conflicts, "decisions": solver.decisions}
    dt = time.monotonic() - t0
    if sat:
        return SolveResult("SAT", solver.model(), dt, stats=stats)
    return SolveResult("UNSAT", None, dt, stats=stats)


def _solve_external(cnf: CnfInstance, template: str, timeout: float | None) -> SolveResult:
    if "{cnf}" not in template:
        return SolveResult("UNKNOWN", backend=template,
                           diagnostics="solver command template lacks a {cnf} placeholder")
    with tempfile.TemporaryDirectory(prefix="linlay-") as tmp:
        path = os.path.join(tmp, "formula.cnf")
        with open(path, "w") as fh:
            write_dimacs(cnf.num_vars, cnf.clauses, fh)
        cmd = shlex.split(template.replace("{cnf}", shlex.quote(path)))
        t0 = time.monotonic()
        try:
            proc = subprocess.run(cmd, capture_output=True, text=True, timeout=timeout)
        except subprocess.TimeoutExpired:
            return SolveResult("UNKNOWN", seconds=time.monotonic() - t0, backend=template,
                               diagnostics=f"external solver timed out after {timeout}s")
        except OSError as exc:
            return SolveResult("UNKNOWN", backend=template,
                               diagnostics=f"could not run solver: {exc}")
        dt = time.monotonic() - t0
    # SAT competition convention: exit 10 = SAT, 20 = UNSAT
    if proc.returncode not in (0, 10, 20):
        return SolveResult("UNKNOWN", seconds=dt, backend=template,
                           diagnostics=f"solver exited with {proc.returncode}: {proc.stderr[-500:]}")
    try:
        status, assignment = parse_model(proc.stdout, cnf.num_vars)
    except ModelParseError as exc:
        return SolveResult("UNKNOWN", seconds=dt, backend=template,
                           diagnostics=f"unreadable solver output: {exc}")
    return SolveResult(status, assignment, dt, backend=template)
