"""
Solvers Module

Discrete logarithm algorithms over Z_p^*.

## Files

- `types.py` - DlpInstance, PartialLogTable, SolveResult, SolverBudget, Algorithm
- `pipeline.py` - Per-base relation round pipeline (LogTablePipeline)
- `index_calculus.py` - Classic index calculus
- `double_index.py` - Double index calculus, match derivation, verification
- `generic.py` - Baby-step giant-step, Pollard rho, Pohlig-Hellman
- `dispatch.py` - solve() entry point used by the CLI and the bench
- `__init__.py` - Module initialization
"""

from .types import (
    Algorithm,
    DlpInstance,
    PartialLogTable,
    RoundSnapshot,
    SolveResult,
    SolverBudget,
)
from .pipeline import LogTablePipeline
from .index_calculus import solve_index_calculus
from .double_index import derive_x_from_match, solve_double_index_calculus, verify_solution
from .generic import solve_bsgs, solve_pohlig_hellman, solve_pollard_rho
from .dispatch import resolve_bound, solve

__all__ = [
    'Algorithm',
    'DlpInstance',
    'PartialLogTable',
    'RoundSnapshot',
    'SolveResult',
    'SolverBudget',
    'LogTablePipeline',
    'solve_index_calculus',
    'solve_double_index_calculus',
    'derive_x_from_match',
    'verify_solution',
    'solve_bsgs',
    'solve_pollard_rho',
    'solve_pohlig_hellman',
    'resolve_bound',
    'solve',
]
