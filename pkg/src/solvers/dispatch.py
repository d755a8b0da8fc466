"""Single entry point that runs any algorithm on an instance."""
import logging
from typing import Callable, Optional

from numtheory.modmath import derive_seed, make_rng
from numtheory.smooth import BoundSpec, smoothness_bound

from .double_index import solve_double_index_calculus
from .generic import solve_bsgs, solve_pohlig_hellman, solve_pollard_rho
from .index_calculus import solve_index_calculus
from .types import Algorithm, DlpInstance, RoundSnapshot, SolveResult, SolverBudget

logger = logging.getLogger(__name__)


def resolve_bound(inst: DlpInstance, bound: Optional[int] = None,
                  spec: Optional[BoundSpec] = None) -> int:
    """Explicit bound if given, else the formula bound for p."""
    if bound is not None:
        return bound
    return smoothness_bound(inst.p, spec or BoundSpec(multiplier="0.5"))


def solve(inst: DlpInstance, algorithm="dic", bound: Optional[int] = None,
          spec: Optional[BoundSpec] = None, budget: Optional[SolverBudget] = None,
          seed: int = 0,
          on_round: Optional[Callable[[RoundSnapshot], None]] = None) -> SolveResult:
    """Run ``algorithm`` on ``inst``.

    Each random stream (relations for g, relations for b, rho walks) gets
    its own generator derived from ``seed``, so dic and dic-parallel see the
    same relations.
    """
    algorithm = Algorithm(algorithm)
    budget = budget or SolverBudget()
    rng_g = make_rng(derive_seed(seed, "g"))
    rng_b = make_rng(derive_seed(seed, "b"))

    if algorithm.uses_factor_base:
        B = resolve_bound(inst, bound, spec)
        logger.debug(f"{algorithm.value}: p={inst.p} B={B}")
        if algorithm is Algorithm.IC:
            return solve_index_calculus(inst, B, budget, rng_g)
        return solve_double_index_calculus(
            inst, B,
            parallel=algorithm is Algorithm.DIC_PARALLEL,
            budget=budget, rng_g=rng_g, rng_b=rng_b, on_round=on_round,
        )
    if algorithm is Algorithm.BSGS:
        return solve_bsgs(inst)
    if algorithm is Algorithm.RHO:
        return solve_pollard_rho(inst, make_rng(derive_seed(seed, "rho")), budget)
    return solve_pohlig_hellman(inst)
