"""Classic index calculus: all factor-base logs first, then one relation involving b."""
import logging
import random
import time
from typing import Optional

from numtheory.errors import BudgetExceeded, GeneralityFailure, NoSolution
from numtheory.modmath import multiplicative_order
from numtheory.smooth import build_factor_base, factor_over_base, is_smooth

from .pipeline import LogTablePipeline
from .types import Algorithm, DlpInstance, SolveResult, SolverBudget

logger = logging.getLogger(__name__)


def solve_index_calculus(inst: DlpInstance, B: int, budget: Optional[SolverBudget] = None,
                         rng: Optional[random.Random] = None) -> SolveResult:
    """Solve ``inst`` with factor base bound ``B``.

    Phase 1 collects relations for g until every factor-base prime has a
    verified log. Phase 2 draws t until ``b * g**t mod p`` is smooth, giving
    ``x = sum(e_i * log_g(p_i)) - t`` modulo the order of g.

    Raises GeneralityFailure when the system keeps forcing values that fail
    verification (some prime has no log to base g), BudgetExceeded at the
    round or candidate cap.
    """
    start = time.perf_counter()
    if inst.b == 1:
        return SolveResult(0, Algorithm.IC, elapsed=time.perf_counter() - start)

    budget = budget or SolverBudget()
    rng = rng or random.Random()
    p, g, b = inst.p, inst.g, inst.b
    order = multiplicative_order(g, p, inst.fact)
    if pow(b, order, p) != 1:
        raise NoSolution(f"{b} is not a power of {g} mod {p}")

    base = build_factor_base(B, p)
    pipeline = LogTablePipeline(g, p, base, order, rng, budget, name="ic")
    while not pipeline.complete:
        if pipeline.rounds >= budget.max_rounds:
            raise BudgetExceeded(
                f"{budget.max_rounds} rounds without all {base.k} logs "
                f"({len(pipeline.table)} verified)"
            )
        pipeline.run_round()
        if pipeline.suspect_rounds >= budget.generality_rounds:
            missing = pipeline.missing()
            logger.warning(f"no log base {g} for primes {missing} after {pipeline.rounds} rounds")
            raise GeneralityFailure(
                f"{pipeline.suspect_rounds} rounds forced logs that fail verification; "
                f"unresolved primes {missing}",
                missing=missing,
            )

    logs = [pipeline.table[q] for q in base.primes]
    logger.debug(f"phase 1 done after {pipeline.rounds} rounds, {pipeline.candidates_tested} candidates")

    tested = 0
    allowance = max(budget.max_candidates - pipeline.candidates_tested, 1)
    while True:
        if tested >= allowance:
            raise BudgetExceeded(f"no smooth b*g^t found in {tested} candidates")
        t = rng.randint(1, p - 2)
        tested += 1
        value = b * pow(g, t, p) % p
        if not is_smooth(value, base):
            continue
        exponents = factor_over_base(value, base)
        x = (sum(e * l for e, l in zip(exponents, logs)) - t) % order
        if inst.verify(x):
            break
        logger.debug(f"phase 2 candidate t={t} gave unverifiable x={x}")

    return SolveResult(
        x=x,
        algorithm=Algorithm.IC,
        candidates_tested=pipeline.candidates_tested + tested,
        smooth_found=pipeline.smooth_found + 1,
        rounds=pipeline.rounds,
        elapsed=time.perf_counter() - start,
    )
