"""Double index calculus.

Relations are collected for both g and b. As soon as some factor-base prime
has a verified log to each base, ``g**alpha = prime = b**beta`` and x follows
from ``alpha = x * beta``. Only the logs needed for a single common prime are
required, and the two per-base pipelines can run concurrently.

When the subgroup of b holds no factor-base prime, no log to b exists; the
solver then works on b * g**s for a random s and subtracts s at the end.
"""
import logging
import random
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Optional, Tuple

from numtheory.errors import BudgetExceeded, InconsistentState, NoSolution
from numtheory.modmath import mod_inv, multiplicative_order, solve_linear_congruence
from numtheory.smooth import build_factor_base

from .pipeline import LogTablePipeline
from .types import Algorithm, DlpInstance, RoundSnapshot, SolveResult, SolverBudget

logger = logging.getLogger(__name__)

MAX_TARGET_SHIFTS = 64


def verify_solution(inst: DlpInstance, x: int) -> bool:
    return inst.verify(x)


def _derive_modulo(alpha: int, beta: int, n: int, inst: DlpInstance) -> Optional[int]:
    inv = mod_inv(beta, n)
    if inv is not None:
        x = alpha * inv % n
        return x if verify_solution(inst, x) else None
    for x in solve_linear_congruence(beta, alpha, n):
        if verify_solution(inst, x):
            return x
    return None


def derive_x_from_match(alpha: int, beta: int, n: int, inst: DlpInstance) -> Optional[int]:
    """x with ``beta * x = alpha (mod n)`` that verifies, reduced modulo the order of g.

    Falls back to the order of g as modulus when nothing verifies modulo n.
    None tells the caller to keep collecting.
    """
    order = multiplicative_order(inst.g, inst.p, inst.fact)
    x = _derive_modulo(alpha, beta, n, inst)
    if x is None and order < n and n % order == 0:
        x = _derive_modulo(alpha % order, beta % order, order, inst)
    if x is None:
        return None
    return x % order


def _reaches_base(order: int, p: int, base) -> bool:
    return any(pow(q, order, p) == 1 for q in base.primes)


def _shift_target(inst: DlpInstance, base, order_g: int, rng: random.Random) -> Tuple[int, int, int]:
    """``(s, b * g**s, order)`` for a shifted target whose subgroup holds a factor-base prime.

    Falls back to the unshifted target after MAX_TARGET_SHIFTS draws.
    """
    p, g = inst.p, inst.g
    for _ in range(MAX_TARGET_SHIFTS):
        s = rng.randrange(1, order_g)
        target = inst.b * pow(g, s, p) % p
        if target == 1:
            continue
        order = multiplicative_order(target, p, inst.fact)
        if _reaches_base(order, p, base):
            return s, target, order
    logger.warning(f"no shift of b={inst.b} reaches the factor base in {MAX_TARGET_SHIFTS} draws")
    return 0, inst.b, multiplicative_order(inst.b, p, inst.fact)


def _make_executor(kind: str) -> Executor:
    if kind == "process":
        return ProcessPoolExecutor(max_workers=2)
    return ThreadPoolExecutor(max_workers=2, thread_name_prefix="dic")


def solve_double_index_calculus(inst: DlpInstance, B: int, parallel: bool = False,
                                budget: Optional[SolverBudget] = None,
                                rng_g: Optional[random.Random] = None,
                                rng_b: Optional[random.Random] = None,
                                on_round: Optional[Callable[[RoundSnapshot], None]] = None) -> SolveResult:
    start = time.perf_counter()
    algorithm = Algorithm.DIC_PARALLEL if parallel else Algorithm.DIC
    if inst.b == 1:
        return SolveResult(0, algorithm, elapsed=time.perf_counter() - start)

    budget = budget or SolverBudget()
    p, g, b = inst.p, inst.g, inst.b
    order_g = multiplicative_order(g, p, inst.fact)
    if pow(b, order_g, p) != 1:
        raise NoSolution(f"{b} is not a power of {g} mod {p}")

    base = build_factor_base(B, p)
    rng_b = rng_b or random.Random()
    shift, target, order_b = 0, b, multiplicative_order(b, p, inst.fact)
    if not _reaches_base(order_b, p, base):
        # no log to b exists for any factor-base prime
        shift, target, order_b = _shift_target(inst, base, order_g, rng_b)
        logger.debug(f"subgroup of b={b} misses the factor base, solving for b*g^{shift} = {target}")
    shifted = inst if shift == 0 else DlpInstance(p, g, target)

    pipe_g = LogTablePipeline(g, p, base, order_g, rng_g or random.Random(), budget, name="g")
    pipe_b = LogTablePipeline(target, p, base, order_b, rng_b, budget, name="b")
    n = p - 1
    failed = set()
    executor = _make_executor(budget.executor) if parallel else None
    logger.debug(f"double index calculus on p={p}: B={B}, k={base.k}, parallel={parallel}")

    try:
        for round_no in range(1, budget.max_rounds + 1):
            if executor is not None:
                future_g = executor.submit(pipe_g.run_round)
                future_b = executor.submit(pipe_b.run_round)
                pipe_g = future_g.result()
                pipe_b = future_b.result()
            else:
                pipe_g.run_round()
                pipe_b.run_round()

            matches = pipe_g.table.intersection(pipe_b.table)
            if len(pipe_g.table) + len(pipe_b.table) >= base.k + 1 and not matches:
                raise InconsistentState(
                    f"{len(pipe_g.table)} + {len(pipe_b.table)} logs over {base.k} primes without a common prime"
                )
            if on_round is not None:
                on_round(RoundSnapshot(round_no, dict(pipe_g.table.entries),
                                       dict(pipe_b.table.entries), tuple(matches), base.k))

            for prime in matches:
                if prime in failed:
                    continue
                alpha, beta = pipe_g.table[prime], pipe_b.table[prime]
                x = derive_x_from_match(alpha, beta, n, shifted)
                if x is not None and shift:
                    x = (x - shift) % order_g
                if x is None or not verify_solution(inst, x):
                    logger.warning(f"match on {prime} (alpha={alpha}, beta={beta}) gave no verifying x")
                    failed.add(prime)
                    continue
                logger.debug(f"matched prime {prime} in round {round_no}: x={x}")
                return SolveResult(
                    x=x,
                    algorithm=algorithm,
                    candidates_tested=pipe_g.candidates_tested + pipe_b.candidates_tested,
                    smooth_found=pipe_g.smooth_found + pipe_b.smooth_found,
                    rounds=round_no,
                    elapsed=time.perf_counter() - start,
                    matched_prime=prime,
                )
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    raise BudgetExceeded(f"no usable match after {budget.max_rounds} rounds")
