"""Generic-group baselines: baby-step giant-step, Pollard rho, Pohlig-Hellman."""
import logging
import math
import random
import time
from typing import Optional, Tuple

from numtheory.errors import BudgetExceeded, InconsistentState, InvalidArgument, NoSolution
from numtheory.modmath import crt_combine, factor_integer, multiplicative_order, solve_linear_congruence

from .types import Algorithm, DlpInstance, SolveResult, SolverBudget

logger = logging.getLogger(__name__)

# below this subgroup order rho walks are too short to be useful
RHO_MIN_ORDER = 64
# collisions with more congruence solutions than this are treated as degenerate
RHO_MAX_SOLUTIONS = 1 << 12


def _bsgs(g: int, h: int, order: int, p: int) -> Tuple[Optional[int], int]:
    """Smallest x in [0, order) with ``g**x = h``, plus the number of steps taken."""
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    baby = {}
    e = 1
    for j in range(m):
        baby.setdefault(e, j)
        e = e * g % p
    giant = pow(pow(g, m, p), -1, p)
    gamma = h % p
    for i in range(m):
        j = baby.get(gamma)
        if j is not None:
            return i * m + j, m + i + 1
        gamma = gamma * giant % p
    return None, 2 * m


def solve_bsgs(inst: DlpInstance, order_hint: Optional[int] = None) -> SolveResult:
    """Meet in the middle with ceil(sqrt(order)) baby steps; returns the smallest x."""
    start = time.perf_counter()
    if inst.b == 1:
        return SolveResult(0, Algorithm.BSGS, elapsed=time.perf_counter() - start)
    order = order_hint if order_hint is not None else inst.p - 1
    if order < 1 or pow(inst.g, order, inst.p) != 1:
        raise InvalidArgument(f"order hint {order} is not a multiple of the order of {inst.g}")

    x, steps = _bsgs(inst.g, inst.b, order, inst.p)
    if x is None:
        raise NoSolution(f"{inst.b} is not in the subgroup generated by {inst.g} mod {inst.p}")
    if not inst.verify(x):
        raise InconsistentState(f"baby-step giant-step returned unverifiable x={x}")
    return SolveResult(x, Algorithm.BSGS, candidates_tested=steps, rounds=1,
                       elapsed=time.perf_counter() - start)


def _rho_step(y: int, a: int, c: int, inst: DlpInstance, order: int) -> Tuple[int, int, int]:
    branch = y % 3
    if branch == 0:
        return y * y % inst.p, 2 * a % order, 2 * c % order
    if branch == 1:
        return y * inst.g % inst.p, (a + 1) % order, c
    return y * inst.b % inst.p, a, (c + 1) % order


def solve_pollard_rho(inst: DlpInstance, rng: Optional[random.Random] = None,
                      budget: Optional[SolverBudget] = None) -> SolveResult:
    """Pollard rho over the subgroup generated by g with Floyd cycle detection.

    Each walk starts from a random ``g**a * b**c``. A collision gives
    ``(c1 - c2) * x = a2 - a1`` modulo the subgroup order; its solutions are
    verified, and degenerate collisions restart the walk.
    """
    start = time.perf_counter()
    if inst.b == 1:
        return SolveResult(0, Algorithm.RHO, elapsed=time.perf_counter() - start)

    budget = budget or SolverBudget()
    rng = rng or random.Random()
    p = inst.p
    order = multiplicative_order(inst.g, p, inst.fact)
    if pow(inst.b, order, p) != 1:
        raise NoSolution(f"{inst.b} is not in the subgroup generated by {inst.g} mod {p}")

    if order < RHO_MIN_ORDER:
        x, steps = _bsgs(inst.g, inst.b, order, p)
        return SolveResult(x, Algorithm.RHO, candidates_tested=steps, rounds=1,
                           elapsed=time.perf_counter() - start)

    walk_limit = 16 * math.isqrt(order) + 1024
    steps = 0
    for attempt in range(1, budget.rho_restarts + 1):
        a, c = rng.randrange(order), rng.randrange(order)
        y = pow(inst.g, a, p) * pow(inst.b, c, p) % p
        tortoise = (y, a, c)
        hare = (y, a, c)
        for _ in range(walk_limit):
            tortoise = _rho_step(*tortoise, inst, order)
            hare = _rho_step(*_rho_step(*hare, inst, order), inst, order)
            steps += 3
            if tortoise[0] == hare[0]:
                break
        else:
            logger.debug(f"rho walk {attempt} hit {walk_limit} steps without a collision")
            continue

        _, a1, c1 = tortoise
        _, a2, c2 = hare
        solutions = solve_linear_congruence(c1 - c2, a2 - a1, order)
        if 0 < len(solutions) <= RHO_MAX_SOLUTIONS:
            for x in solutions:
                if inst.verify(x):
                    return SolveResult(x, Algorithm.RHO, candidates_tested=steps, rounds=attempt,
                                       elapsed=time.perf_counter() - start)
        logger.debug(f"rho walk {attempt}: degenerate collision ({len(solutions)} solutions), restarting")

    raise BudgetExceeded(f"Pollard rho failed after {budget.rho_restarts} walks")


def solve_pohlig_hellman(inst: DlpInstance) -> SolveResult:
    """Reduce to prime-order subgroups, lift digit by digit, glue with CRT."""
    start = time.perf_counter()
    if inst.b == 1:
        return SolveResult(0, Algorithm.PH, elapsed=time.perf_counter() - start)

    p, g, b = inst.p, inst.g, inst.b
    order = multiplicative_order(g, p, inst.fact)
    if pow(b, order, p) != 1:
        raise NoSolution(f"{b} is not in the subgroup generated by {g} mod {p}")

    residues, moduli = [], []
    steps = 0
    for q, e in factor_integer(order).factors:
        qe = q ** e
        g_i = pow(g, order // qe, p)
        b_i = pow(b, order // qe, p)
        gamma = pow(g_i, q ** (e - 1), p)
        x_i = 0
        for k in range(e):
            h = pow(pow(g_i, (qe - x_i) % qe, p) * b_i % p, q ** (e - 1 - k), p)
            digit, taken = _bsgs(gamma, h, q, p)
            steps += taken
            if digit is None:
                raise NoSolution(f"no digit {k} modulo {q}")
            x_i += digit * q ** k
        residues.append(x_i)
        moduli.append(qe)

    x = crt_combine(residues, moduli)
    if not inst.verify(x):
        raise InconsistentState(f"Pohlig-Hellman produced unverifiable x={x}")
    return SolveResult(x, Algorithm.PH, candidates_tested=steps, rounds=len(moduli),
                       elapsed=time.perf_counter() - start)
