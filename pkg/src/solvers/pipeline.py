"""Round pipeline that grows a verified log table for one base element."""
import logging
import random
from typing import List, Optional

from numtheory.errors import BudgetExceeded, InvalidArgument
from numtheory.linsys import EquationSystem, PartialSolution, solve_partial
from numtheory.smooth import FactorBase, collect_relations

from .types import PartialLogTable, SolverBudget


class LogTablePipeline:
    """Collects relations for ``base_elem`` in rounds of k and keeps the verified logs.

    With d = (p - 1) / order, there is a generator h of Z_p^* with
    ``h**d = base_elem``. A relation ``base_elem**t = prod(q_i**e_i)`` then
    reads ``sum(e_i * log_h(q_i)) = d * t (mod p - 1)``, which the true logs
    to h always satisfy, whatever the order of ``base_elem``. A prime lies in
    the subgroup of ``base_elem`` exactly when its log to h is a multiple of
    d, and that log does not depend on the choice of h; its log to
    ``base_elem`` is the quotient. Primes outside the subgroup never verify.

    The object is picklable, so a round can run in a worker thread or
    process; callers keep the instance a round returns.
    """

    def __init__(self, base_elem: int, p: int, base: FactorBase, order: int,
                 rng: random.Random, budget: SolverBudget, name: str = "g"):
        if order < 1 or (p - 1) % order:
            raise InvalidArgument(f"order {order} does not divide p - 1 = {p - 1}")
        self.base_elem = base_elem
        self.p = p
        self.base = base
        self.order = order
        self.index = (p - 1) // order
        self.rng = rng
        self.budget = budget
        self.name = name
        self.logger = logging.getLogger(f"pipeline.{name}")
        self.table = PartialLogTable(base_elem, p)
        self.rows: List = []
        self.candidates_tested = 0
        self.smooth_found = 0
        self.rounds = 0
        self.suspect_rounds = 0
        self.last_solution: Optional[PartialSolution] = None

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["logger"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self.logger = logging.getLogger(f"pipeline.{self.name}")

    @property
    def complete(self) -> bool:
        return len(self.table) == self.base.k

    def missing(self) -> List[int]:
        return [q for q in self.base.primes if q not in self.table]

    def reachable(self) -> List[int]:
        """Factor-base primes inside the subgroup generated by ``base_elem``."""
        return [q for q in self.base.primes if pow(q, self.order, self.p) == 1]

    def _log_from_generator_log(self, value: int) -> Optional[int]:
        if value % self.index:
            return None
        return value // self.index % self.order

    def _try_add(self, prime: int, value: int) -> bool:
        log = self._log_from_generator_log(value)
        return log is not None and self.table.add(prime, log)

    def run_round(self) -> "LogTablePipeline":
        self.rounds += 1
        return self.step(self.base.k)

    def step(self, count: int) -> "LogTablePipeline":
        """Collect ``count`` more relations, re-solve and verify the new logs."""
        remaining = self.budget.max_candidates - self.candidates_tested
        if remaining <= 0:
            raise BudgetExceeded(f"base {self.base_elem}: candidate cap {self.budget.max_candidates} reached")

        batch = collect_relations(self.base_elem, self.p, self.base, count, self.rng, remaining)
        self.candidates_tested += batch.candidates_tested
        self.smooth_found += len(batch.relations)
        self.rows.extend((r.exponents, self.index * r.t) for r in batch.relations)

        system = EquationSystem(self.p - 1, tuple(self.rows), self.base.k)
        solution = solve_partial(system, self.budget.residue_cap, self.budget.factorize_modulus)
        self.last_solution = solution

        suspect = solution.inconsistent
        added = 0
        for j, value in solution.determined.items():
            prime = self.base.primes[j]
            if prime in self.table:
                continue
            if self._try_add(prime, value):
                added += 1
            else:
                suspect = True
        for j, values in solution.candidates.items():
            prime = self.base.primes[j]
            if prime in self.table:
                continue
            if any(self._try_add(prime, value) for value in values):
                added += 1
            else:
                suspect = True

        if suspect:
            self.suspect_rounds += 1
        self.logger.debug(
            f"round {self.rounds}: {len(self.rows)} rows, rank {solution.rank}, "
            f"+{added} logs ({len(self.table)}/{self.base.k}), "
            f"{self.candidates_tested} candidates{', suspect' if suspect else ''}"
        )
        return self
