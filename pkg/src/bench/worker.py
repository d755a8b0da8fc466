"""Trial worker module.

One TrialWorker runs one cell of the sweep grid: it builds the instance,
times the solve call and turns the outcome into a BenchRecord.
"""
import logging
import time
from typing import Optional

from numtheory.errors import DlogError
from numtheory.smooth import BoundSpec
from solvers.dispatch import solve
from solvers.types import DlpInstance, SolveResult

from .instances import gen_instance, instance_seed, solver_seed
from .types import BenchConfig, BenchRecord, TrialCell, format_multiplier


class TrialWorker:
    """Runs a single trial of the sweep."""

    def __init__(self, cell: TrialCell, config: BenchConfig):
        self.cell = cell
        self.config = config
        self.name = f"{cell.algorithm.value}-{cell.bits}-{format_multiplier(cell.multiplier)}-{cell.trial}"
        self.logger = logging.getLogger(f"worker.{self.name}")
        self.status = "pending"
        self.error: Optional[str] = None

    def run(self) -> BenchRecord:
        cell, config = self.cell, self.config
        seed = solver_seed(config.seed, cell.bits, cell.multiplier, cell.algorithm, cell.trial)
        spec = BoundSpec(config.formula_for(cell.algorithm), cell.multiplier)

        inst: Optional[DlpInstance] = None
        result: Optional[SolveResult] = None
        self.status = "running"
        start = time.perf_counter()
        try:
            inst = gen_instance(cell.bits, instance_seed(config.seed, cell.bits, cell.trial))
            start = time.perf_counter()
            result = solve(inst, cell.algorithm, spec=spec, budget=config.budget, seed=seed)
        except DlogError as e:
            self.error = f"{type(e).__name__}: {e}"
            where = f"on p={inst.p}" if inst is not None else "in instance generation"
            self.logger.warning(f"trial failed {where}: {self.error}")
        elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
        if inst is None:
            self.status = "failed"
            return self._failed_generation(seed, elapsed_ms)

        x_found = result.x if result is not None else None
        success = x_found is not None and x_found == inst.expected_x
        if result is not None and not success:
            self.logger.error(f"solver returned x={x_found}, expected {inst.expected_x} on p={inst.p}")
        self.status = "done" if success else "failed"

        return BenchRecord(
            algorithm=cell.algorithm.value,
            bits=cell.bits,
            multiplier=cell.multiplier,
            trial=cell.trial,
            seed=seed,
            p=inst.p,
            g=inst.g,
            b=inst.b,
            x_expected=inst.expected_x,
            x_found=x_found,
            success=success,
            elapsed_ms=elapsed_ms,
            candidates_tested=result.candidates_tested if result else 0,
            smooth_found=result.smooth_found if result else 0,
            rounds=result.rounds if result else 0,
        )

    def _failed_generation(self, seed: int, elapsed_ms: float) -> BenchRecord:
        # no instance: p, g, b and x_expected are recorded as 0
        cell = self.cell
        return BenchRecord(
            algorithm=cell.algorithm.value,
            bits=cell.bits,
            multiplier=cell.multiplier,
            trial=cell.trial,
            seed=seed,
            p=0,
            g=0,
            b=0,
            x_expected=0,
            x_found=None,
            success=False,
            elapsed_ms=elapsed_ms,
        )
