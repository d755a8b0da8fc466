"""Sweep manager module.

Expands a BenchConfig into TrialWorkers and runs them inline or on a
process pool. Records always come back in grid order.
"""
import dataclasses
import logging
import threading
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import List, Tuple

from .monitor import SweepMonitor
from .types import BenchConfig, BenchRecord
from .worker import TrialWorker


class SweepManager:
    """Manages the trials of one sweep."""

    def __init__(self, config: BenchConfig):
        self.logger = logging.getLogger(__name__)
        if config.workers > 1 and config.budget.executor == "process":
            # pool workers are daemonic and cannot start their own processes
            self.logger.warning("process executor unavailable inside sweep workers, using threads")
            config = dataclasses.replace(config, budget=dataclasses.replace(config.budget, executor="thread"))
        self.config = config
        self.workers: List[TrialWorker] = [TrialWorker(cell, config) for cell in config.cells()]
        self.completed = 0
        self.failed = 0
        self._lock = threading.Lock()
        self.monitor = SweepMonitor(self, config.progress_interval)

    def progress(self) -> Tuple[int, int, int]:
        with self._lock:
            return self.completed, len(self.workers), self.failed

    def _record_done(self, record: BenchRecord) -> BenchRecord:
        with self._lock:
            self.completed += 1
            if not record.success:
                self.failed += 1
        return record

    def run(self) -> List[BenchRecord]:
        self.logger.info(
            f"sweep: {len(self.workers)} trials over bits={list(self.config.bits_list)}, "
            f"{len(self.config.multipliers)} multipliers, "
            f"algorithms={[a.value for a in self.config.algorithms]}, workers={self.config.workers}"
        )
        self.monitor.start_monitoring()
        try:
            if self.config.workers <= 1:
                records = [self._record_done(worker.run()) for worker in self.workers]
            else:
                with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                    futures = [pool.submit(worker.run) for worker in self.workers]
                    for future in as_completed(futures):
                        self._record_done(future.result())
                    records = [future.result() for future in futures]
        finally:
            self.monitor.stop_monitoring()

        done, total, failed = self.progress()
        self.logger.info(f"sweep finished: {done}/{total} trials, {failed} failed")
        return records


def run_sweep(config: BenchConfig) -> List[BenchRecord]:
    return SweepManager(config).run()
