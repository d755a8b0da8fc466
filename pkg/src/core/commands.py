"""Command handlers behind dlogctl.

Every handler returns a response dict ``{status, message, timestamp, data,
exit_code, output}``: ``output`` lines go to stdout, ``message`` and
``notes`` to stderr. Library errors are mapped to exit codes here.
"""
import json
import logging
import os
import random
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence

from analysis.bounds import nice_case_count, prob_lower_bound, theoretical_log_counts
from bench.manager import run_sweep
from bench.montecarlo import estimate_match_probability
from bench.plot import emit_svg_plot
from bench.records import emit_csv, parse_csv
from bench.types import BenchConfig
from numtheory.errors import DlogError, InvalidArgument
from numtheory.smooth import BoundSpec
from solvers.dispatch import solve
from solvers.types import Algorithm, DlpInstance, SolverBudget
from templates.report_templates import ReportTemplates

from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _response(status: str, message: str = "", data: Any = None, exit_code: int = EXIT_OK,
              output: Optional[List[str]] = None, notes: Optional[List[str]] = None) -> Dict[str, Any]:
    return {
        "status": status,
        "message": message,
        "timestamp": datetime.now().isoformat(),
        "data": data,
        "exit_code": exit_code,
        "output": output or [],
        "notes": notes or [],
    }


def _usage_error(message: str) -> Dict[str, Any]:
    return _response("error", message, exit_code=EXIT_USAGE)


class DlogCommands:
    """Handles dlogctl subcommands."""

    def __init__(self, config_manager):
        self.config_manager = config_manager
        self.logger = logging.getLogger(__name__)

    def _solver_config(self) -> Dict[str, Any]:
        return self.config_manager.get_solver_config()

    def _budget(self, max_candidates: Optional[int] = None, max_rounds: Optional[int] = None) -> SolverBudget:
        return SolverBudget.from_config(self._solver_config(), max_candidates=max_candidates,
                                        max_rounds=max_rounds)

    def solve(self, p: int, g: int, b: int, algorithm: Optional[str] = None, bound: Optional[int] = None,
              bound_multiplier: Optional[str] = None, bound_formula: Optional[str] = None,
              parallel: bool = False, seed: Optional[int] = None, max_candidates: Optional[int] = None,
              max_rounds: Optional[int] = None, as_json: bool = False) -> Dict[str, Any]:
        solver_config = self._solver_config()
        notes = []
        try:
            algorithm = Algorithm(algorithm or solver_config['default_algorithm'])
            if parallel and algorithm is Algorithm.DIC:
                algorithm = Algorithm.DIC_PARALLEL
            inst = DlpInstance(p, g, b)
            if bound is not None and bound < 2:
                raise InvalidArgument(f"--bound must be >= 2, got {bound}")
            spec = BoundSpec(
                bound_formula or solver_config['bound_formula'],
                BoundSpec.parse_multiplier(bound_multiplier or solver_config['bound_multiplier']),
            )
            budget = self._budget(max_candidates, max_rounds)
        except InvalidArgument as e:
            return _usage_error(str(e))

        if seed is None:
            seed = random.SystemRandom().getrandbits(64)
            notes.append(f"seed: {seed}")

        try:
            result = solve(inst, algorithm, bound=bound, spec=spec, budget=budget, seed=seed)
        except DlogError as e:
            self.logger.warning(f"{algorithm.value} failed on p={p}: {type(e).__name__}: {e}")
            failure = {
                "x": None,
                "algorithm": algorithm.value,
                "success": False,
                "candidates_tested": 0,
                "smooth_found": 0,
                "rounds": 0,
                "elapsed_ms": 0.0,
                "matched_prime": None,
            }
            output = [json.dumps(failure)] if as_json else []
            return _response("error", f"{type(e).__name__}: {e}", failure, EXIT_FAILURE, output, notes)

        data = result.to_dict()
        output = [json.dumps(data)] if as_json else [str(result.x)]
        return _response("success", f"x = {result.x}", data, EXIT_OK, output, notes)

    def _run_and_write(self, config: BenchConfig, out: str, svg: Optional[str] = None,
                       x_axis: str = "bits", logy: bool = False, title: Optional[str] = None) -> Dict[str, Any]:
        records = run_sweep(config)
        with open(out, "wb") as f:
            f.write(emit_csv(records))
        self.logger.info(f"wrote {len(records)} records to {out}")
        if svg:
            with open(svg, "wb") as f:
                f.write(emit_svg_plot(records, x_axis=x_axis, y_axis="mean_elapsed",
                                      series="algorithm", logy=logy, title=title))
            self.logger.info(f"wrote plot to {svg}")
        summary = ReportTemplates.sweep_summary(records)
        return _response("success", summary['title'], {"records": len(records), "out": out},
                         EXIT_OK, [summary['title'], summary['body']])

    def _bench_config(self, bits: Sequence[int], multipliers: Sequence, algorithms: Sequence[str],
                      trials: Optional[int], seed: Optional[int], workers: Optional[int],
                      formulas: Dict[str, str], max_candidates: Optional[int] = None,
                      max_rounds: Optional[int] = None) -> BenchConfig:
        bench = self.config_manager.get_bench_config()
        merged = dict(bench.get('formulas') or {})
        merged.update(formulas)
        return BenchConfig(
            bits_list=tuple(bits),
            multipliers=tuple(multipliers),
            algorithms=tuple(algorithms),
            trials=trials if trials is not None else bench['trials'],
            seed=seed if seed is not None else bench['seed'],
            budget=self._budget(max_candidates, max_rounds),
            formulas=merged,
            default_formula=self._solver_config()['bound_formula'],
            workers=workers if workers is not None else bench['workers'],
            progress_interval=bench['progress_interval'],
        )

    def sweep(self, bits: Sequence[int], multipliers: Sequence[str], algorithms: Sequence[str], out: str,
              trials: Optional[int] = None, seed: Optional[int] = None, workers: Optional[int] = None,
              formulas: Optional[Dict[str, str]] = None, max_candidates: Optional[int] = None,
              max_rounds: Optional[int] = None, svg: Optional[str] = None) -> Dict[str, Any]:
        try:
            config = self._bench_config(bits, multipliers, algorithms, trials, seed, workers,
                                        formulas or {}, max_candidates, max_rounds)
        except InvalidArgument as e:
            return _usage_error(str(e))
        try:
            return self._run_and_write(config, out, svg)
        except OSError as e:
            return _usage_error(f"cannot write output: {e}")

    def experiment(self, name: str, out: str, svg: Optional[str] = None, trials: Optional[int] = None,
                   seed: Optional[int] = None, bits: Optional[Sequence[int]] = None,
                   workers: Optional[int] = None) -> Dict[str, Any]:
        preset = self.config_manager.get_experiment(name)
        if preset is None:
            known = ", ".join(self.config_manager.experiment_names())
            return _usage_error(f"unknown experiment '{name}' (known: {known})")
        try:
            config = self._bench_config(
                bits or preset['bits'], preset['multipliers'], preset['algorithms'],
                trials if trials is not None else preset.get('trials'), seed, workers,
                preset.get('formulas') or {},
            )
        except InvalidArgument as e:
            return _usage_error(str(e))
        self.logger.info(f"experiment {name}: {preset.get('description', '')}")
        try:
            return self._run_and_write(config, out, svg, x_axis=preset.get('x_axis', 'bits'),
                                       logy=preset.get('logy', False),
                                       title=preset.get('description') or name)
        except OSError as e:
            return _usage_error(f"cannot write output: {e}")

    def analyze_probability(self, u: int, v: int) -> Dict[str, Any]:
        try:
            bound = prob_lower_bound(u, v)
        except InvalidArgument as e:
            return _usage_error(str(e))
        self.logger.info(f"exact bound: {bound}")
        return _response("success", str(bound), {"exact": str(bound)}, EXIT_OK, [str(float(bound))])

    def analyze_nice_cases(self, k: int) -> Dict[str, Any]:
        try:
            count = nice_case_count(k)
        except InvalidArgument as e:
            return _usage_error(str(e))
        return _response("success", str(count), {"k": k, "count": count}, EXIT_OK, [str(count)])

    def analyze_log_counts(self, k: int, i: int, j: int) -> Dict[str, Any]:
        try:
            counts = theoretical_log_counts(k, i, j)
        except InvalidArgument as e:
            return _usage_error(str(e))
        return _response("success", "", counts, EXIT_OK, ReportTemplates.log_counts_report(counts).splitlines())

    def analyze_empirical(self, u: int, v: int, bits: int, trials: int, seed: int) -> Dict[str, Any]:
        try:
            bound = prob_lower_bound(u, v)
            hits, total = estimate_match_probability(
                bits, u, v, trials, seed,
                multiplier=self._solver_config()['bound_multiplier'],
                budget=self._budget(),
            )
        except InvalidArgument as e:
            return _usage_error(str(e))
        except DlogError as e:
            return _response("error", f"{type(e).__name__}: {e}", exit_code=EXIT_FAILURE)
        line = ReportTemplates.empirical_report(u, v, hits, total, bound)
        data = {"hits": hits, "trials": total, "bound": str(bound)}
        return _response("success", line, data, EXIT_OK, [line])

    def plot(self, source: str, out: str, x_axis: str = "bits", y_axis: str = "mean_elapsed",
             series: str = "algorithm", logy: bool = False, title: Optional[str] = None) -> Dict[str, Any]:
        try:
            with open(source, "rb") as f:
                records = parse_csv(f.read())
            svg = emit_svg_plot(records, x_axis=x_axis, y_axis=y_axis, series=series, logy=logy, title=title)
            with open(out, "wb") as f:
                f.write(svg)
        except InvalidArgument as e:
            return _usage_error(str(e))
        except OSError as e:
            return _usage_error(f"{e.strerror}: {e.filename}")
        message = f"plotted {len(records)} records to {out}"
        self.logger.info(message)
        return _response("success", message, {"records": len(records), "out": os.path.abspath(out)})

    def selftest(self) -> Dict[str, Any]:
        results = run_selftest()
        lines = [ReportTemplates.selftest_line(name, status, detail) for name, status, detail in results]
        summary = ReportTemplates.selftest_summary([status for _, status, _ in results])
        lines.append(summary['body'])
        failed = any(status == "FAIL" for _, status, _ in results)
        return _response(
            "error" if failed else "success",
            summary['title'],
            [{"name": n, "status": s, "detail": d} for n, s, d in results],
            EXIT_FAILURE if failed else EXIT_OK,
            lines,
        )
