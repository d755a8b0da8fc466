"""
Bench Module

Reproducible experiment harness for the solvers.

## Files

- `types.py` - BenchConfig, BenchRecord, TrialCell
- `instances.py` - Instance generation and seed derivation
- `records.py` - CSV emission and parsing
- `worker.py` - TrialWorker, one timed trial
- `manager.py` - SweepManager and run_sweep
- `monitor.py` - SweepMonitor progress thread
- `plot.py` - SVG line charts
- `montecarlo.py` - Empirical table-match frequency
- `__init__.py` - Module initialization
"""

from numtheory.modmath import derive_seed

from .types import BenchConfig, BenchRecord, CSV_FIELDS, TrialCell, format_multiplier
from .instances import gen_instance, instance_seed, solver_seed
from .records import emit_csv, parse_csv
from .worker import TrialWorker
from .monitor import SweepMonitor
from .manager import SweepManager, run_sweep
from .plot import emit_svg_plot, series_means
from .montecarlo import estimate_match_probability

__all__ = [
    'BenchConfig',
    'BenchRecord',
    'CSV_FIELDS',
    'TrialCell',
    'format_multiplier',
    'derive_seed',
    'gen_instance',
    'instance_seed',
    'solver_seed',
    'emit_csv',
    'parse_csv',
    'TrialWorker',
    'SweepMonitor',
    'SweepManager',
    'run_sweep',
    'emit_svg_plot',
    'series_means',
    'estimate_match_probability',
]
