"""Long-running reproduction checks. Run with ``pytest -m slow``."""
import math
from collections import defaultdict
from statistics import mean

import pytest

from analysis.bounds import prob_lower_bound
from bench.instances import gen_instance
from bench.manager import run_sweep
from bench.montecarlo import estimate_match_probability
from bench.types import BenchConfig
from numtheory.modmath import derive_seed
from solvers.dispatch import solve

pytestmark = pytest.mark.slow


def _mean_elapsed(records):
    cells = defaultdict(list)
    for record in records:
        assert record.success, record
        cells[(record.bits, record.multiplier, record.algorithm)].append(record.elapsed_ms)
    return {key: mean(values) for key, values in cells.items()}


def test_all_algorithms_agree_on_seeded_instances():
    for index in range(200):
        bits = 16 + index % 13
        inst = gen_instance(bits, derive_seed("agreement", index))
        for algorithm in ("dic", "ic", "bsgs", "rho", "ph"):
            result = solve(inst, algorithm, seed=index)
            assert result.x == inst.expected_x, (algorithm, inst)


def test_parallel_is_deterministic_over_many_instances():
    for seed in range(100):
        inst = gen_instance(24, derive_seed("parallel", seed))
        sequential = solve(inst, "dic", seed=seed)
        parallel = solve(inst, "dic-parallel", seed=seed)
        assert (parallel.x, parallel.matched_prime) == (sequential.x, sequential.matched_prime)


def test_pigeonhole_never_violated():
    for seed in range(500):
        inst = gen_instance(20, derive_seed("pigeonhole", seed))
        snapshots = []
        result = solve(inst, "dic", seed=seed, on_round=snapshots.append)
        assert result.x == inst.expected_x
        for snapshot in snapshots:
            if snapshot.total_logs >= snapshot.k + 1:
                assert snapshot.matches


@pytest.mark.parametrize("u, v", [(2, 2), (3, 3), (5, 5)])
def test_match_frequency_meets_bound(u, v):
    trials = 500
    hits, _ = estimate_match_probability(20, u, v, trials, seed=derive_seed("mc", u, v))
    bound = float(prob_lower_bound(u, v))
    sigma = math.sqrt(bound * (1 - bound) / trials)
    assert hits / trials >= bound - 3 * sigma


def test_double_index_beats_index_calculus():
    config = BenchConfig(bits_list=(36, 40), multipliers=("0.5",), algorithms=("dic", "ic"),
                         trials=20, seed=7, progress_interval=0)
    means = _mean_elapsed(run_sweep(config))
    for bits in (36, 40):
        dic = means[(bits, config.multipliers[0], "dic")]
        ic = means[(bits, config.multipliers[0], "ic")]
        assert ic / dic >= 1.3


def test_bound_multiplier_sweep_has_interior_minimum():
    config = BenchConfig(bits_list=(36, 40), multipliers=("0.1", "0.5", "1", "1.5", "2"),
                         algorithms=("dic", "ic"), trials=20, seed=11, progress_interval=0)
    means = _mean_elapsed(run_sweep(config))
    for bits in (36, 40):
        for algorithm in ("dic", "ic"):
            row = {m: means[(bits, m, algorithm)] for m in config.multipliers}
            best = min(row, key=row.get)
            assert float(best) in (0.5, 1.0), (bits, algorithm, row)


def test_speedup_grows_with_bits():
    config = BenchConfig(bits_list=(30, 36, 42), multipliers=("1",), algorithms=("dic", "ic"),
                         trials=10, seed=13, formulas={"ic": "half-sqrt", "dic": "sqrt-half"},
                         progress_interval=0)
    means = _mean_elapsed(run_sweep(config))
    ratios = [means[(bits, config.multipliers[0], "ic")] / means[(bits, config.multipliers[0], "dic")]
              for bits in config.bits_list]
    assert all(r >= 1 for r in ratios)
    assert ratios == sorted(ratios)
