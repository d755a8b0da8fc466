"""Monte-Carlo estimate of the chance that two log tables share a prime."""
import logging
from typing import List, Optional, Tuple

from numtheory.errors import InvalidArgument
from numtheory.modmath import derive_seed, make_rng, multiplicative_order
from numtheory.smooth import BoundSpec, build_factor_base, smoothness_bound
from solvers.pipeline import LogTablePipeline
from solvers.types import DlpInstance, SolverBudget

from .instances import gen_instance

logger = logging.getLogger(__name__)

MAX_REDRAWS = 64


def _first_logs(pipeline: LogTablePipeline, size: int, max_rounds: int) -> List[int]:
    """Primes of the first ``size`` logs in verification order, one relation per step."""
    target = min(size, len(pipeline.reachable()))
    max_relations = max_rounds * pipeline.base.k
    while len(pipeline.table) < target and pipeline.smooth_found < max_relations:
        pipeline.step(1)
    return list(pipeline.table.entries)[:size]


def draw_instance(bits: int, seed: int, trial: int, generator_target: bool = True) -> DlpInstance:
    """Instance of one trial; with ``generator_target`` b is redrawn until it generates Z_p^*."""
    for attempt in range(MAX_REDRAWS):
        inst = gen_instance(bits, derive_seed(seed, "match", bits, trial, attempt))
        if not generator_target or multiplicative_order(inst.b, inst.p, inst.fact) == inst.p - 1:
            return inst
    raise InvalidArgument(f"no generator target in {MAX_REDRAWS} draws at {bits} bits")


def estimate_match_probability(bits: int, u: int, v: int, trials: int, seed: int,
                               multiplier="0.5",
                               budget: Optional[SolverBudget] = None,
                               generator_target: bool = True) -> Tuple[int, int]:
    """Count trials where the first u logs base g and first v logs base b meet.

    Each trial uses a fresh instance. Both tables grow one relation at a
    time and stop the moment they hold u (resp. v) verified logs; the hit
    test intersects those first entries in the order they verified. The
    factor base is widened when it has fewer than max(u, v) primes.

    The bound models every relation as a random smooth number for either
    base, which holds when b generates the group; ``generator_target=False``
    keeps targets of any order, whose tables only reach primes inside their
    subgroup. Returns ``(hits, trials)``.
    """
    if u < 1 or v < 1 or trials < 1:
        raise InvalidArgument(f"need u, v, trials >= 1, got ({u}, {v}, {trials})")
    budget = budget or SolverBudget()
    spec = BoundSpec(multiplier=multiplier)

    hits = 0
    for trial in range(trials):
        inst = draw_instance(bits, seed, trial, generator_target)
        B = smoothness_bound(inst.p, spec)
        base = build_factor_base(B, inst.p)
        while base.k < max(u, v):
            B *= 2
            base = build_factor_base(B, inst.p)

        fact = inst.fact
        pipe_g = LogTablePipeline(inst.g, inst.p, base, multiplicative_order(inst.g, inst.p, fact),
                                  make_rng(derive_seed(seed, trial, "g")), budget, name="mc.g")
        pipe_b = LogTablePipeline(inst.b, inst.p, base, multiplicative_order(inst.b, inst.p, fact),
                                  make_rng(derive_seed(seed, trial, "b")), budget, name="mc.b")
        first_g = set(_first_logs(pipe_g, u, budget.max_rounds))
        first_b = set(_first_logs(pipe_b, v, budget.max_rounds))
        if first_g & first_b:
            hits += 1

    logger.info(f"match frequency at (u, v) = ({u}, {v}), {bits} bits: {hits}/{trials}")
    return hits, trials
