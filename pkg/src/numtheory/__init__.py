"""
Number Theory Module

Arithmetic building blocks shared by every solver.

## Files

- `errors.py` - Exception hierarchy (DlogError and subclasses)
- `modmath.py` - Modular arithmetic, primality, factoring, generators, seeds
- `smooth.py` - Factor bases, smoothness bounds, relation collection
- `linsys.py` - Partial solving of linear systems over Z_n
- `__init__.py` - Module initialization
"""

from .errors import (
    BudgetExceeded,
    DlogError,
    GeneralityFailure,
    InconsistentState,
    InvalidArgument,
    NoSolution,
)
from .modmath import (
    Factorization,
    coprime_split,
    crt_combine,
    derive_seed,
    factor_integer,
    find_generator,
    is_probable_prime,
    make_rng,
    mod_inv,
    mod_pow,
    multiplicative_order,
    random_prime,
    solve_linear_congruence,
)
from .smooth import (
    BoundFormula,
    BoundSpec,
    FactorBase,
    Relation,
    build_factor_base,
    collect_relations,
    factor_over_base,
    is_smooth,
    smoothness_bound,
)
from .linsys import EquationSystem, PartialSolution, solve_partial

__all__ = [
    'DlogError',
    'InvalidArgument',
    'BudgetExceeded',
    'GeneralityFailure',
    'NoSolution',
    'InconsistentState',
    'Factorization',
    'mod_pow',
    'mod_inv',
    'crt_combine',
    'coprime_split',
    'solve_linear_congruence',
    'is_probable_prime',
    'random_prime',
    'factor_integer',
    'find_generator',
    'multiplicative_order',
    'make_rng',
    'derive_seed',
    'BoundFormula',
    'BoundSpec',
    'FactorBase',
    'Relation',
    'build_factor_base',
    'smoothness_bound',
    'factor_over_base',
    'is_smooth',
    'collect_relations',
    'EquationSystem',
    'PartialSolution',
    'solve_partial',
]
