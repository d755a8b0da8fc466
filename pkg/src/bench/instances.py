"""Reproducible instance generation and seed derivation."""
from numtheory.errors import InvalidArgument
from numtheory.modmath import derive_seed, factor_integer, find_generator, make_rng, random_prime
from solvers.types import Algorithm, DlpInstance

from .types import MAX_BITS, MIN_BITS, format_multiplier


def gen_instance(bits: int, seed: int) -> DlpInstance:
    """Random prime p of ``bits`` bits, its smallest generator g, x uniform in [1, p-2]."""
    if not MIN_BITS <= bits <= MAX_BITS:
        raise InvalidArgument(f"bits must be in [{MIN_BITS}, {MAX_BITS}], got {bits}")
    rng = make_rng(seed)
    p = random_prime(bits, rng.getrandbits(64))
    g = find_generator(p, factor_integer(p - 1))
    x = rng.randint(1, p - 2)
    return DlpInstance(p, g, pow(g, x, p), expected_x=x)


def instance_seed(seed: int, bits: int, trial: int) -> int:
    """Same instance for every multiplier and algorithm of a trial."""
    return derive_seed(seed, bits, trial)


def solver_seed(seed: int, bits: int, multiplier, algorithm, trial: int) -> int:
    return derive_seed(seed, bits, format_multiplier(multiplier), Algorithm(algorithm).value, trial)
