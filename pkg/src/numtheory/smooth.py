"""Factor bases, smoothness bounds and relation collection."""
import logging
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import BudgetExceeded, InvalidArgument
from .modmath import prime_sieve

logger = logging.getLogger(__name__)

DEFAULT_MAX_CANDIDATES = 10 ** 7


class BoundFormula(str, Enum):
    """Smoothness-bound formulas, both in natural logarithms.

    sqrt-half: exp(sqrt(ln p * ln ln p / 2))
    half-sqrt: exp(sqrt(ln p * ln ln p) / 2)
    """

    SQRT_HALF = "sqrt-half"
    HALF_SQRT = "half-sqrt"


@dataclass(frozen=True)
class BoundSpec:
    formula: BoundFormula = BoundFormula.SQRT_HALF
    multiplier: Fraction = Fraction(1)

    def __post_init__(self):
        try:
            object.__setattr__(self, "formula", BoundFormula(self.formula))
            object.__setattr__(self, "multiplier", Fraction(self.multiplier))
        except (ValueError, TypeError) as e:
            raise InvalidArgument(f"invalid bound spec: {e}") from e
        if self.multiplier <= 0:
            raise InvalidArgument(f"multiplier must be positive, got {self.multiplier}")

    @staticmethod
    def parse_multiplier(text: Union[str, int, float]) -> Fraction:
        """Accept "0.5", "1/2", "2" and numbers."""
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidArgument(f"invalid multiplier {text!r}") from e
        if value <= 0:
            raise InvalidArgument(f"multiplier must be positive, got {text!r}")
        return value


@dataclass(frozen=True)
class FactorBase:
    """All primes up to ``bound``, ascending."""

    bound: int
    primes: Tuple[int, ...]
    primorial: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.primes:
            raise InvalidArgument(f"empty factor base for bound {self.bound}")
        object.__setattr__(self, "primorial", math.prod(self.primes))

    @property
    def k(self) -> int:
        return len(self.primes)

    def index(self, prime: int) -> int:
        return self.primes.index(prime)


@dataclass(frozen=True)
class Relation:
    """``base ** t mod p == prod(primes[i] ** exponents[i])``."""

    t: int
    exponents: Tuple[int, ...]

    def value(self, base: FactorBase) -> int:
        return math.prod(q ** e for q, e in zip(base.primes, self.exponents) if e)

    def reconstructs(self, base_elem: int, p: int, base: FactorBase) -> bool:
        return pow(base_elem, self.t, p) == self.value(base) % p


@dataclass(frozen=True)
class RelationBatch:
    relations: Tuple[Relation, ...]
    candidates_tested: int


def build_factor_base(bound: int, p: Optional[int] = None) -> FactorBase:
    """Primes up to ``bound``; with ``p`` given, only those below p (p itself is 0 mod p)."""
    if bound < 2:
        raise InvalidArgument(f"smoothness bound must be >= 2, got {bound}")
    primes = prime_sieve(bound)
    if p is not None:
        primes = [q for q in primes if q < p]
    return FactorBase(bound, tuple(primes))


def smoothness_bound_value(p: int, spec: BoundSpec) -> float:
    """Unrounded, unclamped bound: ``multiplier * F(p)``."""
    if p < 3:
        raise InvalidArgument(f"p must be >= 3, got {p}")
    ln_p = math.log(p)
    product = ln_p * math.log(ln_p)
    if spec.formula is BoundFormula.SQRT_HALF:
        f = math.exp(math.sqrt(product / 2))
    else:
        f = math.exp(math.sqrt(product) / 2)
    return float(spec.multiplier) * f


def smoothness_bound(p: int, spec: BoundSpec) -> int:
    """Bound rounded half-up and clamped to >= 2."""
    return max(2, math.floor(smoothness_bound_value(p, spec) + 0.5))


def factor_over_base(m: int, base: FactorBase) -> Optional[Tuple[int, ...]]:
    """Exponent vector of ``m`` over the base, or None if ``m`` is not smooth."""
    if m < 1:
        raise InvalidArgument(f"cannot factor {m} over a factor base")
    exponents = []
    for q in base.primes:
        if m == 1:
            break
        e = 0
        while m % q == 0:
            m //= q
            e += 1
        exponents.append(e)
    if m != 1:
        return None
    exponents.extend([0] * (base.k - len(exponents)))
    return tuple(exponents)


def is_smooth(m: int, base: FactorBase) -> bool:
    """Same answer as ``factor_over_base(m, base) is not None``, via gcds with the primorial."""
    if m < 1:
        raise InvalidArgument(f"cannot test {m} for smoothness")
    g = math.gcd(m, base.primorial)
    while g > 1:
        m //= g
        g = math.gcd(m, g)
    return m == 1


def collect_relations(base_elem: int, p: int, base: FactorBase, count: int,
                      rng: random.Random,
                      max_candidates: int = DEFAULT_MAX_CANDIDATES) -> RelationBatch:
    """Draw t uniformly from [1, p-2] until ``count`` values ``base_elem**t mod p`` are smooth."""
    if not 2 <= base_elem < p:
        raise InvalidArgument(f"base element {base_elem} outside [2, {p})")
    if count < 1:
        raise InvalidArgument(f"relation count must be >= 1, got {count}")

    relations = []
    tested = 0
    high = p - 2
    while len(relations) < count:
        if tested >= max_candidates:
            raise BudgetExceeded(
                f"{tested} candidates tested for base {base_elem} with B={base.bound}, "
                f"{len(relations)}/{count} relations found"
            )
        t = rng.randint(1, high)
        tested += 1
        value = pow(base_elem, t, p)
        if is_smooth(value, base):
            relations.append(Relation(t, factor_over_base(value, base)))
    return RelationBatch(tuple(relations), tested)
