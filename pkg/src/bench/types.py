"""Sweep configuration and per-trial records."""
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Dict, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple

from numtheory.errors import InvalidArgument
from numtheory.modmath import FACTOR_CEILING_BITS
from numtheory.smooth import BoundFormula, BoundSpec
from solvers.types import Algorithm, SolverBudget

MIN_BITS = 12
# p - 1 has the bit length of p and must stay factorable
MAX_BITS = FACTOR_CEILING_BITS

CSV_FIELDS = (
    "algorithm", "bits", "multiplier", "trial", "seed", "p", "g", "b",
    "x_expected", "x_found", "success", "elapsed_ms",
    "candidates_tested", "smooth_found", "rounds",
)


def format_multiplier(value: Fraction) -> str:
    """Decimal string ("0.5", "2") when the fraction terminates, else "n/d"."""
    value = Fraction(value)
    d = value.denominator
    for q in (2, 5):
        while d % q == 0:
            d //= q
    if d != 1:
        return f"{value.numerator}/{value.denominator}"
    with localcontext() as ctx:
        ctx.prec = 60
        exact = Decimal(value.numerator) / Decimal(value.denominator)
    return format(exact.normalize(), "f")


class TrialCell(NamedTuple):
    bits: int
    multiplier: Fraction
    algorithm: Algorithm
    trial: int


@dataclass(frozen=True)
class BenchConfig:
    """One sweep: bits x multipliers x algorithms x trials."""

    bits_list: Tuple[int, ...]
    multipliers: Tuple[Fraction, ...]
    algorithms: Tuple[Algorithm, ...]
    trials: int = 20
    seed: int = 20240601
    budget: SolverBudget = field(default_factory=SolverBudget)
    formulas: Mapping[str, BoundFormula] = field(default_factory=dict)
    default_formula: BoundFormula = BoundFormula.SQRT_HALF
    workers: int = 1
    progress_interval: float = 5.0

    def __post_init__(self):
        object.__setattr__(self, "bits_list", tuple(int(b) for b in self.bits_list))
        object.__setattr__(self, "multipliers", tuple(BoundSpec.parse_multiplier(m) for m in self.multipliers))
        try:
            object.__setattr__(self, "algorithms", tuple(Algorithm(a) for a in self.algorithms))
            object.__setattr__(self, "formulas", {Algorithm(k).value: BoundFormula(v)
                                                  for k, v in dict(self.formulas).items()})
            object.__setattr__(self, "default_formula", BoundFormula(self.default_formula))
        except ValueError as e:
            raise InvalidArgument(f"invalid sweep configuration: {e}") from e

        if not self.bits_list or not self.multipliers or not self.algorithms:
            raise InvalidArgument("bits, multipliers and algorithms must all be non-empty")
        if self.trials < 1:
            raise InvalidArgument(f"trials must be >= 1, got {self.trials}")
        for bits in self.bits_list:
            if not MIN_BITS <= bits <= MAX_BITS:
                raise InvalidArgument(f"bits must be in [{MIN_BITS}, {MAX_BITS}], got {bits}")
        if self.workers < 1:
            raise InvalidArgument(f"workers must be >= 1, got {self.workers}")

    def formula_for(self, algorithm: Algorithm) -> BoundFormula:
        return self.formulas.get(Algorithm(algorithm).value, self.default_formula)

    def cells(self) -> Iterator[TrialCell]:
        for bits in self.bits_list:
            for multiplier in self.multipliers:
                for algorithm in self.algorithms:
                    for trial in range(self.trials):
                        yield TrialCell(bits, multiplier, algorithm, trial)

    @property
    def size(self) -> int:
        return len(self.bits_list) * len(self.multipliers) * len(self.algorithms) * self.trials


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    bits: int
    multiplier: Fraction
    trial: int
    seed: int
    p: int
    g: int
    b: int
    x_expected: int
    x_found: Optional[int]
    success: bool
    elapsed_ms: float
    candidates_tested: int = 0
    smooth_found: int = 0
    rounds: int = 0

    def __post_init__(self):
        if self.success and self.x_found != self.x_expected:
            raise InvalidArgument(f"record marked successful with x_found={self.x_found} != {self.x_expected}")

    def to_row(self) -> Dict[str, str]:
        return {
            "algorithm": self.algorithm,
            "bits": str(self.bits),
            "multiplier": format_multiplier(self.multiplier),
            "trial": str(self.trial),
            "seed": str(self.seed),
            "p": str(self.p),
            "g": str(self.g),
            "b": str(self.b),
            "x_expected": str(self.x_expected),
            "x_found": "" if self.x_found is None else str(self.x_found),
            "success": "true" if self.success else "false",
            "elapsed_ms": f"{self.elapsed_ms:.3f}",
            "candidates_tested": str(self.candidates_tested),
            "smooth_found": str(self.smooth_found),
            "rounds": str(self.rounds),
        }

    @classmethod
    def from_row(cls, row: Mapping[str, Any]) -> "BenchRecord":
        try:
            success = row["success"]
            if success not in ("true", "false"):
                raise ValueError(f"success must be true or false, got {success!r}")
            return cls(
                algorithm=row["algorithm"],
                bits=int(row["bits"]),
                multiplier=Fraction(row["multiplier"]),
                trial=int(row["trial"]),
                seed=int(row["seed"]),
                p=int(row["p"]),
                g=int(row["g"]),
                b=int(row["b"]),
                x_expected=int(row["x_expected"]),
                x_found=int(row["x_found"]) if row["x_found"] else None,
                success=success == "true",
                elapsed_ms=float(row["elapsed_ms"]),
                candidates_tested=int(row["candidates_tested"]),
                smooth_found=int(row["smooth_found"]),
                rounds=int(row["rounds"]),
            )
        except (KeyError, ValueError) as e:
            raise InvalidArgument(f"malformed record row: {e}") from e

    def value(self, name: str):
        """Field lookup used by plotting; ``multiplier`` comes back as a float."""
        if name not in CSV_FIELDS:
            raise InvalidArgument(f"unknown record field {name!r}")
        value = getattr(self, name)
        if isinstance(value, Fraction):
            return float(value)
        return value
