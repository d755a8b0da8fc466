"""Value types shared by the solvers: instances, log tables, results, budgets."""
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple

from numtheory.errors import InvalidArgument
from numtheory.modmath import Factorization, factor_integer, is_probable_prime
from numtheory.smooth import DEFAULT_MAX_CANDIDATES


class Algorithm(str, Enum):
    DIC = "dic"
    DIC_PARALLEL = "dic-parallel"
    IC = "ic"
    BSGS = "bsgs"
    RHO = "rho"
    PH = "ph"

    @property
    def uses_factor_base(self) -> bool:
        return self in (Algorithm.DIC, Algorithm.DIC_PARALLEL, Algorithm.IC)

    @classmethod
    def names(cls) -> List[str]:
        return [a.value for a in cls]


@dataclass(frozen=True)
class DlpInstance:
    """Find the smallest x >= 0 with ``g ** x = b (mod p)``."""

    p: int
    g: int
    b: int
    expected_x: Optional[int] = None

    def __post_init__(self):
        if not is_probable_prime(self.p):
            raise InvalidArgument(f"p = {self.p} is not prime")
        if not 2 <= self.g < self.p:
            raise InvalidArgument(f"g = {self.g} outside [2, {self.p})")
        if not 1 <= self.b < self.p:
            raise InvalidArgument(f"b = {self.b} outside [1, {self.p})")

    @property
    def fact(self) -> Factorization:
        """Factorisation of p - 1 (memoised by factor_integer)."""
        return factor_integer(self.p - 1)

    def verify(self, x: int) -> bool:
        return x >= 0 and pow(self.g, x, self.p) == self.b


@dataclass
class PartialLogTable:
    """Verified logarithms ``base_elem ** entries[prime] = prime (mod p)``."""

    base_elem: int
    p: int
    entries: Dict[int, int] = field(default_factory=dict)

    def add(self, prime: int, exponent: int) -> bool:
        """Store the entry only if it re-verifies."""
        if pow(self.base_elem, exponent, self.p) != prime % self.p:
            return False
        self.entries[prime] = exponent
        return True

    def intersection(self, other: "PartialLogTable") -> List[int]:
        return sorted(self.entries.keys() & other.entries.keys())

    def verify_all(self) -> bool:
        return all(pow(self.base_elem, e, self.p) == q % self.p for q, e in self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, prime: int) -> bool:
        return prime in self.entries

    def __getitem__(self, prime: int) -> int:
        return self.entries[prime]


@dataclass(frozen=True)
class SolveResult:
    x: int
    algorithm: Algorithm
    candidates_tested: int = 0
    smooth_found: int = 0
    rounds: int = 0
    elapsed: float = 0.0
    matched_prime: Optional[int] = None

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed * 1000.0

    def counters(self) -> Tuple[int, int, int]:
        return self.candidates_tested, self.smooth_found, self.rounds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": self.x,
            "algorithm": Algorithm(self.algorithm).value,
            "success": True,
            "candidates_tested": self.candidates_tested,
            "smooth_found": self.smooth_found,
            "rounds": self.rounds,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "matched_prime": self.matched_prime,
        }


EXECUTORS = ("thread", "process")


@dataclass(frozen=True)
class SolverBudget:
    """Caps that keep every solver finite."""

    max_candidates: int = DEFAULT_MAX_CANDIDATES
    max_rounds: int = 50
    generality_rounds: int = 3
    residue_cap: int = 16
    rho_restarts: int = 20
    executor: str = "thread"
    factorize_modulus: bool = True

    def __post_init__(self):
        for name in ("max_candidates", "max_rounds", "generality_rounds", "rho_restarts"):
            if getattr(self, name) < 1:
                raise InvalidArgument(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.residue_cap < 1:
            raise InvalidArgument(f"residue_cap must be >= 1, got {self.residue_cap}")
        if self.executor not in EXECUTORS:
            raise InvalidArgument(f"executor must be one of {EXECUTORS}, got {self.executor!r}")

    @classmethod
    def from_config(cls, section: Mapping[str, Any], **overrides) -> "SolverBudget":
        """Build from the ``solver`` config section; unrelated keys are ignored."""
        names = {f.name for f in fields(cls)}
        values = {k: v for k, v in section.items() if k in names}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RoundSnapshot:
    """State of a double index calculus run after one round."""

    round: int
    table_g: Mapping[int, int]
    table_b: Mapping[int, int]
    matches: Tuple[int, ...]
    k: int

    @property
    def total_logs(self) -> int:
        return len(self.table_g) + len(self.table_b)
