"""Partial solving of linear systems ``M L = X (mod n)`` for composite n.

The modulus is split into pairwise-coprime prime-power components. Over each
local ring Z/q^e the system is diagonalised (Smith form): row operations act
on the equations, column operations are recorded in a unimodular matrix V so
that ``L = V y``. A diagonal entry q^v pins ``y`` down modulo q^(e-v), which
makes the kernel explicit. An unknown is determined when every kernel
generator vanishes on it, and the per-component values are glued with CRT.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidArgument
from .modmath import (
    coprime_split,
    crt_combine,
    factor_integer,
    integer_root_prime_power,
)

logger = logging.getLogger(__name__)

DEFAULT_RESIDUE_CAP = 16

Row = Tuple[Tuple[int, ...], int]


@dataclass(frozen=True)
class EquationSystem:
    """Rows ``(coeffs, rhs)`` over Z_modulus, every coefficient vector of length ``columns``."""

    modulus: int
    rows: Tuple[Row, ...]
    columns: Optional[int] = None

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidArgument(f"modulus must be >= 2, got {self.modulus}")
        columns = self.columns
        if columns is None:
            columns = len(self.rows[0][0]) if self.rows else 0
        reduced = []
        for coeffs, rhs in self.rows:
            if len(coeffs) != columns:
                raise InvalidArgument(f"row of length {len(coeffs)} in a {columns}-column system")
            reduced.append((tuple(c % self.modulus for c in coeffs), rhs % self.modulus))
        object.__setattr__(self, "rows", tuple(reduced))
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_relations(cls, relations: Iterable, modulus: int, columns: int) -> "EquationSystem":
        return cls(modulus, tuple((r.exponents, r.t) for r in relations), columns)

    def extended(self, rows: Iterable[Row]) -> "EquationSystem":
        return EquationSystem(self.modulus, self.rows + tuple(rows), self.columns)


@dataclass
class PartialSolution:
    """Unknowns fixed by the system.

    ``determined`` holds the uniquely determined unknowns; ``candidates`` the
    ambiguous ones whose full candidate list has at most ``residue_cap``
    entries. ``rank`` is the smallest pivot count over the components.
    """

    determined: Dict[int, int] = field(default_factory=dict)
    candidates: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    rank: int = 0
    inconsistent: bool = False


@dataclass
class _LocalSolution:
    q: int
    e: int
    base: List[int]
    # unknown j ranges over base[j] + q**spread[j] * Z (mod q**e)
    spread: List[int]
    rank: int
    inconsistent: bool = False

    def count(self, j: int) -> int:
        return self.q ** (self.e - self.spread[j])

    def values(self, j: int) -> List[int]:
        m = self.q ** self.e
        step = self.q ** self.spread[j]
        return [(self.base[j] + t * step) % m for t in range(self.count(j))]


def _valuation(a: int, q: int, e: int) -> int:
    if a == 0:
        return e
    v = 0
    while v < e and a % q == 0:
        a //= q
        v += 1
    return v


def _inconsistent_local(q: int, e: int, k: int) -> _LocalSolution:
    return _LocalSolution(q, e, [0] * k, [0] * k, 0, inconsistent=True)


def _solve_local(rows: Sequence[Row], k: int, q: int, e: int) -> _LocalSolution:
    m = q ** e
    active = []
    for coeffs, rhs in rows:
        entries = {j: c % m for j, c in enumerate(coeffs) if c % m}
        r = rhs % m
        if entries:
            active.append([entries, r])
        elif r:
            return _inconsistent_local(q, e, k)

    # V[s] is column s of V, stored sparsely as {row: value}
    V = [{j: 1} for j in range(k)]
    pivots = []

    while active:
        counts: Dict[int, int] = {}
        for entries, _ in active:
            for j in entries:
                counts[j] = counts.get(j, 0) + 1

        best = None
        for i, (entries, _) in enumerate(active):
            fill = len(entries) - 1
            for j, value in entries.items():
                key = (_valuation(value, q, e), fill * (counts[j] - 1), j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        (v, _, _), i, s = best

        entries, rhs = active.pop(i)
        qv = q ** v
        inv = pow(entries[s] // qv, -1, m)
        entries = {j: value * inv % m for j, value in entries.items()}
        rhs = rhs * inv % m

        remaining = []
        for other in active:
            other_entries = other[0]
            if s in other_entries:
                f = other_entries.pop(s) // qv
                for j, value in entries.items():
                    if j == s:
                        continue
                    updated = (other_entries.get(j, 0) - f * value) % m
                    if updated:
                        other_entries[j] = updated
                    else:
                        other_entries.pop(j, None)
                other[1] = (other[1] - f * rhs) % m
                if not other_entries:
                    if other[1]:
                        return _inconsistent_local(q, e, k)
                    continue
            remaining.append(other)
        active = remaining

        pivot_column = V[s]
        for j, value in entries.items():
            if j == s:
                continue
            f = value // qv
            column = V[j]
            for row, pv in pivot_column.items():
                updated = (column.get(row, 0) - f * pv) % m
                if updated:
                    column[row] = updated
                else:
                    column.pop(row, None)
        pivots.append((s, v, rhs))

    base = [0] * k
    spread = [e] * k
    pivoted = set()
    for s, v, c in pivots:
        pivoted.add(s)
        qv = q ** v
        if c % qv:
            return _inconsistent_local(q, e, k)
        y = c // qv
        for row, pv in V[s].items():
            base[row] = (base[row] + pv * y) % m
        if v > 0:
            shift = e - v
            for row, pv in V[s].items():
                spread[row] = min(spread[row], _valuation(pv, q, e) + shift)
    for s in range(k):
        if s in pivoted:
            continue
        for row, pv in V[s].items():
            spread[row] = min(spread[row], _valuation(pv, q, e))

    return _LocalSolution(q, e, base, spread, len(pivots))


def _coprime_components(system: EquationSystem) -> List[Tuple[int, int]]:
    """Prime-power components of the modulus found by gcd refinement."""
    n = system.modulus
    witnesses = set()
    for coeffs, rhs in system.rows:
        witnesses.update(c for c in coeffs if c)
        if rhs:
            witnesses.add(rhs)

    parts = [n]
    changed = True
    while changed:
        changed = False
        for w in witnesses:
            refined = []
            for part in parts:
                d = math.gcd(w, part)
                if 1 < d < part:
                    split = coprime_split(part, w)
                    if split is not None:
                        refined.extend(split)
                        changed = True
                        continue
                refined.append(part)
            parts = refined

    components = []
    for part in parts:
        if part == 1:
            continue
        prime_power = integer_root_prime_power(part)
        if prime_power is not None:
            components.append(prime_power)
        else:
            logger.debug(f"component {part} of {n} not separated by gcds, factoring it")
            components.extend(factor_integer(part).factors)
    return sorted(components)


def solve_partial(system: EquationSystem, residue_cap: int = DEFAULT_RESIDUE_CAP,
                  factorize: bool = True) -> PartialSolution:
    """Every unknown whose value the system fixes modulo n, and nothing else."""
    k = system.columns
    if not k:
        raise InvalidArgument("system has zero columns")
    if not system.rows:
        raise InvalidArgument("system has no rows")

    if factorize:
        components = list(factor_integer(system.modulus).factors)
    else:
        components = _coprime_components(system)

    locals_ = [_solve_local(system.rows, k, q, e) for q, e in components]
    if any(local.inconsistent for local in locals_):
        logger.debug(f"inconsistent system mod {system.modulus} with {len(system.rows)} rows")
        return PartialSolution(inconsistent=True)

    moduli = [q ** e for q, e in components]
    determined: Dict[int, int] = {}
    candidates: Dict[int, Tuple[int, ...]] = {}
    for j in range(k):
        counts = [local.count(j) for local in locals_]
        if all(c == 1 for c in counts):
            determined[j] = crt_combine([local.base[j] for local in locals_], moduli)
        elif math.prod(counts) <= residue_cap:
            combos = itertools.product(*(local.values(j) for local in locals_))
            candidates[j] = tuple(sorted(crt_combine(list(combo), moduli) for combo in combos))

    return PartialSolution(determined, candidates, min(local.rank for local in locals_))
