import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from numtheory.errors import InvalidArgument
from numtheory.linsys import EquationSystem, solve_partial

MAX_ASSIGNMENTS = 200_000


def _brute_force(system: EquationSystem):
    """Every solution over Z_n^k, as an (N, k) array."""
    n, k = system.modulus, system.columns
    grid = np.indices((n,) * k, dtype=np.int64).reshape(k, -1).T
    mask = np.ones(len(grid), dtype=bool)
    for coeffs, rhs in system.rows:
        mask &= (grid @ np.array(coeffs, dtype=np.int64) - rhs) % n == 0
    return grid[mask]


@st.composite
def systems(draw):
    n = draw(st.integers(2, 60))
    k = draw(st.integers(1, 4))
    assume(n ** k <= MAX_ASSIGNMENTS)
    row_count = draw(st.integers(1, 6))
    rows = tuple(
        (tuple(draw(st.integers(0, n - 1)) for _ in range(k)), draw(st.integers(0, n - 1)))
        for _ in range(row_count)
    )
    return EquationSystem(n, rows, k)


def test_unique_solution_mod_7():
    system = EquationSystem(7, (((1, 1), 3), ((1, 2), 5)))
    assert solve_partial(system).determined == {0: 1, 1: 2}


def test_underdetermined_prime_modulus():
    solution = solve_partial(EquationSystem(5, (((1, 1), 3),)))
    assert solution.determined == {}
    assert solution.rank == 1


def test_ambiguous_unknown_gets_candidates():
    solution = solve_partial(EquationSystem(4, (((2,), 2),)))
    assert solution.determined == {}
    assert solution.candidates == {0: (1, 3)}


def test_composite_modulus_mixes_components():
    # 2x = 4 (mod 6): x = 2 (mod 3), free mod 2
    solution = solve_partial(EquationSystem(6, (((2,), 4),)))
    assert solution.determined == {}
    assert solution.candidates == {0: (2, 5)}


def test_residue_cap_drops_large_candidate_sets():
    solution = solve_partial(EquationSystem(64, (((32,), 0),)), residue_cap=16)
    assert solution.candidates == {}
    assert solution.determined == {}


def test_inconsistent_system_is_flagged():
    solution = solve_partial(EquationSystem(5, (((1,), 1), ((1,), 2))))
    assert solution.inconsistent
    assert solution.determined == {}


def test_invalid_systems():
    with pytest.raises(InvalidArgument):
        solve_partial(EquationSystem(5, ()))
    with pytest.raises(InvalidArgument):
        solve_partial(EquationSystem(5, (), 2))
    with pytest.raises(InvalidArgument):
        EquationSystem(5, (((1, 2), 1), ((1,), 1)))
    with pytest.raises(InvalidArgument):
        EquationSystem(1, (((1,), 0),))


def test_rows_are_reduced():
    system = EquationSystem(5, (((7, -1), 12),))
    assert system.rows == (((2, 4), 2),)
    assert system.extended([((1, 1), 1)]).rows[1] == ((1, 1), 1)


@pytest.mark.parametrize("factorize", [True, False])
@given(system=systems())
def test_matches_brute_force(system, factorize):
    solution = solve_partial(system, residue_cap=16, factorize=factorize)
    solutions = _brute_force(system)
    if len(solutions) == 0:
        assert solution.inconsistent
        assert solution.determined == {}
        return

    assert not solution.inconsistent
    for j in range(system.columns):
        values = sorted(set(int(v) for v in solutions[:, j]))
        if len(values) == 1:
            assert solution.determined.get(j) == values[0]
        else:
            assert j not in solution.determined
            if len(values) <= 16:
                assert solution.candidates.get(j) == tuple(values)


@given(system=systems(), data=st.data())
def test_row_permutation_does_not_matter(system, data):
    rows = data.draw(st.permutations(system.rows))
    permuted = EquationSystem(system.modulus, tuple(rows), system.columns)
    assert solve_partial(permuted).determined == solve_partial(system).determined


@given(system=systems(), data=st.data())
def test_scaling_by_unit_does_not_matter(system, data):
    n = system.modulus
    units = [u for u in range(1, n) if np.gcd(u, n) == 1]
    scaled = []
    for coeffs, rhs in system.rows:
        u = data.draw(st.sampled_from(units))
        scaled.append((tuple(c * u for c in coeffs), rhs * u))
    scaled_system = EquationSystem(n, tuple(scaled), system.columns)
    assert solve_partial(scaled_system).determined == solve_partial(system).determined


def _half_grid(n: int, columns: int) -> np.ndarray:
    if columns == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((n,) * columns, dtype=np.int64).reshape(columns, -1).T


def _column_values(system: EquationSystem):
    """Per-unknown value sets over all solutions, by meeting in the middle on the two column halves."""
    n, k = system.modulus, system.columns
    M = np.array([coeffs for coeffs, _ in system.rows], dtype=np.int64)
    r = np.array([rhs for _, rhs in system.rows], dtype=np.int64)
    split = (k + 1) // 2
    left, right = _half_grid(n, split), _half_grid(n, k - split)
    weights = n ** np.arange(len(r), dtype=np.int64)
    key_left = ((left @ M[:, :split].T) % n) @ weights
    key_right = ((r - right @ M[:, split:].T) % n) @ weights
    left_ok = np.isin(key_left, key_right)
    right_ok = np.isin(key_right, key_left)
    if not left_ok.any():
        return None
    values = [sorted(set(left[left_ok, j].tolist())) for j in range(split)]
    values += [sorted(set(right[right_ok, j].tolist())) for j in range(k - split)]
    return values


def _random_system(rng: np.random.Generator) -> EquationSystem:
    n = int(rng.integers(2, 61))
    k = int(rng.integers(1, 5))
    row_count = int(rng.integers(1, 7))
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    coeffs = rng.integers(0, n, size=(row_count, k))
    # non-unit coefficients exercise the prime-power components
    coeffs *= rng.choice(divisors, size=(row_count, k))
    if rng.random() < 0.8:
        rhs = coeffs @ rng.integers(0, n, size=k)
    else:
        rhs = rng.integers(0, n, size=row_count)
    rows = tuple((tuple(int(c) for c in row), int(v)) for row, v in zip(coeffs, rhs))
    return EquationSystem(n, rows, k)


@pytest.mark.parametrize("factorize", [True, False])
def test_thousand_seeded_systems_match_enumeration(factorize):
    rng = np.random.default_rng(20240601)
    consistent = 0
    for _ in range(1000):
        system = _random_system(rng)
        solution = solve_partial(system, residue_cap=16, factorize=factorize)
        values = _column_values(system)
        if values is None:
            assert solution.inconsistent, system
            assert solution.determined == {}
            continue
        consistent += 1
        assert not solution.inconsistent, system
        for j, column in enumerate(values):
            if len(column) == 1:
                assert solution.determined.get(j) == column[0], (system, j)
            else:
                assert j not in solution.determined, (system, j)
                if len(column) <= 16:
                    assert solution.candidates.get(j) == tuple(column), (system, j)
                else:
                    assert j not in solution.candidates, (system, j)
    assert consistent >= 700
