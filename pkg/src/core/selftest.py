"""Regression checks over the published worked examples.

Each check returns ``(name, status, detail)`` with status PASS, FAIL or
KNOWN. KNOWN marks a published exponent pattern that disagrees with the
arithmetic; those are listed in KNOWN_DISCREPANCIES.md.
"""
import logging
from fractions import Fraction
from typing import Callable, List, Tuple

from analysis.bounds import prob_lower_bound
from numtheory.errors import BudgetExceeded, DlogError, GeneralityFailure
from numtheory.modmath import derive_seed, make_rng, mod_pow
from numtheory.smooth import build_factor_base, factor_over_base, is_smooth
from solvers.double_index import derive_x_from_match, solve_double_index_calculus
from solvers.index_calculus import solve_index_calculus
from solvers.types import DlpInstance, SolverBudget

logger = logging.getLogger(__name__)

CheckResult = Tuple[str, str, str]

GENERALITY_INSTANCE = (1040483, 340003, 50064)
GENERALITY_X = 6
GENERALITY_MATCH = (321790, 400459)

WORKED_P = 227
WORKED_G = 17
WORKED_B = 103
WORKED_BOUND = 15

# t -> exponents over (2, 3, 5, 7, 11, 13) as printed with the worked example
PUBLISHED_RELATIONS = {
    37: (1, 1, 0, 0, 0, 0),
    179: (1, 2, 0, 0, 0, 0),
    96: (1, 0, 2, 0, 0, 0),
    18: (0, 1, 0, 2, 0, 0),
    199: (0, 0, 1, 0, 2, 0),
    65: (0, 1, 0, 0, 0, 2),
}
# printed with a squared second prime; the actual values are squarefree
KNOWN_RELATION_ERRATA = frozenset({96, 18, 199, 65})


def _generality_instance() -> DlpInstance:
    p, g, b = GENERALITY_INSTANCE
    return DlpInstance(p, g, b)


def check_generality_power() -> CheckResult:
    p, g, b = GENERALITY_INSTANCE
    value = mod_pow(g, GENERALITY_X, p)
    status = "PASS" if value == b else "FAIL"
    return "generality instance g^6 mod p", status, f"{g}^{GENERALITY_X} mod {p} = {value}"


def check_worked_relations() -> List[CheckResult]:
    base = build_factor_base(WORKED_BOUND)
    results = []
    for t, published in PUBLISHED_RELATIONS.items():
        value = mod_pow(WORKED_G, t, WORKED_P)
        actual = factor_over_base(value, base)
        name = f"relation 17^{t} mod 227"
        if actual == published:
            results.append((name, "PASS", f"= {value}"))
        elif t in KNOWN_RELATION_ERRATA and actual is not None:
            results.append((name, "KNOWN", f"= {value}, exponents {actual}, published {published}"))
        else:
            results.append((name, "FAIL", f"= {value}, exponents {actual}, published {published}"))
    return results


def check_factor_base() -> CheckResult:
    primes = build_factor_base(WORKED_BOUND).primes
    status = "PASS" if primes == (2, 3, 5, 7, 11, 13) else "FAIL"
    return "factor base for B=15", status, str(primes)


def check_smooth_example() -> CheckResult:
    base = build_factor_base(11)
    exponents = factor_over_base(77, base)
    ok = is_smooth(77, base) and exponents == (0, 0, 0, 1, 1)
    return "77 = 7*11 is 11-smooth", "PASS" if ok else "FAIL", str(exponents)


def check_match_derivation() -> CheckResult:
    alpha, beta = GENERALITY_MATCH
    p = GENERALITY_INSTANCE[0]
    x = derive_x_from_match(alpha, beta, p - 1, _generality_instance())
    return "derive x from the published match", "PASS" if x == GENERALITY_X else "FAIL", f"x = {x}"


def check_double_index_generality() -> CheckResult:
    inst = _generality_instance()
    try:
        result = solve_double_index_calculus(
            inst, WORKED_BOUND, rng_g=make_rng(derive_seed(7, "g")), rng_b=make_rng(derive_seed(7, "b"))
        )
    except DlogError as e:
        return "double index calculus on the generality instance", "FAIL", f"{type(e).__name__}: {e}"
    status = "PASS" if result.x == GENERALITY_X else "FAIL"
    return ("double index calculus on the generality instance", status,
            f"x = {result.x} via prime {result.matched_prime}")


def check_index_calculus_generality() -> CheckResult:
    inst = _generality_instance()
    name = "index calculus fails on the generality instance"
    try:
        result = solve_index_calculus(inst, WORKED_BOUND, SolverBudget(max_rounds=20),
                                      make_rng(derive_seed(7, "g")))
    except (GeneralityFailure, BudgetExceeded) as e:
        return name, "PASS", type(e).__name__
    except DlogError as e:
        return name, "FAIL", f"unexpected {type(e).__name__}: {e}"
    return name, "FAIL", f"returned x = {result.x}"


def check_probability_bound() -> CheckResult:
    value = prob_lower_bound(5, 5)
    expected = Fraction(15, 16) + Fraction(1, 2 ** 25)
    return "probability bound at u=v=5", "PASS" if value == expected else "FAIL", f"{float(value):.10f}"


CHECKS: List[Callable[[], object]] = [
    check_generality_power,
    check_worked_relations,
    check_factor_base,
    check_smooth_example,
    check_match_derivation,
    check_double_index_generality,
    check_index_calculus_generality,
    check_probability_bound,
]


def run_selftest() -> List[CheckResult]:
    results: List[CheckResult] = []
    for check in CHECKS:
        try:
            outcome = check()
        except Exception as e:
            logger.error(f"selftest check {check.__name__} raised: {e}")
            outcome = (check.__name__, "FAIL", f"{type(e).__name__}: {e}")
        if isinstance(outcome, list):
            results.extend(outcome)
        else:
            results.append(outcome)
    return results
