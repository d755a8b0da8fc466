"""Closed-form quantities for double index calculus."""
from fractions import Fraction
from math import comb
from typing import Dict

from numtheory.errors import InvalidArgument


def prob_lower_bound(u: int, v: int) -> Fraction:
    """Lower bound on the chance that tables of u and v logs share a prime.

    Exact value of ``1 + 2**-(u*v) - 2**-v - 2**-u``.
    """
    if u < 1 or v < 1:
        raise InvalidArgument(f"u and v must be >= 1, got ({u}, {v})")
    return 1 + Fraction(1, 2 ** (u * v)) - Fraction(1, 2 ** v) - Fraction(1, 2 ** u)


def nice_case_count(k: int) -> int:
    """``sum C(k, i) * C(k-i, j) * C(k-i, m)`` over 1 <= i <= k and 1 <= j, m <= k-i."""
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    total = 0
    for i in range(1, k + 1):
        rest = k - i
        for j in range(1, rest + 1):
            for m in range(1, rest + 1):
                total += comb(k, i) * comb(rest, j) * comb(rest, m)
    return total


def theoretical_log_counts(k: int, i: int, j: int) -> Dict[str, int]:
    """Prime logs each variant needs: k + 1 for index calculus, i + j or max(i, j) for double."""
    if k < 1 or i < 0 or j < 0:
        raise InvalidArgument(f"invalid log counts k={k}, i={i}, j={j}")
    return {
        "ic": k + 1,
        "dic_sequential": i + j,
        "dic_parallel": max(i, j),
    }
