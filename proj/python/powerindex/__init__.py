"""Exact Banzhaf and Shapley-Shubik indices for weighted voting games.

Rationals come back as fractions.Fraction; inputs may be int, Fraction or "p/q" strings.
"""

from ._core import (
    DegenerateSystemError,
    PowerIndexError,
    aab_fixed_solutions,
    aab_ss_power_of_A,
    ab_fixed_solutions,
    ab_ss_power_of_A,
    apply_index_map,
    banzhaf,
    check_index_disagreement,
    count_winning,
    divisor_system,
    iterate,
    run_suite,
    shapley_shubik,
)

__all__ = [
    "DegenerateSystemError",
    "PowerIndexError",
    "aab_fixed_solutions",
    "aab_ss_power_of_A",
    "ab_fixed_solutions",
    "ab_ss_power_of_A",
    "apply_index_map",
    "banzhaf",
    "check_index_disagreement",
    "count_winning",
    "divisor_system",
    "iterate",
    "run_suite",
    "shapley_shubik",
]
