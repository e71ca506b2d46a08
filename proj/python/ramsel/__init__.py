"""Selection-function products and a verified finitary Ramsey realizer."""

from ._core import (
    BudgetExceeded,
    RamselError,
    brute_force_play,
    canonical_branch,
    exact_beta,
    optimal_play,
    prec,
    solve,
    t_prime,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "RamselError",
    "brute_force_play",
    "canonical_branch",
    "exact_beta",
    "optimal_play",
    "prec",
    "solve",
    "t_prime",
    "verify",
]
