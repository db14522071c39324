"""Ordered enumeration of all solutions of size at most k, smallest first."""

from .core import (
    SEED,
    Problem,
    ProblemContract,
    SearchStats,
    SolutionKey,
    SolutionQueue,
    build_neighbourhood,
    compare_solutions,
    enumerate_ordered,
    iter_ordered,
    solution_key,
)
from .oracle import OracleResult, brute_force

__all__ = [
    "SEED",
    "OracleResult",
    "Problem",
    "ProblemContract",
    "SearchStats",
    "SolutionKey",
    "SolutionQueue",
    "brute_force",
    "build_neighbourhood",
    "compare_solutions",
    "enumerate_ordered",
    "iter_ordered",
    "solution_key",
]
