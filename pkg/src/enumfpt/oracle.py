"""Brute-force ground truth: try every candidate set of operations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List

from .core import ProblemContract, sort_solutions
from .errors import InstanceTooLarge

MAX_UNIVERSE = 40
MAX_K = 5


@dataclass(frozen=True)
class OracleResult:
    all: List[frozenset]
    minimal: List[frozenset]


def brute_force(contract: ProblemContract, x, max_universe: int = MAX_UNIVERSE,
                max_k: int = MAX_K) -> OracleResult:
    """Every consistent candidate of size <= kappa(x) that passes the solution
    predicate, in enumeration order, plus its inclusion-minimal members."""
    universe = list(contract.operations(x))
    k = contract.parameter(x)
    if len(universe) > max_universe or k > max_k:
        raise InstanceTooLarge(
            f"instance-too-large: {len(universe)} operations, parameter {k}")
    sols = []
    for r in range(min(k, len(universe)) + 1):
        for combo in combinations(universe, r):
            s = frozenset(combo)
            if contract.is_consistent(s) and contract.is_solution(x, s):
                sols.append(s)
    sols = sort_solutions(sols, contract)
    found = set(sols)
    minimal = [s for s in sols
               if not any(frozenset(sub) in found
                          for r in range(len(s)) for sub in combinations(s, r))]
    return OracleResult(sols, minimal)
