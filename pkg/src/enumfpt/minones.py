"""Weighted satisfiability: models with at most k variables set to true.

A solution is the set of variables set to 1; every other variable is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cnf import CnfFormula, apply_assignment, satisfies
from .core import (
    Problem,
    ProblemContract,
    SearchStats,
    generic_neighbourhood,
    int_encoding,
    minimal_family,
)


@dataclass(frozen=True)
class MinOnesInstance:
    phi: CnfFormula
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


def min_minones(phi: CnfFormula, k: int, stats: Optional[SearchStats] = None) -> set:
    """Subset-minimal models with at most ``k`` true variables.

    Starts from all-zero; while some clause is falsified, sets one of its
    variables to true. Under the current true-set a falsified clause has all
    its negated variables already true, so only its positive variables are
    candidates.
    """
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()

    def rec(s: frozenset):
        stats.nodes += 1
        bad = next((c for c in phi.clauses
                    if not any((lit > 0) == (abs(lit) in s) for lit in c)), None)
        if bad is None:
            found.add(s)
            stats.leaves += 1
            return
        cands = sorted(abs(lit) for lit in bad if abs(lit) not in s)
        if len(s) >= k or not cands:
            stats.leaves += 1
            return
        for v in cands:
            child = s | {v}
            if child in visited:
                continue
            visited.add(child)
            rec(child)

    rec(frozenset())
    return minimal_family(found)


def _is_solution(x: MinOnesInstance, s) -> bool:
    return len(s) <= x.k and set(s) <= x.phi.variables and satisfies(x.phi, s)


def _restrict(x: MinOnesInstance, ops, budget):
    yield MinOnesInstance(apply_assignment(x.phi, {v: 1 for v in ops}), budget)


CONTRACT = ProblemContract(
    name="minones",
    parameter=lambda x: x.k,
    operations=lambda x: sorted(x.phi.variables),
    is_consistent=lambda s: True,
    is_solution=_is_solution,
    encode_op=int_encoding,
    restrict=_restrict,
    format_op=lambda v: f"true({v})",
)


def _min_enum(x: MinOnesInstance):
    return min_minones(x.phi, x.k)


_nbf = generic_neighbourhood(_min_enum, CONTRACT)


def minones_neighbourhood(x: MinOnesInstance, inp) -> set:
    """Seed: minimal models. Model T: for each v outside T, T + v united with
    each minimal model of phi with T + v fixed to true, within budget
    k - |T| - 1."""
    return _nbf(x, inp)


PROBLEM = Problem(CONTRACT, _min_enum, minones_neighbourhood)
