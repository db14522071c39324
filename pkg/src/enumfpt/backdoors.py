"""Weak and strong backdoor sets into clause-defined base classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cnf import (
    HORN,
    BaseClass,
    CnfFormula,
    apply_assignment,
    delete_vars,
    first_bad_clause,
    is_in_class,
)
from .core import (
    Problem,
    ProblemContract,
    SearchStats,
    assignments,
    generic_neighbourhood,
    int_encoding,
    minimal_family,
)
from .errors import UnsupportedClass

WEAK = "weak"
STRONG = "strong"


@dataclass(frozen=True)
class BackdoorInstance:
    phi: CnfFormula
    k: int
    cls: BaseClass = HORN
    mode: str = STRONG

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.mode not in (WEAK, STRONG):
            raise ValueError(f"unknown backdoor mode {self.mode!r}")


def is_weak_backdoor(phi: CnfFormula, s, cls: BaseClass) -> bool:
    for theta in assignments(s):
        r = apply_assignment(phi, theta)
        if is_in_class(r, cls) and cls.is_satisfiable(r):
            return True
    return False


def is_strong_backdoor(phi: CnfFormula, s, cls: BaseClass) -> bool:
    """Checked over every assignment of ``s``, not through variable deletion."""
    return all(is_in_class(apply_assignment(phi, theta), cls) for theta in assignments(s))


def is_deletion_backdoor(phi: CnfFormula, s, cls: BaseClass) -> bool:
    return is_in_class(delete_vars(phi, s), cls)


def min_strong_backdoors(phi: CnfFormula, k: int, cls: BaseClass,
                         stats: Optional[SearchStats] = None) -> set:
    """Inclusion-minimal S, |S| <= k, with ``phi - S`` in the class.

    Some variable of a clause outside the class must be deleted, so the
    search branches on the (at most 3) variables of the first such clause.
    """
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()

    def rec(s: frozenset, residue: CnfFormula):
        stats.nodes += 1
        bad = first_bad_clause(residue, cls)
        if bad is None:
            found.add(s)
            stats.leaves += 1
            return
        if len(s) >= k:
            stats.leaves += 1
            return
        for v in sorted({abs(lit) for lit in bad}):
            child = s | {v}
            if child in visited:
                continue
            visited.add(child)
            rec(child, delete_vars(residue, (v,)))

    rec(frozenset(), phi)
    return minimal_family(found)


def min_weak_backdoors(phi: CnfFormula, k: int, cls: BaseClass,
                       stats: Optional[SearchStats] = None) -> set:
    """Inclusion-minimal weak backdoors of size at most ``k``.

    At a node S that is not yet a weak backdoor, every assignment of S either
    leaves a residue inside the class (then it is unsatisfiable and no
    extension helps) or leaves a first clause outside the class, which any
    weak backdoor extending S with that assignment has to touch. The search
    branches on the union of those clauses' variables.
    """
    if not cls.closed_under_literal_removal:
        raise UnsupportedClass(f"unsupported-class: {cls.name}")
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()

    def rec(s: frozenset):
        stats.nodes += 1
        branch: list = []
        for theta in assignments(s):
            r = apply_assignment(phi, theta)
            bad = first_bad_clause(r, cls)
            if bad is None:
                if cls.is_satisfiable(r):
                    found.add(s)
                    stats.leaves += 1
                    return
            else:
                branch.extend(sorted(abs(lit) for lit in bad))
        if len(s) >= k or not branch:
            stats.leaves += 1
            return
        for v in dict.fromkeys(branch):
            child = s | {v}
            if child in visited:
                continue
            visited.add(child)
            rec(child)

    rec(frozenset())
    return minimal_family(found)


def _min_enum(x: BackdoorInstance):
    if x.mode == WEAK:
        return min_weak_backdoors(x.phi, x.k, x.cls)
    return min_strong_backdoors(x.phi, x.k, x.cls)


def _is_solution(x: BackdoorInstance, s) -> bool:
    if len(s) > x.k or not set(s) <= x.phi.variables:
        return False
    if x.mode == WEAK:
        return is_weak_backdoor(x.phi, s, x.cls)
    return is_strong_backdoor(x.phi, s, x.cls)


def _restrict(x: BackdoorInstance, ops, budget):
    if x.mode == WEAK:
        for theta in assignments(ops):
            yield BackdoorInstance(apply_assignment(x.phi, theta), budget, x.cls, x.mode)
    else:
        yield BackdoorInstance(delete_vars(x.phi, ops), budget, x.cls, x.mode)


CONTRACT = ProblemContract(
    name="backdoor",
    parameter=lambda x: x.k,
    operations=lambda x: sorted(x.phi.variables),
    is_consistent=lambda s: True,
    is_solution=_is_solution,
    encode_op=int_encoding,
    restrict=_restrict,
    format_op=lambda v: f"var({v})",
)

_nbf = generic_neighbourhood(_min_enum, CONTRACT)


def weak_neighbourhood(x: BackdoorInstance, inp) -> set:
    """Seed: minimal weak backdoors. Backdoor S: for each variable v outside S
    and each assignment theta of S + v, S + v united with each minimal weak
    backdoor of theta(phi) within budget k - |S| - 1."""
    if x.mode != WEAK:
        raise ValueError("weak_neighbourhood needs a weak-mode instance")
    return _nbf(x, inp)


def strong_neighbourhood(x: BackdoorInstance, inp) -> set:
    """Seed: minimal strong backdoors. Backdoor S: for each variable v outside
    S, S + v united with each minimal strong backdoor of phi - (S + v) within
    budget k - |S| - 1."""
    if x.mode != STRONG:
        raise ValueError("strong_neighbourhood needs a strong-mode instance")
    return _nbf(x, inp)


WEAK_PROBLEM = Problem(CONTRACT, _min_enum, weak_neighbourhood)
STRONG_PROBLEM = Problem(CONTRACT, _min_enum, strong_neighbourhood)
