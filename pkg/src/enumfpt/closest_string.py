"""Closest string over {0,1}: flip positions of the first string.

A solution is a set S of 1-based positions such that flipping them in the
first string brings it within Hamming distance d of every input string.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .core import (
    Problem,
    ProblemContract,
    SearchStats,
    generic_neighbourhood,
    int_encoding,
    minimal_family,
)
from .errors import InvariantViolation, LengthMismatch, PositionOutOfRange


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise LengthMismatch()
    return sum(1 for x, y in zip(a, b) if x != y)


def apply_flips(w: str, s) -> str:
    chars = list(w)
    for i in s:
        if not 1 <= i <= len(w):
            raise PositionOutOfRange(f"position-out-of-range: {i}")
        chars[i - 1] = "1" if chars[i - 1] == "0" else "0"
    return "".join(chars)


@dataclass(frozen=True)
class StringInstance:
    """Binary strings of equal length and a distance bound ``d``.

    ``center`` is the string the flips act on and ``budget`` the number of
    flips allowed; both default to the first string and ``d``. Committing
    flips in the generic neighbourhood moves ``center`` and lowers ``budget``
    while ``d`` stays the distance bound.
    """

    strings: Tuple[str, ...]
    d: int
    center: Optional[str] = None
    budget: Optional[int] = None

    def __post_init__(self):
        strings = tuple(self.strings)
        if not strings:
            raise InvariantViolation("at least one string is required")
        n = len(strings[0])
        for s in strings:
            if len(s) != n:
                raise InvariantViolation("strings have unequal lengths")
            if set(s) - {"0", "1"}:
                raise InvariantViolation(f"non-binary string {s!r}")
        if self.d < 0:
            raise InvariantViolation("d must be non-negative")
        object.__setattr__(self, "strings", strings)
        if self.center is None:
            object.__setattr__(self, "center", strings[0])
        elif len(self.center) != n:
            raise InvariantViolation("center has the wrong length")
        if self.budget is None:
            object.__setattr__(self, "budget", self.d)

    @property
    def n(self) -> int:
        return len(self.strings[0])


def is_solution(x: StringInstance, s) -> bool:
    if len(s) > x.budget or any(not 1 <= i <= x.n for i in s):
        return False
    c = apply_flips(x.center, s)
    return all(hamming(c, t) <= x.d for t in x.strings)


def min_closest_string(x: StringInstance, stats: Optional[SearchStats] = None) -> set:
    """Inclusion-minimal flip sets, by a bounded search tree.

    While some string is farther than d from the current candidate, one of
    any d+1 mismatching positions outside S has to be flipped; branch on the
    first d+1 of them.
    """
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()
    d = x.d

    def rec(s: frozenset, c: str):
        stats.nodes += 1
        far = next((t for t in x.strings if hamming(c, t) > d), None)
        if far is None:
            found.add(s)
            stats.leaves += 1
            return
        if len(s) >= x.budget:
            stats.leaves += 1
            return
        mism = [i for i in range(1, x.n + 1) if c[i - 1] != far[i - 1] and i not in s][:d + 1]
        if not mism:
            stats.leaves += 1
        for i in mism:
            child = s | {i}
            if child in visited:
                continue
            visited.add(child)
            rec(child, apply_flips(c, (i,)))

    rec(frozenset(), x.center)
    return minimal_family(found)


def _restrict(x: StringInstance, ops, budget):
    yield replace(x, center=apply_flips(x.center, ops), budget=budget)


CONTRACT = ProblemContract(
    name="closest-string",
    parameter=lambda x: x.budget,
    operations=lambda x: range(1, x.n + 1),
    is_consistent=lambda s: True,
    is_solution=is_solution,
    encode_op=int_encoding,
    restrict=_restrict,
    format_op=lambda i: f"flip({i})",
)


def _min_enum(x):
    return min_closest_string(x)


_nbf = generic_neighbourhood(_min_enum, CONTRACT)


def cs_neighbourhood(x: StringInstance, inp) -> set:
    """Seed: the minimal flip sets. Solution S: for each position i outside S,
    S + i united with each minimal flip set, disjoint from S + i, of the
    instance whose center is the first string flipped at S + i and whose
    flip budget is |S| + 1 smaller."""
    return _nbf(x, inp)


PROBLEM = Problem(CONTRACT, _min_enum, cs_neighbourhood)
