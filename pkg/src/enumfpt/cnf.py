"""CNF formulas, partial assignments and clause-defined base classes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, FrozenSet, Iterable, Mapping, Tuple

from .errors import InvariantViolation

Clause = FrozenSet[int]


@dataclass(frozen=True)
class CnfFormula:
    """Clauses are sets of non-zero signed literals over ``variables``.

    ``variables`` may contain variables that no clause mentions; they still
    belong to the formula (and to its backdoor universe).
    """

    variables: FrozenSet[int]
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        vs = frozenset(self.variables)
        cls = tuple(frozenset(c) for c in self.clauses)
        for c in cls:
            seen = set()
            for lit in c:
                if lit == 0:
                    raise InvariantViolation("literal 0 is not allowed")
                if abs(lit) in seen:
                    raise InvariantViolation(f"clause {sorted(c)} mentions a variable twice")
                seen.add(abs(lit))
                if abs(lit) not in vs:
                    raise InvariantViolation(f"variable {abs(lit)} not declared")
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "clauses", cls)

    @classmethod
    def from_clauses(cls, clauses: Iterable[Iterable[int]], variables: Iterable[int] = ()) -> "CnfFormula":
        clauses = [frozenset(c) for c in clauses]
        vs = set(variables)
        for c in clauses:
            vs.update(abs(lit) for lit in c)
        return cls(frozenset(vs), tuple(clauses))

    @property
    def width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)


def satisfies(phi: CnfFormula, true_vars) -> bool:
    """Does the assignment setting exactly ``true_vars`` to 1 satisfy ``phi``?"""
    return all(any((lit > 0) == (abs(lit) in true_vars) for lit in c) for c in phi.clauses)


def apply_assignment(phi: CnfFormula, theta: Mapping[int, int]) -> CnfFormula:
    """Drop satisfied clauses and falsified literals; empty clauses are kept."""
    out = []
    for c in phi.clauses:
        rest = []
        sat = False
        for lit in c:
            v = abs(lit)
            if v in theta:
                if bool(theta[v]) == (lit > 0):
                    sat = True
                    break
            else:
                rest.append(lit)
        if not sat:
            out.append(frozenset(rest))
    return CnfFormula(phi.variables - frozenset(theta), tuple(out))


def delete_vars(phi: CnfFormula, vs) -> CnfFormula:
    vs = frozenset(vs)
    clauses = tuple(frozenset(lit for lit in c if abs(lit) not in vs) for c in phi.clauses)
    return CnfFormula(phi.variables - vs, clauses)


def brute_force_sat(phi: CnfFormula) -> bool:
    vs = sorted(phi.variables)
    return any(satisfies(phi, set(t)) for r in range(len(vs) + 1) for t in combinations(vs, r))


def horn_sat(phi: CnfFormula) -> bool:
    """Satisfiability of a Horn formula by forward chaining from all-false."""
    true: set = set()
    changed = True
    while changed:
        changed = False
        for c in phi.clauses:
            if any((lit > 0) == (abs(lit) in true) for lit in c):
                continue
            pos = [lit for lit in c if lit > 0]
            if not pos:
                return False
            true.add(pos[0])
            changed = True
    return True


def two_sat(phi: CnfFormula) -> bool:
    """Satisfiability of a formula with at most two literals per clause."""
    graph: dict = {}

    def arc(a, b):
        graph.setdefault(a, []).append(b)
        graph.setdefault(b, [])

    for c in phi.clauses:
        lits = list(c)
        if not lits:
            return False
        if len(lits) == 1:
            arc(-lits[0], lits[0])
        elif len(lits) == 2:
            a, b = lits
            arc(-a, b)
            arc(-b, a)
        else:
            raise InvariantViolation("two_sat needs clauses of width <= 2")
    comp = _scc(graph)
    return all(comp[lit] != comp[-lit] for lit in graph if -lit in graph)


def _scc(graph: dict) -> dict:
    # iterative Tarjan
    index, low, comp = {}, {}, {}
    stack, on_stack = [], set()
    counter = 0
    for root in graph:
        if root in index:
            continue
        work = [(root, iter(graph[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = v
                    if w == v:
                        break
    return comp


@dataclass(frozen=True)
class BaseClass:
    """Clause-defined formula class with a polynomial satisfiability test."""

    name: str
    clause_ok: Callable[[Clause], bool]
    is_satisfiable: Callable[[CnfFormula], bool]
    closed_under_literal_removal: bool = True

    def __repr__(self):
        return f"BaseClass({self.name})"


HORN = BaseClass("horn", lambda c: sum(1 for lit in c if lit > 0) <= 1, horn_sat)
TWO_CNF = BaseClass("2cnf", lambda c: len(c) <= 2, two_sat)

BASE_CLASSES = {c.name: c for c in (HORN, TWO_CNF)}


def is_in_class(phi: CnfFormula, cls: BaseClass) -> bool:
    return all(cls.clause_ok(c) for c in phi.clauses)


def first_bad_clause(phi: CnfFormula, cls: BaseClass):
    return next((c for c in phi.clauses if not cls.clause_ok(c)), None)
