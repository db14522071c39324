"""Generic ordered-enumeration engine.

Solutions are frozensets of hashable operations. A problem plugs in through a
:class:`ProblemContract`; enumeration in non-decreasing cardinality is driven
by a neighbourhood function and a duplicate-free priority queue.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Iterable, Iterator, NamedTuple, Optional

from .errors import QueueEmpty


class _Seed:
    """Distinguished neighbourhood input that asks for the initial solutions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SEED"

    def __reduce__(self):
        return (_Seed, ())


SEED = _Seed()

Solution = frozenset


@dataclass(frozen=True)
class ProblemContract:
    """What the engine needs to know about a problem.

    ``encode_op`` must return a fixed-width byte string per operation, so that
    the sorted concatenation orders like the sorted tuple of operations.
    ``restrict(x, ops, budget)`` yields the instance(s) obtained by committing
    ``ops`` and leaving ``budget`` further operations; it is only needed for
    :func:`build_neighbourhood`.
    """

    name: str
    parameter: Callable[[Any], int]
    operations: Callable[[Any], Iterable[Any]]
    is_consistent: Callable[[frozenset], bool]
    is_solution: Callable[[Any, frozenset], bool]
    encode_op: Callable[[Any], bytes]
    restrict: Optional[Callable[[Any, frozenset, int], Iterable[Any]]] = None
    format_op: Callable[[Any], str] = str


class SolutionKey(NamedTuple):
    cardinality: int
    encoding: bytes


def encode_solution(s, contract: ProblemContract) -> bytes:
    return b"".join(sorted(contract.encode_op(t) for t in s))


def solution_key(s, contract: ProblemContract) -> SolutionKey:
    return SolutionKey(len(s), encode_solution(s, contract))


def compare_solutions(a, b, contract: ProblemContract) -> int:
    """Three-way comparison: -1, 0 or 1 under (cardinality, encoding) order."""
    ka, kb = solution_key(a, contract), solution_key(b, contract)
    return (ka > kb) - (ka < kb)


def sort_solutions(solutions: Iterable, contract: ProblemContract) -> list:
    return sorted(solutions, key=lambda s: solution_key(s, contract))


def minimal_family(solutions: Iterable) -> set:
    """Keep the inclusion-minimal members of a family of sets."""
    family = {frozenset(s) for s in solutions}
    by_size = sorted(family, key=len)
    kept: list = []
    for s in by_size:
        if not any(m < s for m in kept):
            kept.append(s)
    return set(kept)


class SolutionQueue:
    """Priority queue of solutions keyed by :class:`SolutionKey`.

    Inserting a solution already stored is a no-op. Both insert and
    extract-min are logarithmic in the queue size.
    """

    def __init__(self, contract: ProblemContract):
        self._contract = contract
        self._heap: list = []
        self._stored: set = set()
        self.peak = 0
        self.inserted = 0

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)

    def __contains__(self, s):
        return encode_solution(s, self._contract) in self._stored

    def insert(self, s) -> bool:
        """Insert ``s``; return False if it was already present."""
        s = frozenset(s)
        key = solution_key(s, self._contract)
        if key.encoding in self._stored:
            return False
        self._stored.add(key.encoding)
        # keys are unique among stored entries, so solutions are never compared
        heapq.heappush(self._heap, (key, s))
        self.inserted += 1
        self.peak = max(self.peak, len(self._heap))
        return True

    def extract_min(self):
        if not self._heap:
            raise QueueEmpty()
        key, s = heapq.heappop(self._heap)
        self._stored.discard(key.encoding)
        return s

    def peek(self):
        if not self._heap:
            raise QueueEmpty()
        return self._heap[0][1]


Neighbourhood = Callable[[Any, Any], Iterable]


def iter_ordered(x, nbf: Neighbourhood, contract: ProblemContract,
                 queue: Optional[SolutionQueue] = None) -> Iterator[frozenset]:
    """Yield every solution of ``x`` once, in non-decreasing key order.

    ``nbf(x, SEED)`` seeds the queue; after each extraction the neighbours of
    the extracted solution are inserted. The neighbourhood of a solution is
    computed lazily, after it has been yielded.
    """
    q = SolutionQueue(contract) if queue is None else queue
    for s in nbf(x, SEED):
        q.insert(s)
    while q:
        s = q.extract_min()
        yield s
        for t in nbf(x, s):
            q.insert(t)


def enumerate_ordered(x, nbf: Neighbourhood, sink: Callable[[frozenset], Any],
                      contract: ProblemContract) -> None:
    for s in iter_ordered(x, nbf, contract):
        sink(s)


def build_neighbourhood(min_enum: Callable[[Any], Iterable], x, inp,
                        contract: ProblemContract) -> set:
    """Neighbourhood built from an enumerator of minimal solutions.

    For the seed this is ``min_enum(x)``. For a solution ``S`` it is every
    consistent ``S | {t} | S2`` where ``t`` is an operation outside ``S``
    consistent with it and ``S2`` is a minimal solution of an instance
    obtained by committing ``S | {t}`` with budget ``kappa(x) - |S| - 1``.
    """
    if inp is SEED:
        return {frozenset(s) for s in min_enum(x)}
    s = frozenset(inp)
    budget = contract.parameter(x) - len(s) - 1
    if budget < 0:
        return set()
    out: set = set()
    for t in contract.operations(x):
        if t in s:
            continue
        base = s | {t}
        if not contract.is_consistent(base):
            continue
        for y in contract.restrict(x, base, budget):
            for s2 in min_enum(y):
                if s2 & base:
                    continue
                u = base | s2
                if contract.is_consistent(u):
                    out.add(u)
    return out


def generic_neighbourhood(min_enum: Callable[[Any], Iterable],
                          contract: ProblemContract) -> Neighbourhood:
    return lambda x, inp: build_neighbourhood(min_enum, x, inp, contract)


@dataclass
class SearchStats:
    """Counters filled in by the bounded search trees."""

    nodes: int = 0
    leaves: int = 0


@dataclass(frozen=True)
class Problem:
    """A problem contract bundled with its two enumeration routes."""

    contract: ProblemContract
    min_enum: Callable[[Any], Iterable]
    neighbourhood: Neighbourhood

    def enumerate_all(self, x) -> Iterator[frozenset]:
        return iter_ordered(x, self.neighbourhood, self.contract)

    def enumerate_min(self, x) -> list:
        return sort_solutions(self.min_enum(x), self.contract)


def assignments(variables: Iterable[int]) -> Iterator[dict]:
    """All total 0/1 maps over ``variables``, in binary counting order."""
    vs = sorted(variables)
    for bits in product((0, 1), repeat=len(vs)):
        yield dict(zip(vs, bits))


def int_encoding(i: int) -> bytes:
    return int(i).to_bytes(4, "big")
