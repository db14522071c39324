"""Graphs, graph operations and the bounded search tree for forbidden patterns."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from .core import (
    Problem,
    ProblemContract,
    SearchStats,
    generic_neighbourhood,
    minimal_family,
)
from .errors import InapplicableOperation, InconsistentSet

Edge = Tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph. Edges are stored as ``(u, v)`` with ``u < v``."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]
    _adj: Dict[int, FrozenSet[int]] = field(
        default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vs = frozenset(self.vertices)
        es = frozenset(_edge(u, v) for u, v in self.edges)
        adj: Dict[int, set] = {v: set() for v in vs}
        for u, v in es:
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u},{v}) references a missing vertex")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> "Graph":
        edges = list(edges)
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(frozenset(vs), frozenset(edges))

    def neighbours(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def non_edges(self) -> Iterator[Edge]:
        for u, v in combinations(sorted(self.vertices), 2):
            if v not in self._adj[u]:
                yield (u, v)

    def induced(self, vs: Iterable[int]) -> "Graph":
        vs = frozenset(vs)
        return Graph(vs, frozenset(e for e in self.edges if e[0] in vs and e[1] in vs))

    def components(self) -> list:
        """Connected components as sorted tuples, ordered by smallest vertex."""
        seen: set = set()
        out = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(tuple(sorted(comp)))
        return out

    def __len__(self):
        return len(self.vertices)


def path_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(zip(vs, vs[1:]), vs)


def cycle_graph(n: int, start: int = 1) -> Graph:
    vs = list(range(start, start + n))
    return Graph.from_edges(list(zip(vs, vs[1:])) + [(vs[-1], vs[0])], vs)


def complete_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(combinations(vs, 2), vs)


def empty_graph(n: int, start: int = 1) -> Graph:
    return Graph.from_edges((), range(start, start + n))


class OpKind(enum.IntEnum):
    # the numeric value is the opcode byte and fixes the tiebreak order
    DELETE_VERTEX = 1
    DELETE_EDGE = 2
    ADD_EDGE = 3


_OP_NAMES = {
    OpKind.DELETE_VERTEX: "deleteVertex",
    OpKind.DELETE_EDGE: "deleteEdge",
    OpKind.ADD_EDGE: "addEdge",
}
_OP_BY_NAME = {v: k for k, v in _OP_NAMES.items()}

EDGE_KINDS = frozenset({OpKind.ADD_EDGE, OpKind.DELETE_EDGE})


@dataclass(frozen=True, repr=False)
class GraphOp:
    kind: OpKind
    u: int
    v: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", OpKind(self.kind))
        if self.kind is OpKind.DELETE_VERTEX:
            if self.v is not None:
                raise ValueError("deleteVertex takes a single vertex")
        else:
            if self.v is None:
                raise ValueError(f"{_OP_NAMES[self.kind]} needs two endpoints")
            u, v = _edge(self.u, self.v)
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def endpoints(self) -> tuple:
        return (self.u,) if self.v is None else (self.u, self.v)

    @property
    def name(self) -> str:
        return _OP_NAMES[self.kind]

    def encode(self) -> bytes:
        return bytes([self.kind]) + self.u.to_bytes(4, "big") + (self.v or 0).to_bytes(4, "big")

    def __str__(self):
        return f"{self.name}({','.join(map(str, self.endpoints))})"

    __repr__ = __str__

    def __lt__(self, other):
        return self.encode() < other.encode()

    @classmethod
    def from_name(cls, name: str, args) -> "GraphOp":
        return cls(_OP_BY_NAME[name], *args)


def add_edge(u: int, v: int) -> GraphOp:
    return GraphOp(OpKind.ADD_EDGE, u, v)


def delete_edge(u: int, v: int) -> GraphOp:
    return GraphOp(OpKind.DELETE_EDGE, u, v)


def delete_vertex(v: int) -> GraphOp:
    return GraphOp(OpKind.DELETE_VERTEX, v)


def is_consistent(ops: Iterable[GraphOp]) -> bool:
    """No add/delete pair on one edge and no edge operation at a deleted vertex."""
    added, deleted, gone = set(), set(), set()
    for t in ops:
        if t.kind is OpKind.DELETE_VERTEX:
            gone.add(t.u)
        elif t.kind is OpKind.ADD_EDGE:
            added.add((t.u, t.v))
        else:
            deleted.add((t.u, t.v))
    if added & deleted:
        return False
    return not any(u in gone or v in gone for u, v in added | deleted)


def apply_ops(g: Graph, ops: Iterable[GraphOp]) -> Graph:
    """The graph obtained from ``g`` by applying a consistent operation set."""
    ops = list(ops)
    if not ops:
        return g
    if not is_consistent(ops):
        raise InconsistentSet()
    vs = set(g.vertices)
    es = set(g.edges)
    for t in ops:
        if t.kind is OpKind.DELETE_VERTEX:
            if t.u not in vs:
                raise InapplicableOperation(f"inapplicable-operation: {t}")
            vs.discard(t.u)
        elif t.kind is OpKind.ADD_EDGE:
            if t.u not in g.vertices or t.v not in g.vertices or (t.u, t.v) in g.edges:
                raise InapplicableOperation(f"inapplicable-operation: {t}")
            es.add((t.u, t.v))
        else:
            if (t.u, t.v) not in g.edges:
                raise InapplicableOperation(f"inapplicable-operation: {t}")
            es.discard((t.u, t.v))
    es = {e for e in es if e[0] in vs and e[1] in vs}
    return Graph(frozenset(vs), frozenset(es))


@dataclass(frozen=True)
class ForbiddenSet:
    """Finite list of induced patterns plus the operation kinds a problem allows."""

    patterns: Tuple[Graph, ...]
    kinds: FrozenSet[OpKind]

    def __post_init__(self):
        if not self.patterns or any(len(p) == 0 for p in self.patterns):
            raise ValueError("forbidden set needs non-empty patterns")
        object.__setattr__(self, "patterns", tuple(self.patterns))
        object.__setattr__(self, "kinds", frozenset(self.kinds))

    @property
    def c(self) -> int:
        return max(len(p) for p in self.patterns)


def _match_order(p: Graph) -> list:
    # every vertex after the first is adjacent to an earlier one where possible
    order: list = []
    rest = set(p.vertices)
    while rest:
        v = max(rest, key=lambda w: (sum(1 for x in order if p.has_edge(x, w)), p.degree(w), -w))
        order.append(v)
        rest.discard(v)
    return order


def iter_occurrences(g: Graph, pattern: Graph) -> Iterator[tuple]:
    """Yield injective maps (as tuples in match order) of ``pattern`` onto induced copies in ``g``."""
    order = _match_order(pattern)
    anchors = []
    for i, p in enumerate(order):
        earlier = [j for j in range(i) if pattern.has_edge(order[j], p)]
        anchors.append(earlier[0] if earlier else None)
    pdeg = [pattern.degree(p) for p in order]
    gverts = sorted(g.vertices)
    image: list = []
    used: set = set()

    def extend(i):
        if i == len(order):
            yield tuple(image)
            return
        a = anchors[i]
        cands = gverts if a is None else sorted(g.neighbours(image[a]))
        for v in cands:
            if v in used or g.degree(v) < pdeg[i]:
                continue
            if any(g.has_edge(image[j], v) != pattern.has_edge(order[j], order[i]) for j in range(i)):
                continue
            image.append(v)
            used.add(v)
            yield from extend(i + 1)
            image.pop()
            used.discard(v)

    for occ in extend(0):
        yield occ


def find_forbidden(g: Graph, forbidden: ForbiddenSet) -> Optional[tuple]:
    """First induced occurrence of a forbidden pattern in ``g``, or None.

    The occurrence is returned as the tuple of ``g``'s vertices, in the
    order the pattern's vertices were matched.
    """
    for pattern in forbidden.patterns:
        for occ in iter_occurrences(g, pattern):
            return occ
    return None


def _branch_ops(h: Graph, occ: tuple, kinds, s: frozenset) -> list:
    cands = []
    if OpKind.DELETE_VERTEX in kinds:
        cands.extend(delete_vertex(v) for v in occ)
    for u, v in combinations(occ, 2):
        if h.has_edge(u, v):
            if OpKind.DELETE_EDGE in kinds:
                cands.append(delete_edge(u, v))
        elif OpKind.ADD_EDGE in kinds:
            cands.append(add_edge(u, v))
    return sorted(t for t in set(cands) if t not in s and is_consistent(s | {t}))


def min_bst(g: Graph, k: int, forbidden: ForbiddenSet,
            stats: Optional[SearchStats] = None) -> set:
    """All inclusion-minimal solutions of ``(g, k)`` for a forbidden-pattern property.

    Bounded search: find an occurrence, branch on every allowed operation on
    its vertex set, stop at depth ``k``. Collected sets are reduced to the
    inclusion-minimal ones at the end.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()

    def rec(s: frozenset, h: Graph):
        stats.nodes += 1
        occ = find_forbidden(h, forbidden)
        if occ is None:
            found.add(s)
            stats.leaves += 1
            return
        if len(s) >= k:
            stats.leaves += 1
            return
        children = [t for t in _branch_ops(h, occ, forbidden.kinds, s) if s | {t} not in visited]
        if not children:
            stats.leaves += 1
        for t in children:
            child = s | {t}
            if child in visited:
                continue
            visited.add(child)
            rec(child, apply_ops(h, [t]))

    rec(frozenset(), g)
    return minimal_family(found)


@dataclass(frozen=True)
class GraphInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


def universe(g: Graph, kinds) -> list:
    """Every operation of an allowed kind that is applicable to ``g``."""
    ops = []
    if OpKind.DELETE_VERTEX in kinds:
        ops.extend(delete_vertex(v) for v in sorted(g.vertices))
    if OpKind.DELETE_EDGE in kinds:
        ops.extend(delete_edge(u, v) for u, v in sorted(g.edges))
    if OpKind.ADD_EDGE in kinds:
        ops.extend(add_edge(u, v) for u, v in g.non_edges())
    return sorted(ops)


def graph_contract(name: str, kinds, holds: Callable[[Graph], bool]) -> ProblemContract:
    """Contract for a graph modification problem with property ``holds``."""
    kinds = frozenset(kinds)

    def is_solution(x: GraphInstance, s) -> bool:
        if len(s) > x.k or any(t.kind not in kinds for t in s):
            return False
        try:
            return holds(apply_ops(x.graph, s))
        except (InconsistentSet, InapplicableOperation):
            return False

    def restrict(x: GraphInstance, ops, budget):
        yield GraphInstance(apply_ops(x.graph, ops), budget)

    return ProblemContract(
        name=name,
        parameter=lambda x: x.k,
        operations=lambda x: universe(x.graph, kinds),
        is_consistent=is_consistent,
        is_solution=is_solution,
        encode_op=GraphOp.encode,
        restrict=restrict,
    )


def forbidden_problem(name: str, forbidden: ForbiddenSet,
                      holds: Optional[Callable[[Graph], bool]] = None) -> Problem:
    """Problem bundle for a property given by a finite forbidden set.

    All-enumeration goes through the generic neighbourhood built on
    :func:`min_bst`, so a new problem needs only its patterns and kinds.
    """
    if holds is None:
        holds = lambda h: find_forbidden(h, forbidden) is None  # noqa: E731
    contract = graph_contract(name, forbidden.kinds, holds)

    def min_enum(x: GraphInstance):
        return min_bst(x.graph, x.k, forbidden)

    return Problem(contract, min_enum, generic_neighbourhood(min_enum, contract))
