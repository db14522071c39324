"""Chordal completion (minimum fill-in) with at most k added edges."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Optional

from .core import Problem, SearchStats, generic_neighbourhood, minimal_family
from .graphs import Graph, GraphInstance, OpKind, add_edge, graph_contract


def max_cardinality_search(g: Graph) -> list:
    """Visit order of maximum cardinality search; ties go to the smallest id."""
    weight = {v: 0 for v in g.vertices}
    order = []
    while weight:
        v = min(weight, key=lambda w: (-weight[w], w))
        del weight[v]
        order.append(v)
        for w in g.neighbours(v):
            if w in weight:
                weight[w] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Perfect elimination check on the reverse of a maximum cardinality search."""
    order = max_cardinality_search(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbours(v) if pos[w] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        pn = g.neighbours(parent)
        if any(w != parent and w not in pn for w in earlier):
            return False
    return True


def _shortest_path(g: Graph, a: int, b: int, blocked: set) -> Optional[list]:
    prev = {a: None}
    dq = deque([a])
    while dq:
        u = dq.popleft()
        if u == b:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in sorted(g.neighbours(u)):
            if w not in prev and w not in blocked:
                prev[w] = u
                dq.append(w)
    return None


def find_chordless_cycle(g: Graph) -> Optional[tuple]:
    """A chordless cycle of length at least 4, or None if ``g`` is chordal.

    For each vertex v and non-adjacent neighbours a < b, a shortest a-b path
    avoiding the rest of v's closed neighbourhood closes an induced cycle.
    """
    for v in sorted(g.vertices):
        nv = g.neighbours(v)
        for a, b in combinations(sorted(nv), 2):
            if g.has_edge(a, b):
                continue
            blocked = (set(nv) | {v}) - {a, b}
            path = _shortest_path(g, a, b, blocked)
            if path is not None:
                return (v, *path)
    return None


def chords(cycle: tuple) -> list:
    """All |C|(|C|-3)/2 vertex pairs of a cycle that are not cycle edges."""
    n = len(cycle)
    out = []
    for i, j in combinations(range(n), 2):
        if j - i not in (1, n - 1):
            out.append(tuple(sorted((cycle[i], cycle[j]))))
    return sorted(out)


def min_k_triangulations(g: Graph, k: int, stats: Optional[SearchStats] = None) -> set:
    """Inclusion-minimal sets of at most ``k`` added edges making ``g`` chordal.

    Branches on the chords of a chordless cycle; a cycle of length l needs at
    least l - 3 chords, which prunes branches that cannot fit the budget.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = SearchStats() if stats is None else stats
    found: set = set()
    visited: set = set()

    def rec(s: frozenset, h: Graph):
        stats.nodes += 1
        cyc = find_chordless_cycle(h)
        if cyc is None:
            found.add(s)
            stats.leaves += 1
            return
        if len(cyc) - 3 > k - len(s):
            stats.leaves += 1
            return
        for u, v in chords(cyc):
            t = add_edge(u, v)
            child = s | {t}
            if child in visited:
                continue
            visited.add(child)
            rec(child, Graph(h.vertices, h.edges | {(u, v)}))

    rec(frozenset(), g)
    return minimal_family(found)


CONTRACT = graph_contract("chordal-completion", {OpKind.ADD_EDGE}, is_chordal)


def _min_enum(x: GraphInstance):
    return min_k_triangulations(x.graph, x.k)


def cc_neighbourhood(x: GraphInstance, inp) -> set:
    """Seed: all minimal k-triangulations. Solution S: for each non-edge uv of
    G+S, S + uv united with each minimal (k-|S|-1)-triangulation of G+S+uv."""
    return _nbf(x, inp)


_nbf = generic_neighbourhood(_min_enum, CONTRACT)

PROBLEM = Problem(CONTRACT, _min_enum, cc_neighbourhood)
