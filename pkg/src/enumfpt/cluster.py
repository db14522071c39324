"""Cluster editing: turn a graph into a disjoint union of cliques by edge edits."""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .core import SEED, Problem, SearchStats, generic_neighbourhood
from .graphs import (
    EDGE_KINDS,
    ForbiddenSet,
    Graph,
    GraphInstance,
    OpKind,
    add_edge,
    apply_ops,
    delete_edge,
    graph_contract,
    min_bst,
    path_graph,
)

P3 = path_graph(3)
CLUSTER_FORBIDDEN = ForbiddenSet((P3,), EDGE_KINDS)

ClusterInstance = GraphInstance


def is_cluster(g: Graph) -> bool:
    """True iff every connected component is a clique."""
    for comp in g.components():
        n = len(comp)
        m = sum(g.degree(v) for v in comp) // 2
        if m != n * (n - 1) // 2:
            return False
    return True


CONTRACT = graph_contract("cluster-editing", EDGE_KINDS, is_cluster)


def min_cluster_edit(x: ClusterInstance, stats: Optional[SearchStats] = None) -> set:
    return min_bst(x.graph, x.k, CLUSTER_FORBIDDEN, stats)


def _bipartitions(clique: tuple):
    """Unordered proper bipartitions; the first vertex always sits in the first part."""
    first, rest = clique[0], clique[1:]
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            a = (first,) + extra
            b = tuple(v for v in rest if v not in extra)
            yield a, b


def ce_neighbourhood(x: ClusterInstance, inp) -> set:
    """Neighbours of a solution: merge two cliques or split one clique of ``S(G)``.

    Only moves that fit the remaining budget are generated; a merge of cliques
    of sizes i and j costs i*j additions and a split into parts a, b costs
    a*b deletions. Moves that undo an edit already in ``S`` are dropped.
    """
    if inp is SEED:
        return min_cluster_edit(x)
    s = frozenset(inp)
    room = x.k - len(s)
    if room <= 0:
        return set()
    added = {(t.u, t.v) for t in s if t.kind is OpKind.ADD_EDGE}
    deleted = {(t.u, t.v) for t in s if t.kind is OpKind.DELETE_EDGE}
    cliques = sorted(apply_ops(x.graph, s).components(), key=len)
    out = set()

    for i, ci in enumerate(cliques):
        if len(ci) > room:
            break
        for cj in cliques[i + 1:]:
            if len(ci) * len(cj) > room:
                break
            pairs = [(min(u, v), max(u, v)) for u in ci for v in cj]
            if any(p in deleted for p in pairs):
                continue
            out.add(s | {add_edge(u, v) for u, v in pairs})

    for c in cliques:
        if len(c) > room + 1:
            break
        if len(c) < 2:
            continue
        for a, b in _bipartitions(c):
            if len(a) * len(b) > room:
                continue
            pairs = [(min(u, v), max(u, v)) for u in a for v in b]
            if any(p in added for p in pairs):
                continue
            out.add(s | {delete_edge(u, v) for u, v in pairs})
    return out


def _min_enum(x):
    return min_cluster_edit(x)


PROBLEM = Problem(CONTRACT, _min_enum, ce_neighbourhood)

# same problem, all-enumeration through the generic construction over min_cluster_edit
GENERIC_PROBLEM = Problem(CONTRACT, _min_enum, generic_neighbourhood(_min_enum, CONTRACT))
