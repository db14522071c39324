import random
from itertools import combinations, permutations

import pytest

from enumfpt.core import SearchStats
from enumfpt.errors import InapplicableOperation, InconsistentSet
from enumfpt.graphs import (
    EDGE_KINDS,
    ForbiddenSet,
    Graph,
    OpKind,
    add_edge,
    apply_ops,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    find_forbidden,
    is_consistent,
    min_bst,
    path_graph,
    universe,
)

from conftest import edit_sets, p3_free, random_graph

P3 = path_graph(3)
K3 = complete_graph(3)
CLUSTER_F = ForbiddenSet((P3,), EDGE_KINDS)
TRIANGLE_F = ForbiddenSet((K3,), {OpKind.DELETE_VERTEX})


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(frozenset({1, 2}), frozenset({(1, 3)}))
    with pytest.raises(ValueError):
        Graph(frozenset({1}), frozenset({(1, 1)}))


def test_edges_are_normalised():
    g = Graph.from_edges([(2, 1), (1, 2)])
    assert g.edges == frozenset({(1, 2)})


def test_apply_empty_is_identity():
    g = cycle_graph(5)
    assert apply_ops(g, frozenset()) == g


def test_apply_add_edge_closes_p3():
    assert apply_ops(P3, {add_edge(1, 3)}) == K3


def test_apply_delete_vertex_keeps_ids():
    assert apply_ops(K3, {delete_vertex(1)}) == Graph.from_edges([(2, 3)])


def test_apply_errors():
    with pytest.raises(InconsistentSet, match="inconsistent-set"):
        apply_ops(P3, {add_edge(1, 3), delete_edge(1, 3)})
    with pytest.raises(InapplicableOperation):
        apply_ops(P3, {add_edge(1, 2)})
    with pytest.raises(InapplicableOperation):
        apply_ops(P3, {delete_edge(1, 3)})
    with pytest.raises(InapplicableOperation):
        apply_ops(P3, {delete_vertex(9)})


@pytest.mark.parametrize("ops, expected", [
    ({add_edge(1, 2), delete_edge(1, 2)}, False),
    ({delete_vertex(1), delete_edge(1, 2)}, False),
    ({delete_vertex(1), add_edge(2, 3)}, True),
    (set(), True),
])
def test_is_consistent(ops, expected):
    assert is_consistent(ops) is expected


def test_apply_is_order_independent(rng):
    for _ in range(50):
        g = random_graph(rng, 7, 2)
        ops = rng.sample(universe(g, set(OpKind)), 3)
        if not is_consistent(ops):
            continue
        ref = apply_ops(g, ops)
        for perm in permutations(ops):
            assert apply_ops(g, list(perm)) == ref


def test_find_forbidden_examples():
    assert find_forbidden(K3, CLUSTER_F) is None
    assert set(find_forbidden(P3, CLUSTER_F)) == {1, 2, 3}
    occ = find_forbidden(complete_graph(4), ForbiddenSet((K3,), EDGE_KINDS))
    assert len(set(occ)) == 3


def _induced_copy_exists(g, pattern):
    pv = sorted(pattern.vertices)
    for sub in combinations(sorted(g.vertices), len(pv)):
        for perm in permutations(sub):
            m = dict(zip(pv, perm))
            if all(pattern.has_edge(a, b) == g.has_edge(m[a], m[b])
                   for a, b in combinations(pv, 2)):
                return True
    return False


@pytest.mark.parametrize("pattern", [P3, K3, cycle_graph(4), path_graph(4),
                                     Graph.from_edges([(1, 2), (1, 3), (1, 4)])])
def test_find_forbidden_matches_brute_force(pattern):
    rng = random.Random(7)
    f = ForbiddenSet((pattern,), EDGE_KINDS)
    for _ in range(60):
        g = random_graph(rng, 7)
        occ = find_forbidden(g, f)
        assert (occ is None) == (not _induced_copy_exists(g, pattern))
        if occ is not None:
            assert _induced_copy_exists(g.induced(occ), pattern)


def test_min_bst_already_satisfied():
    assert min_bst(K3, 2, CLUSTER_F) == {frozenset()}


def test_min_bst_p3_edge_ops():
    # brute force: every single edge edit of P3 that leaves it P3-free
    singles = [(adds, dels) for adds, dels, es in edit_sets(P3.vertices, P3.edges, 1)
               if p3_free(P3.vertices, es)]
    assert len(singles) == 3
    assert min_bst(P3, 1, CLUSTER_F) == {
        frozenset({delete_edge(1, 2)}), frozenset({delete_edge(2, 3)}), frozenset({add_edge(1, 3)})}


def test_min_bst_vertex_deletion_k3():
    assert min_bst(K3, 1, TRIANGLE_F) == {frozenset({delete_vertex(v)}) for v in (1, 2, 3)}


def test_min_bst_negative_k():
    with pytest.raises(ValueError):
        min_bst(K3, -1, CLUSTER_F)


def test_min_bst_node_bound_and_minimality(rng):
    c = 3
    for _ in range(150):
        g = random_graph(rng, 8)
        k = rng.randint(0, 4)
        stats = SearchStats()
        res = min_bst(g, k, CLUSTER_F, stats)
        assert stats.nodes <= (c + c * (c - 1)) ** k
        # brute-force minimal family over edge-edit sets
        sols = []
        for adds, dels, es in edit_sets(g.vertices, g.edges, k):
            if p3_free(g.vertices, es):
                sols.append(frozenset({add_edge(*p) for p in adds} | {delete_edge(*p) for p in dels}))
        minimal = {s for s in sols if not any(t < s for t in sols)}
        assert res == minimal
        assert all(is_consistent(s) and len(s) <= k for s in res)
