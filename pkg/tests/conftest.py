import random
from itertools import combinations

import pytest

from enumfpt import backdoors as bd
from enumfpt.closest_string import StringInstance
from enumfpt.cnf import HORN, TWO_CNF, CnfFormula
from enumfpt.graphs import Graph, GraphInstance
from enumfpt.minones import MinOnesInstance


# --- independent predicates (no package code paths) ---------------------------

def p3_free(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for a, b, c in combinations(sorted(vertices), 3):
        n = (b in adj[a]) + (c in adj[a]) + (c in adj[b])
        if n == 2:
            return False
    return True


def triangle_free(vertices, edges):
    es = {frozenset(e) for e in edges}
    return not any(all(frozenset(p) in es for p in combinations(t, 2))
                   for t in combinations(sorted(vertices), 3))


def has_induced_long_cycle(vertices, edges):
    """Scan every vertex subset of size >= 4 for an induced cycle."""
    es = {frozenset(e) for e in edges}
    vs = sorted(vertices)
    for r in range(4, len(vs) + 1):
        for sub in combinations(vs, r):
            deg = {v: sum(1 for w in sub if frozenset((v, w)) in es) for v in sub}
            if any(d != 2 for d in deg.values()):
                continue
            # 2-regular; cycle iff connected
            seen, stack = {sub[0]}, [sub[0]]
            while stack:
                u = stack.pop()
                for w in sub:
                    if w not in seen and frozenset((u, w)) in es:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == r:
                return True
    return False


def edit_sets(vertices, edges, k, allow_add=True, allow_del=True):
    """Brute force over edge-edit sets: yields (adds, dels, resulting edges)."""
    es = {tuple(sorted(e)) for e in edges}
    pairs = list(combinations(sorted(vertices), 2))
    for r in range(k + 1):
        for combo in combinations(pairs, r):
            adds = {p for p in combo if p not in es}
            dels = {p for p in combo if p in es}
            if (adds and not allow_add) or (dels and not allow_del):
                continue
            yield adds, dels, (es | adds) - dels


# --- random instance generators ----------------------------------------------

def random_graph(rng, nmax=8, nmin=1):
    n = rng.randint(nmin, nmax)
    p = rng.random()
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(edges, range(1, n + 1))


def random_graph_instance(rng, nmax=8, kmax=4):
    return GraphInstance(random_graph(rng, nmax), rng.randint(0, kmax))


def random_cnf(rng, nvars=6, width=3, max_clauses=6):
    vs = list(range(1, rng.randint(1, nvars) + 1))
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        w = rng.randint(1, min(width, len(vs)))
        clauses.append([v if rng.random() < 0.5 else -v for v in rng.sample(vs, w)])
    return CnfFormula.from_clauses(clauses, vs)


def random_string_instance(rng, nmax=8, mmax=4, dmax=3):
    n = rng.randint(1, nmax)
    m = rng.randint(1, mmax)
    strings = tuple("".join(rng.choice("01") for _ in range(n)) for _ in range(m))
    return StringInstance(strings, rng.randint(0, dmax))


def random_backdoor_instance(rng, mode, kmax=3):
    return bd.BackdoorInstance(random_cnf(rng), rng.randint(0, kmax),
                               rng.choice([HORN, TWO_CNF]), mode)


def random_minones_instance(rng, kmax=4):
    return MinOnesInstance(random_cnf(rng), rng.randint(0, kmax))


@pytest.fixture
def rng():
    return random.Random(20240611)


def axiom_failures(nbf, contract, x, sols):
    """Names of the neighbourhood axioms that ``nbf`` violates on ``x``, given
    the ground-truth solution list ``sols``."""
    from enumfpt.core import SEED

    bad = []
    truth = set(sols)
    seed = {frozenset(s) for s in nbf(x, SEED)}
    if (not seed) != (not truth):
        bad.append("seed-empty")
    if not seed <= truth:
        bad.append("seed-not-solutions")
    reached, todo = set(seed), list(seed)
    while todo:
        s = todo.pop()
        for t in nbf(x, s):
            t = frozenset(t)
            if t not in truth or len(t) <= len(s):
                bad.append("neighbour")
                return bad
            if t not in reached:
                reached.add(t)
                todo.append(t)
    if reached != truth:
        bad.append("reachability")
    return bad
