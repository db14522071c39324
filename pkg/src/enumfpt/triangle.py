"""Triangle deletion: remove at most k vertices to make a graph triangle-free.

Nothing here is problem-specific beyond the pattern and the allowed
operation kind; all-enumeration comes from the generic neighbourhood.
"""

from __future__ import annotations

from typing import Optional

from .core import SearchStats
from .graphs import ForbiddenSet, Graph, OpKind, complete_graph, forbidden_problem, min_bst

TRIANGLE_FORBIDDEN = ForbiddenSet((complete_graph(3),), {OpKind.DELETE_VERTEX})


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges:
        if g.neighbours(u) & g.neighbours(v):
            return False
    return True


def min_triangle_deletion(g: Graph, k: int, stats: Optional[SearchStats] = None) -> set:
    return min_bst(g, k, TRIANGLE_FORBIDDEN, stats)


PROBLEM = forbidden_problem("triangle-deletion", TRIANGLE_FORBIDDEN, is_triangle_free)
CONTRACT = PROBLEM.contract
