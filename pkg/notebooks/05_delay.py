# %% [markdown]
# # How the delay grows with the graph
#
# For fixed k the gap between consecutive outputs should grow polynomially
# in the graph size. We plant cliques, flip one pair and time the first 300
# solutions.

# %%
import math
import random
import statistics
from itertools import combinations

from enumfpt.cluster import PROBLEM
from enumfpt.graphs import Graph, GraphInstance
from enumfpt.timing import measure


def planted(n, rng):
    vs = list(range(1, n + 1))
    rng.shuffle(vs)
    edges, i = set(), 0
    while i < n:
        size = rng.randint(1, 4)
        edges |= {tuple(sorted(p)) for p in combinations(vs[i:i + size], 2)}
        i += size
    edges ^= {tuple(sorted(rng.sample(vs, 2)))}
    return Graph.from_edges(edges, vs)


# %%
rng = random.Random(1)
sizes = [50, 100, 200]
delays = []
for n in sizes:
    items, rep = measure(PROBLEM.enumerate_all(GraphInstance(planted(n, rng), 2)), limit=300)
    delays.append(rep.max_delay)
    print(n, len(items), f"{rep.max_delay:.4f}s")

# %%
fit = statistics.linear_regression([math.log(n) for n in sizes], [math.log(d) for d in delays])
print(f"log-log slope {fit.slope:.2f}")
