# %% [markdown]
# # Cluster editing, smallest first
#
# A graph is a cluster graph when every component is a clique. Here we list
# every way of reaching one with at most k edge edits, ordered by the number
# of edits.

# %%
from enumfpt.cluster import GENERIC_PROBLEM, PROBLEM, min_cluster_edit
from enumfpt.core import SearchStats
from enumfpt.graphs import GraphInstance, path_graph

x = GraphInstance(path_graph(4), 2)

# %% [markdown]
# The bounded search tree gives the inclusion-minimal edit sets. For a path
# on four vertices, removing the middle edge is the only single edit.

# %%
stats = SearchStats()
for s in sorted(min_cluster_edit(x, stats), key=len):
    print(len(s), sorted(map(str, s)))
print(stats)

# %% [markdown]
# Every solution, not just the minimal ones. The stream starts with the
# cheapest and never goes back to a smaller size.

# %%
for s in PROBLEM.enumerate_all(x):
    print(len(s), sorted(map(str, s)))

# %% [markdown]
# The merge/split neighbourhood and the generic construction reach the same
# stream.

# %%
print(list(PROBLEM.enumerate_all(x)) == list(GENERIC_PROBLEM.enumerate_all(x)))
