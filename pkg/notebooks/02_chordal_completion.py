# %% [markdown]
# # Fill-in for chordal completion
#
# Adding edges until no chordless cycle of length four or more is left.

# %%
from enumfpt.chordal import PROBLEM, find_chordless_cycle, is_chordal
from enumfpt.graphs import GraphInstance, apply_ops, cycle_graph

g = cycle_graph(5)
print(is_chordal(g), find_chordless_cycle(g))

# %% [markdown]
# A five-cycle needs two chords. There are five ways to pick them, one per
# apex vertex.

# %%
x = GraphInstance(g, 2)
for s in PROBLEM.enumerate_min(x):
    print(sorted(map(str, s)), is_chordal(apply_ops(g, s)))

# %% [markdown]
# With a budget of three, the supersets show up after the minimum ones.

# %%
sizes = [len(s) for s in PROBLEM.enumerate_all(GraphInstance(g, 3))]
print(sizes)
