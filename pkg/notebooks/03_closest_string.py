# %% [markdown]
# # Closest string by flipping bits
#
# Start from the first string and flip positions (1-based) until every input
# string is within Hamming distance d.

# %%
from enumfpt.closest_string import PROBLEM, StringInstance, apply_flips, hamming

x = StringInstance(("0000", "0110", "1100"), 2)

# %%
for s in PROBLEM.enumerate_all(x):
    c = apply_flips(x.center, s)
    print(sorted(s), c, [hamming(c, t) for t in x.strings])

# %% [markdown]
# The brute-force oracle agrees on the order as well as the set.

# %%
from enumfpt.oracle import brute_force

print(list(PROBLEM.enumerate_all(x)) == brute_force(PROBLEM.contract, x).all)
