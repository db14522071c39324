# %% [markdown]
# # Backdoors into Horn and 2CNF, and MinOnes
#
# A strong backdoor puts the formula into the base class under every
# assignment of its variables. A weak one only needs a single assignment
# that lands in the class and is satisfiable.

# %%
from enumfpt import backdoors as bd
from enumfpt.cnf import HORN, TWO_CNF
from enumfpt.io import loads_cnf

phi = loads_cnf("""
p cnf 4 3
1 2 3 0
-1 4 0
2 4 0
""")

# %%
for cls in (HORN, TWO_CNF):
    for mode, problem in ((bd.STRONG, bd.STRONG_PROBLEM), (bd.WEAK, bd.WEAK_PROBLEM)):
        x = bd.BackdoorInstance(phi, 2, cls, mode)
        print(cls.name, mode, [sorted(s) for s in problem.enumerate_min(x)])

# %% [markdown]
# MinOnes lists the models with few true variables. The solution is the set
# of variables set to true.

# %%
from enumfpt.minones import PROBLEM, MinOnesInstance

for s in PROBLEM.enumerate_all(MinOnesInstance(phi, 2)):
    print(sorted(s))
