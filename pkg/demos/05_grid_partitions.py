# %% [markdown]
# # Partitions of power grids
#
# `power_grid(A, D, K)` collects `(A + iD)^j` for `i, j` in `0..K`. We look
# for 2-partitions with no cell containing a set `{b (a + i d)^j}`.

# %%
from hjext import GridPattern, grid_counterexample_search, power_grid, verify_partition
from hjext.certificates import verify

print(sorted(power_grid(1, 1, 2)))
cert = grid_counterexample_search(2, range(1, 4), range(1, 4))
print("A, D =", cert["A"], cert["D"])
print("cells:", cert["partition"])
print(verify(cert)[1])

# %% [markdown]
# Putting a whole pattern into one cell is caught by the verifier.

# %%
pattern = GridPattern((0, 1, 2), (0, 1), (1, 1), (1, 1), (1, 1))
print(verify_partition([{1, 2, 3}, set()], pattern), verify_partition([{1, 2}, {3}], pattern))
