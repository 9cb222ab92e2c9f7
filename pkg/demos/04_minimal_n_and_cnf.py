# %% [markdown]
# # Minimal universe sizes and the CNF encoding

# %%
import time

from hjext import Alphabet, ap_family, build_hypergraph, export_cnf, minimal_N, plain_family
from hjext.search import parse_dimacs

print("one letter, one colour, F two-term progressions:", minimal_N(Alphabet(1), 1, ap_family(1, 2), 5))
print("classical lines, two letters, two colours:", minimal_N(Alphabet(2), 2, plain_family(), 5))

# %% [markdown]
# Two letters, two colours and F a two-term progression stay avoidable up to
# N=6. The search decides N=7 in about twenty seconds; run with a larger
# bound to see it.

# %%
t = time.perf_counter()
print(minimal_N(Alphabet(2), 2, ap_family(1, 2), 6), f"({time.perf_counter() - t:.1f}s)")

# %% [markdown]
# The same question as DIMACS: one variable per (word, colour).

# %%
text = export_cnf(build_hypergraph(1, Alphabet(2), plain_family(1)), 2)
print(text)
nv, clauses = parse_dimacs(text)
print(nv, "variables,", len(clauses), "clauses")
