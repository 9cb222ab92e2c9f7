# %% [markdown]
# # Monochromatic lines and colourings that avoid them

# %%
from hjext import Alphabet, Coloring, ap_family, avoidance_search, build_hypergraph, find_witness
from hjext.certificates import dumps, verify
from hjext.reductions import ModRule, affine, pullback_coloring

S2 = Alphabet(2)
cert = find_witness(Coloring.constant(4, S2, 1), ap_family(1, 4))
print("constant colouring:", cert["witness"])

# %% [markdown]
# Pull back a residue colouring along the affine map and look for a line.

# %%
colors = pullback_coloring(affine(2, 1), ModRule(3, (1, 2, 2)), 4, S2)
cert = find_witness(Coloring(4, S2, 2, colors), ap_family(1, 4))
print(cert["witness"] if cert else "no monochromatic line")

# %% [markdown]
# At N=5 there is still a 2-colouring with no monochromatic line.
# The search returns the lexicographically least one; the verifier re-checks it.

# %%
hg = build_hypergraph(5, S2, ap_family(1, 5))
print(len(hg.edges), "lines on", hg.vertex_count, "words")
result = avoidance_search(hg, 2)
print(result.kind, result["coloring"][:20], "...")
avoiding = Coloring(5, S2, 2, result["coloring"])
print("witness under it:", find_witness(avoiding, ap_family(1, 5)))
print(verify(dumps(cert))[1])
