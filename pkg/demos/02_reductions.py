# %% [markdown]
# # From words to integers
#
# Three homomorphisms send constant words to positive integers. A line of
# words lands on an integer configuration whose parameters are explicit.

# %%
from hjext import ADDITIVE, MULTIPLICATIVE, LocatedWord, affine, derived_params, identity_check, reduce
from hjext.reductions import ModRule, pullback_coloring
from hjext.words import Alphabet

w = LocatedWord({1: 1, 2: 1})
for kind in (ADDITIVE, MULTIPLICATIVE, affine(1, 2)):
    print(kind.kind, reduce(kind, w))

# %% [markdown]
# The multiplicative image of `alpha ∪ (gamma ∪ {a+id}) × {j}` is
# `b (a' + i d')^j`.

# %%
alpha, gamma = LocatedWord({5: 1}), {3}
triple = derived_params(MULTIPLICATIVE, alpha, gamma, a=1, d=1)
print(triple)
print("identity holds:", identity_check(MULTIPLICATIVE, alpha, gamma, a=1, d=1, i=1, j=1))
print("affine triple:", derived_params(affine(1, 1), LocatedWord({1: 1}), {2}, a=3, d=1))

# %% [markdown]
# A colouring of the integers pulls back to a colouring of words.

# %%
colors = pullback_coloring(ADDITIVE, ModRule(2, (1, 2)), 2, Alphabet(2))
print(colors)
