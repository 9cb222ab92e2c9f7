# %% [markdown]
# # Located words and lines
#
# A located word is a finite map from positions to letters. Two words
# combine only when their domains are disjoint.

# %%
from hjext import VAR, Alphabet, LocatedWord, combine, decompose_variable_word, substitute
from hjext.configurations import ExtendedLine, ap_family, enumerate_extended_lines
from hjext.words import UndefinedProduct, enumerate_universe, rank

u = LocatedWord({1: 0})
w = LocatedWord({3: 1})
print("u * w =", combine(u, w))
try:
    combine(u, LocatedWord({1: 1}))
except UndefinedProduct as exc:
    print("overlap:", exc)

# %% [markdown]
# Words containing the variable `v` collapse to ordinary words under substitution.

# %%
beta = LocatedWord({2: VAR, 5: 0, 7: VAR})
print("beta =", beta)
print("theta_1(beta) =", substitute(1, beta))
alpha, gamma = decompose_variable_word(beta)
print("alpha =", alpha, "gamma =", sorted(gamma))

# %% [markdown]
# The universe of words inside `[1..N]` has a canonical order and a rank bijection.

# %%
universe = list(enumerate_universe(2, Alphabet(2)))
print([str(x) for x in universe])
print("rank of {1:1,2:0} =", rank(LocatedWord({1: 1, 2: 0}), 2, Alphabet(2)))

# %% [markdown]
# An extended line fixes a constant part, a moving set, and a set F whose
# positions take turns joining the moving set.

# %%
line = ExtendedLine(LocatedWord(), (1,), (2, 3), Alphabet(2))
print(sorted(str(p) for p in line.points()))
lines = list(enumerate_extended_lines(4, Alphabet(2), ap_family(1, 4)))
print(len(lines), "lines with F a two-term progression inside [1..4]")
