# %% [markdown]
# # Bounded checks of the structural laws
#
# Passing means "not refuted at this scale", nothing more.

# %%
from hjext.configurations import ap_family
from hjext.laws import WindowSet, check_invariance, pws_window_check, random_word, sample_law_violations
from hjext.laws import variable_line_family
from hjext.words import Alphabet
import random

print(sample_law_violations(5000, seed=1))

# %% [markdown]
# Extended lines written with the variable are closed under combining with
# disjoint words.

# %%
rng = random.Random(0)
family = variable_line_family(4, Alphabet(2), ap_family(1, 4))
sample = [random_word(rng, 4, Alphabet(2, True), 0.3) for _ in range(50)]
print("invariant on sample:", bool(check_invariance(family, sample)))

# %% [markdown]
# Translates of the even numbers cover long intervals.

# %%
evens = WindowSet(20, frozenset(range(2, 21, 2)))
print(pws_window_check(evens, 2, 10), pws_window_check(evens, 1, 2))
