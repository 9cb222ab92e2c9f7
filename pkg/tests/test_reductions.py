import random
from math import prod

import pytest

from hjext.reductions import (
    ADDITIVE,
    MULTIPLICATIVE,
    DerivedTriple,
    MissingBaseColor,
    ModRule,
    Reduction,
    UnsupportedKind,
    VariableInConstantReduction,
    additive_params,
    affine,
    base_coloring_from_json,
    derived_params,
    identity_check,
    pullback_coloring,
    reduce,
)
from hjext.words import EMPTY, VAR, Alphabet, LocatedWord, combine, enumerate_universe

W = LocatedWord


def test_reduce_examples():
    assert reduce(ADDITIVE, EMPTY) == 1
    assert reduce(MULTIPLICATIVE, W({2: 3})) == 8
    assert reduce(affine(1, 2), W({1: 1, 2: 1})) == 15
    assert reduce(ADDITIVE, W({1: 2, 4: 1})) == 4
    with pytest.raises(VariableInConstantReduction):
        reduce(MULTIPLICATIVE, W({1: VAR}))


def test_reduction_validation_and_json():
    with pytest.raises(ValueError):
        Reduction("affine", 0, 1)
    with pytest.raises(ValueError):
        Reduction("cubic")
    for kind in (ADDITIVE, MULTIPLICATIVE, affine(2, 3)):
        assert Reduction.from_json(kind.to_json()) == kind


def test_derived_params_examples():
    assert derived_params(MULTIPLICATIVE, W({5: 1}), {3}, 1, 1) == DerivedTriple(5, 3, 3)
    assert derived_params(affine(1, 1), W({1: 1}), {2}, 3, 1) == DerivedTriple(2, 12, 3)
    assert derived_params(MULTIPLICATIVE, EMPTY, set(), 1, 1) == DerivedTriple(1, 1, 1)
    with pytest.raises(UnsupportedKind):
        derived_params(ADDITIVE, EMPTY, {1}, 1, 1)
    assert additive_params(W({1: 2}), {2, 4}) == (3, 2)


def test_identity_check_examples():
    assert identity_check(MULTIPLICATIVE, W({5: 1}), {3}, a=1, d=1, i=1, j=1)
    assert reduce(MULTIPLICATIVE, W({5: 1, 3: 1, 2: 1})) == 30
    assert identity_check(ADDITIVE, W({1: 2}), {2, 4}, i=1)


def _random_word(rng, positions, sigma):
    return W({p: rng.randrange(sigma) for p in positions if rng.random() < 0.6})


@pytest.mark.parametrize("kind", [ADDITIVE, MULTIPLICATIVE, affine(1, 1), affine(3, 7)])
def test_homomorphism_law(kind):
    rng = random.Random(11)
    for _ in range(1000):
        pos = list(range(1, 13))
        rng.shuffle(pos)
        u = _random_word(rng, pos[:6], 4)
        w = _random_word(rng, pos[6:], 4)
        lhs = reduce(kind, combine(u, w))
        if kind.kind == "additive":
            assert lhs == reduce(kind, u) + reduce(kind, w) - 1
        else:
            assert lhs == reduce(kind, u) * reduce(kind, w)


def test_reduce_closed_forms():
    rng = random.Random(3)
    for _ in range(200):
        w = _random_word(rng, range(1, 9), 5)
        e = dict(w.entries)
        assert reduce(ADDITIVE, w) == 1 + sum(e.values())
        assert reduce(MULTIPLICATIVE, w) == prod(t**s for t, s in e.items())
        assert reduce(affine(2, 5), w) == prod((2 + 5 * t) ** s for t, s in e.items())


def test_pullback_examples():
    parity = {1: 1, 2: 2}
    colors = pullback_coloring(ADDITIVE, parity, 1, Alphabet(2))
    assert colors == [1, 1, 2]  # {}, {1:0}, {1:1}
    const = pullback_coloring(MULTIPLICATIVE, ModRule(1, (3,)), 3, Alphabet(3))
    assert set(const) == {3}
    odd_only = {n: 1 for n in range(1, 100, 2)}
    with pytest.raises(MissingBaseColor):
        pullback_coloring(MULTIPLICATIVE, odd_only, 2, Alphabet(2))


def test_pullback_follows_reduce():
    rule = ModRule(5, (1, 2, 2, 1, 2))
    kind = affine(2, 1)
    universe = list(enumerate_universe(3, Alphabet(3)))
    colors = pullback_coloring(kind, rule, 3, Alphabet(3))
    assert colors == [rule.colors[reduce(kind, w) % 5] for w in universe]


def test_base_coloring_json():
    assert base_coloring_from_json({"mod": 2, "colors": [1, 2]}) == ModRule(2, (1, 2))
    assert base_coloring_from_json({"map": {"12": 1, "3": 2}}) == {12: 1, 3: 2}
    with pytest.raises(ValueError):
        base_coloring_from_json({})
    with pytest.raises(ValueError):
        ModRule(3, (1, 2))
