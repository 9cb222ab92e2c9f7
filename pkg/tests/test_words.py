import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hjext.words import (
    EMPTY,
    VAR,
    Alphabet,
    LocatedWord,
    NotAVariableWord,
    OutOfRange,
    ResourceLimit,
    UndefinedProduct,
    combine,
    decompose_variable_word,
    enumerate_universe,
    place,
    rank,
    substitute,
    universe_size,
    unrank,
)

from oracles import all_words

W = LocatedWord


def words(max_pos=8, sigma=3, variable=True):
    syms = st.sampled_from(list(range(sigma)) + ([VAR] if variable else []))
    return st.dictionaries(st.integers(1, max_pos), syms, max_size=max_pos).map(LocatedWord)


def test_combine_examples():
    assert combine(W({1: 0}), W({3: 1})) == W({1: 0, 3: 1})
    assert combine(EMPTY, W({2: 1})) == W({2: 1})
    with pytest.raises(UndefinedProduct):
        combine(W({1: 0}), W({1: 1}))


def test_substitute_examples():
    assert substitute(1, W({2: VAR, 5: 0})) == W({2: 1, 5: 0})
    assert substitute(0, W({5: 0})) == W({5: 0})
    assert substitute(0, W({1: VAR, 2: VAR})) == W({1: 0, 2: 0})
    with pytest.raises(ValueError):
        substitute(VAR, W({1: VAR}))


def test_decompose_examples():
    assert decompose_variable_word(W({2: VAR, 5: 0, 7: VAR})) == (W({5: 0}), frozenset({2, 7}))
    assert decompose_variable_word(W({3: VAR})) == (EMPTY, frozenset({3}))
    with pytest.raises(NotAVariableWord):
        decompose_variable_word(W({5: 0}))


@given(words())
def test_decompose_recombines(w):
    if not w.has_variable:
        return
    alpha, gamma = decompose_variable_word(w)
    assert not alpha.dom & gamma
    assert not alpha.has_variable
    assert place(alpha, gamma, VAR) == w


def test_text_form():
    w = W({7: VAR, 2: VAR, 5: 0})
    assert str(w) == "{2:v,5:0,7:v}"
    assert str(EMPTY) == "{}"
    assert LocatedWord.parse("{2:v,5:0,7:v}") == w
    assert LocatedWord.parse("{}") == EMPTY
    with pytest.raises(ValueError):
        LocatedWord.parse("{1:0,1:1}")


def test_word_validation():
    with pytest.raises(ValueError):
        W({0: 1})
    with pytest.raises(ValueError):
        W([(1, 0), (1, 1)])
    with pytest.raises(ValueError):
        Alphabet(0)
    assert VAR not in Alphabet(3).symbols
    assert Alphabet(2, True).symbols == (0, 1, VAR)


def test_enumerate_small():
    assert list(enumerate_universe(1, Alphabet(2))) == [EMPTY, W({1: 0}), W({1: 1})]
    assert list(enumerate_universe(1, Alphabet(1))) == [EMPTY, W({1: 0})]
    assert len(list(enumerate_universe(2, Alphabet(2)))) == 9


@pytest.mark.parametrize("N,sigma", [(1, 1), (2, 2), (3, 2), (3, 3), (4, 1), (4, 2)])
def test_enumerate_matches_product_oracle(N, sigma):
    got = list(enumerate_universe(N, Alphabet(sigma)))
    assert len(got) == (sigma + 1) ** N
    assert set(got) == all_words(N, sigma)
    assert got == sorted(got, key=lambda w: w.sort_key)


def test_enumerate_with_variable_count():
    assert len(list(enumerate_universe(3, Alphabet(2, True)))) == 4**3
    assert universe_size(3, Alphabet(2, True)) == 64


def test_entry_order_interleaves_symbols():
    # {1:0,3:0} precedes {1:1,2:0}: entries compare position, then symbol
    order = list(enumerate_universe(3, Alphabet(2)))
    assert order.index(W({1: 0, 3: 0})) < order.index(W({1: 1, 2: 0}))


def test_variable_orders_last():
    order = list(enumerate_universe(1, Alphabet(2, True)))
    assert order == [EMPTY, W({1: 0}), W({1: 1}), W({1: VAR})]


def test_universe_cap():
    with pytest.raises(ResourceLimit):
        list(enumerate_universe(30, Alphabet(2)))
    assert len(list(enumerate_universe(5, Alphabet(1), cap=32))) == 32


@pytest.mark.parametrize("N,alphabet", [(1, Alphabet(2)), (3, Alphabet(2)), (4, Alphabet(1, True)), (3, Alphabet(3, True))])
def test_rank_unrank_bijection(N, alphabet):
    for i, w in enumerate(enumerate_universe(N, alphabet)):
        assert rank(w, N, alphabet) == i
        assert unrank(i, N, alphabet) == w


def test_rank_errors():
    assert rank(EMPTY, 1, Alphabet(2)) == 0
    assert unrank(0, 1, Alphabet(2)) == EMPTY
    with pytest.raises(OutOfRange):
        unrank(9, 2, Alphabet(2))
    with pytest.raises(OutOfRange):
        rank(W({3: 0}), 2, Alphabet(2))
    with pytest.raises(OutOfRange):
        rank(W({1: VAR}), 2, Alphabet(2))


@settings(max_examples=300)
@given(words(), words(), words())
def test_partial_associativity(a, b, c):
    def op(x, y):
        try:
            return combine(x, y)
        except UndefinedProduct:
            return None

    ab, bc = op(a, b), op(b, c)
    left = op(ab, c) if ab is not None else None
    right = op(a, bc) if bc is not None else None
    assert left == right
    assert op(a, b) == op(b, a)


@given(words(), words(), st.integers(0, 2))
def test_substitution_is_homomorphism(a, b, s):
    if a.dom & b.dom:
        return
    assert combine(substitute(s, a), substitute(s, b)) == substitute(s, combine(a, b))


def test_words_hashable_and_immutable():
    w = W({1: 0})
    assert {w, W({1: 0})} == {w}
    with pytest.raises(AttributeError):
        w.foo = 1
