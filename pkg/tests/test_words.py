import random

import pytest
from hypothesis import given, strategies as st

from threefree.presentation import fixture
from threefree.words import (
    WordError,
    concat,
    essentially_different,
    first,
    format_word,
    free_reduce,
    invert,
    is_freely_reduced,
    last,
    parse_word,
    pref,
    suf,
)

P1 = fixture("p1")
a, b, c, d = 1, 2, 3, 4

letters = st.integers(-4, 4).filter(bool)
words = st.lists(letters, max_size=12).map(tuple)


def test_parse():
    assert parse_word(P1, "a c b a b^2 c d a") == (a, c, b, a, b, b, c, d, a)
    assert parse_word(P1, "a^-1") == (-a,)
    assert parse_word(P1, "a^-2 d^3") == (-a, -a, d, d, d)
    assert parse_word(P1, "") == ()
    assert parse_word(P1, "  a   b ") == (a, b)


@pytest.mark.parametrize("text", ["a^0", "q", "a^", "a^x", "^2", "a-1"])
def test_parse_errors(text):
    with pytest.raises(WordError):
        parse_word(P1, text)


def test_format():
    assert format_word(P1, (a, c, b, a, b, b, c, d, a)) == "a c b a b^2 c d a"
    assert format_word(P1, (d,) * 5 + (-c,)) == "d^5 c^-1"
    assert format_word(P1, ()) == ""


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(P1, format_word(P1, w)) == w


def test_free_reduce_examples():
    assert free_reduce((a, b, -b, a)) == (a, a)
    assert free_reduce((a, -a)) == ()
    w = parse_word(P1, "a c b a b^2 c d a")
    assert free_reduce(w) == w


def test_accessors():
    assert invert((a, -b)) == (b, -a)
    w = (a, c, b)
    assert first(w) == a and last(w) == b
    assert pref((a, b)) == (a,) and suf((a, b)) == (b,)
    assert concat((a,), (), (b, c)) == (a, b, c)
    for fn in (first, last, pref, suf):
        with pytest.raises(WordError):
            fn(())


def test_essentially_different():
    assert not essentially_different(a, -a)
    assert essentially_different(a, b)
    assert not essentially_different(-b, b)


def _random_cancel_order(w, rng):
    w = list(w)
    while True:
        spots = [i for i in range(len(w) - 1) if w[i] == -w[i + 1]]
        if not spots:
            return tuple(w)
        i = rng.choice(spots)
        del w[i:i + 2]


@given(words, st.integers(0, 2**32))
def test_free_reduce_confluent(w, seed):
    assert _random_cancel_order(w, random.Random(seed)) == free_reduce(w)


@given(words)
def test_free_reduce_properties(w):
    r = free_reduce(w)
    assert is_freely_reduced(r)
    assert free_reduce(r) == r
    assert (len(w) - len(r)) % 2 == 0
    assert invert(invert(w)) == w
    assert free_reduce(concat(w, invert(w))) == ()
