"""Free-reduction and word-syntax properties."""

import pytest
from hypothesis import assume, given, strategies as st

from nearnormal.words import (
    Word, free_reduce, invert, conjugate_word, exponent_sum, exponent_vector,
    generator, word_key, parse_word, format_word,
)

letters = st.tuples(st.integers(min_value=0, max_value=5),
                    st.sampled_from((1, -1)))
raw_words = st.lists(letters, max_size=30)
words = raw_words.map(free_reduce)


def has_cancellation(w):
    return any(a[0] == b[0] and a[1] == -b[1]
               for a, b in zip(w.letters, w.letters[1:]))


@given(raw_words)
def test_reduction_is_idempotent_and_reduced(raw):
    w = free_reduce(raw)
    assert not has_cancellation(w)
    assert free_reduce(w.letters) == w


@given(words)
def test_inverse_cancels(w):
    assert w * invert(w) == Word(())
    assert invert(w) * w == Word(())
    assert invert(invert(w)) == w


@given(words, words, words)
def test_multiplication_is_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words, words)
def test_inverse_antihomomorphism(u, v):
    assert invert(u * v) == invert(v) * invert(u)


@given(words, words, words)
def test_conjugation_composes(w, g, h):
    assert conjugate_word(conjugate_word(w, g), h) == conjugate_word(w, g * h)


@given(words, words)
def test_exponent_sum_is_a_homomorphism(u, v):
    assert exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v)
    assert exponent_sum(invert(u)) == -exponent_sum(u)


@given(words)
def test_exponent_vector_totals_match(w):
    vec = exponent_vector(w, 6)
    assert sum(vec) == exponent_sum(w)


def test_exponent_vector_range_check():
    with pytest.raises(ValueError):
        exponent_vector(generator(3), 2)


@given(st.integers(min_value=0, max_value=9), st.integers(min_value=-5, max_value=5))
def test_generator_powers(i, e):
    w = generator(i, e)
    assert exponent_sum(w) == e
    assert len(w) == abs(e)


@given(words)
def test_parse_format_roundtrip(w):
    assume(w.letters)  # the empty word renders as "1", which is not an atom
    assert parse_word(format_word(w)) == w
    assert format_word(w) == format_word(parse_word(format_word(w)))


def test_parse_named_and_indexed():
    names = ("a", "b")
    assert parse_word("a b^-1", names) == generator(0) * generator(1, -1)
    assert parse_word("x1^2", names) == generator(1, 2)
    assert parse_word("") == Word(())
    assert format_word(Word(())) == "1"


def test_parse_rejects_bad_atoms():
    with pytest.raises(ValueError):
        parse_word("q", ("a",))
    with pytest.raises(ValueError):
        parse_word("a^", ("a",))
    with pytest.raises(ValueError):
        parse_word("a^0", ("a",))
    with pytest.raises(ValueError):
        parse_word("a^b", ("a",))


def test_letter_validation():
    with pytest.raises(ValueError):
        Word(((-1, 1),))
    with pytest.raises(ValueError):
        Word(((0, 2),))


@given(words, words)
def test_word_key_orders_by_length_first(u, v):
    if len(u) < len(v):
        assert word_key(u) < word_key(v)


def test_word_key_prefers_positive_sign():
    assert word_key(generator(0)) < word_key(generator(0, -1))


def test_word_is_immutable_and_hashable():
    w = generator(0)
    with pytest.raises(AttributeError):
        w.letters = ()
    assert len({w, generator(0), generator(1)}) == 2
