import itertools

import pytest

from psmonoid.words import (
    IndexedSymbol,
    WordError,
    all_words,
    check_rank,
    destandardize,
    evaluation,
    format_standardized,
    format_word,
    is_standardized,
    parse_word,
    shortlex_less,
    std_left,
    std_right,
)

W = (1, 3, 2, 1, 2, 2, 1)


def test_evaluation_examples():
    assert evaluation(W) == {1: 3, 2: 3, 3: 1}
    assert evaluation(()) == {}
    assert evaluation((2, 2, 2)) == {2: 3}


def test_std_left_example():
    assert format_standardized(std_left(W)) == "1_1 3_1 2_1 1_2 2_2 2_3 1_3"
    assert std_left(()) == ()
    assert std_left((1, 1)) == (IndexedSymbol(1, 1), IndexedSymbol(1, 2))


def test_std_right_example():
    assert format_standardized(std_right(W)) == "1_3 3_1 2_3 1_2 2_2 2_1 1_1"
    assert std_right((1, 1)) == (IndexedSymbol(1, 2), IndexedSymbol(1, 1))


def test_destandardize_examples():
    assert destandardize(std_left(W)) == W
    assert destandardize(std_right(W)) == W
    assert destandardize(()) == ()


def test_standardization_round_trip_exhaustive():
    for w in all_words(3, 8):
        for std in (std_left, std_right):
            s = std(w)
            assert destandardize(s) == w
            assert is_standardized(s)
            assert len(set(s)) == len(w)


def test_indexed_symbol_order_is_lexicographic():
    assert IndexedSymbol(1, 2) < IndexedSymbol(2, 1)
    assert IndexedSymbol(2, 1) < IndexedSymbol(2, 3)


def test_shortlex_examples():
    assert shortlex_less((2, 1, 3), (2, 3, 1))
    assert shortlex_less((2, 2), (1, 1, 1))
    assert not shortlex_less((1, 2), (1, 2))


def test_shortlex_is_strict_total_order():
    words = list(all_words(3, 4))
    for u, v in itertools.product(words, repeat=2):
        assert (u == v) + shortlex_less(u, v) + shortlex_less(v, u) == 1
    sample = words[::7]
    for u, v, w in itertools.product(sample, repeat=3):
        if shortlex_less(u, v) and shortlex_less(v, w):
            assert shortlex_less(u, w)


@pytest.mark.parametrize("text, word", [("254263542", (2, 5, 4, 2, 6, 3, 5, 4, 2)), ("e", ()), ("", ()), ("10,2,11", (10, 2, 11))])
def test_parse_word(text, word):
    assert parse_word(text) == word
    assert parse_word(format_word(word)) == word


@pytest.mark.parametrize("text", ["12a", "0", "1,,2", "3,-1"])
def test_parse_word_rejects(text):
    with pytest.raises(WordError):
        parse_word(text)


def test_check_rank():
    check_rank((1, 2), 2)
    check_rank((7,), None)
    with pytest.raises(WordError):
        check_rank((1, 3), 2)
