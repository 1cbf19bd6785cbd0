"""Word and LinComb substrate: parsing, grading, canonical arithmetic."""

import random
from fractions import Fraction
from math import comb

import pytest

from unitmzv.words import (
    E0,
    MODULI,
    LinComb,
    Word,
    format_lincomb,
    format_word,
    iter_unit_words,
    iter_words,
    lc_combine,
    parse_word,
    weight_and_depth,
)


def test_parse_word_basic_forms():
    assert parse_word("x,1", 2).letters == (E0, 1)
    assert parse_word("0", 4).letters == (0,)
    assert parse_word("", 3).letters == ()
    assert parse_word("2,x,0", 3).letters == (2, E0, 0)


def test_parse_word_rejects_bad_tokens():
    with pytest.raises(ValueError):
        parse_word("2", 2)  # exponent out of range
    with pytest.raises(ValueError):
        parse_word("y", 3)
    with pytest.raises(ValueError):
        parse_word("1,,0", 2)  # empty token
    with pytest.raises(ValueError):
        parse_word("-1", 4)
    with pytest.raises(ValueError):
        parse_word("1", 5)  # unsupported modulus


def test_word_constructor_validates_letters():
    with pytest.raises(ValueError):
        Word(2, (3,))
    with pytest.raises(ValueError):
        Word(3, (-2,))
    with pytest.raises(ValueError):
        Word(7, (0,))


def test_parse_format_round_trip_exhaustive_small():
    for n in MODULI:
        for wt in range(5):
            for w in iter_words(n, wt):
                text = format_word(w)
                assert parse_word(text, n) == w


def test_weight_and_depth():
    assert weight_and_depth(parse_word("1,x", 2)) == (2, 1)
    assert weight_and_depth(Word(3)) == (0, 0)
    assert weight_and_depth(parse_word("0,0,0", 2)) == (3, 3)
    for w in iter_words(4, 3):
        wt, d = weight_and_depth(w)
        assert 0 <= d <= wt == 3
        assert (d == wt) == w.is_unit


def test_iter_words_counts():
    # weight w over N+1 letters: sum_d C(w,d) N^d = (N+1)^w words
    for n in MODULI:
        for wt in range(5):
            assert sum(1 for _ in iter_words(n, wt)) == (n + 1) ** wt
            assert sum(1 for _ in iter_unit_words(n, wt)) == n ** wt
            for d in range(wt + 1):
                count = sum(1 for _ in iter_words(n, wt, d))
                assert count == comb(wt, d) * n ** d


def test_word_sort_key_orders_terms_canonically():
    ws = sorted(iter_words(2, 2), key=Word.sort_key)
    assert [format_word(w) for w in ws] == ["1,1", "1,0", "1,x", "0,1", "0,0", "0,x", "x,1", "x,0", "x,x"]
    # weight graded before lexicographic
    assert Word(2, (1, 1)).sort_key() > Word(2, (1,)).sort_key()


def test_word_conjugate():
    assert parse_word("1,x,3", 4).conjugate() == parse_word("3,x,1", 4)
    assert parse_word("1,2", 3).conjugate() == parse_word("2,1", 3)
    w = parse_word("1,x", 2)
    assert w.conjugate() == w


def test_lincomb_cancellation_and_scaling():
    w = parse_word("1,0", 2)
    assert lc_combine([(1, LinComb.from_word(w)), (-1, LinComb.from_word(w))]).is_zero()
    assert lc_combine([(Fraction(1, 2), LinComb.from_word(w, 2))]) == LinComb.from_word(w)
    w1, w2 = parse_word("1", 2), parse_word("0", 2)
    merged = lc_combine([(1, LinComb.from_word(w1)), (1, LinComb.from_word(w2, 3))])
    assert merged.coeff(w1) == 1 and merged.coeff(w2) == 3


def test_lincomb_never_stores_zero_coefficients():
    w = parse_word("1", 3)
    x = LinComb(3, {w: Fraction(0)})
    assert x.is_zero() and len(x) == 0
    y = LinComb.from_word(w) - LinComb.from_word(w)
    assert y.is_zero() and list(y.items()) == []


def test_lincomb_modulus_mismatch():
    with pytest.raises(ValueError):
        LinComb(2, {parse_word("1", 3): 1})
    with pytest.raises(ValueError):
        LinComb.from_word(parse_word("1", 2)) + LinComb.from_word(parse_word("1", 3))
    with pytest.raises(ValueError):
        lc_combine(
            [(1, LinComb.from_word(parse_word("1", 2)))],
            modulus=4,
        )


def test_lincomb_randomized_reassociation():
    # canonical form is independent of the order and grouping of additions
    rng = random.Random(1729)
    words = [w for wt in range(4) for w in iter_words(3, wt)]
    pieces = []
    for _ in range(40):
        w = rng.choice(words)
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 9))
        pieces.append(LinComb.from_word(w, c))
    reference = lc_combine([(1, p) for p in pieces], modulus=3)
    for _ in range(10):
        rng.shuffle(pieces)
        total = LinComb.zero(3)
        splits = sorted(rng.sample(range(1, len(pieces)), 3))
        chunks = [pieces[i:j] for i, j in zip([0] + splits, splits + [len(pieces)])]
        for chunk in chunks:
            part = LinComb.zero(3)
            for p in chunk:
                part = part + p
            total = total + part
        assert total == reference


def test_format_lincomb_text():
    assert format_lincomb(LinComb.zero(2)) == "0"
    w1, w2 = parse_word("1,0", 2), parse_word("0,1", 2)
    x = LinComb(2, {w1: 1, w2: 1})
    assert format_lincomb(x) == "1,0 + 0,1"
    y = LinComb(2, {w1: Fraction(-1, 2), w2: 3})
    assert format_lincomb(y) == "-1/2*1,0 + 3*0,1"
    unit = LinComb.from_word(Word(2), Fraction(5, 3))
    assert format_lincomb(unit) == "5/3"


def test_lincomb_json_shape():
    x = LinComb(2, {parse_word("1,0", 2): Fraction(1, 2)})
    assert x.to_json_obj() == {
        "N": 2,
        "terms": [{"word": "1,0", "coeff": "1/2"}],
    }
