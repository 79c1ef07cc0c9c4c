import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eraserpda.codec import (
    EraserCode,
    LetterToken,
    Malformed,
    WrongCodeError,
    decode,
    encode,
    has_wrong_code,
    malformed_spans,
    tokenize,
)
from eraserpda.sampling import code, wrong_code
from eraserpda.words import DomainError, Eraser, Word, parse_symbolic as W

from conftest import all_words, words


@pytest.mark.parametrize("text, surface", [("0 !1 1", "0ABCDEZ1"), ("!2", "ABBCCDDEEZ"), ("", "")])
def test_encode(text, surface):
    assert encode(W(text)) == surface


def test_encode_rejects_strongest_eraser():
    with pytest.raises(DomainError):
        encode(W("0 !0"))


def test_tokenize_examples():
    assert tokenize("0ABCDEZ1") == [LetterToken(0, 1), EraserCode(1, 2, 7), LetterToken(1, 8)]
    assert tokenize("ABBCDEZ") == [Malformed(1, 7)]
    assert tokenize("B") == [Malformed(1, 1)]


@pytest.mark.parametrize("surface, spans", [
    ("AZ", [(1, 2)]),
    ("ABBC", [(1, 4)]),
    ("ABCA", [(1, 3), (4, 4)]),
    ("ABCDE0", [(1, 5)]),
    ("ABCDEZZ", [(7, 7)]),
    ("ACDEZ1B", [(1, 5), (7, 7)]),
    ("ABCDEEZ", [(1, 7)]),
    ("AABCDEZ", [(1, 1)]),
])
def test_malformed_spans(surface, spans):
    assert malformed_spans(surface) == spans


@pytest.mark.parametrize("surface, expected", [("0ABCDEZ1", False), ("1ABBCDEZ0", True), ("01", False), ("", False)])
def test_has_wrong_code(surface, expected):
    assert has_wrong_code(surface) is expected


def test_decode_examples():
    assert decode("0ABCDEZ1") == W("0 !1 1")
    assert decode("") == Word()
    with pytest.raises(WrongCodeError) as info:
        decode("AZ")
    assert info.value.spans == ((1, 2),)


def test_tokenize_rejects_foreign_characters():
    with pytest.raises(DomainError):
        tokenize("0X1")


def test_tokens_cover_every_character_once():
    for e in all_words("0ABCZ", 6):
        pos = 1
        for t in tokenize(e):
            assert t.start == pos
            pos = t.end + 1
        assert pos == len(e) + 1


@given(words(max_index=6, max_size=20))
def test_decode_encode_roundtrip(w):
    e = encode(w)
    assert not has_wrong_code(e)
    assert decode(e) == w


def _closed_piece(rng):
    r = rng.random()
    if r < 0.4:
        return rng.choice("01")
    if r < 0.8:
        return code(rng.randint(1, 3))
    return "A" + "B" * rng.randint(0, 2) + "C" * rng.randint(0, 2) + "DEZ"


@given(st.randoms(use_true_random=False))
def test_wrong_code_survives_hosting(rng):
    e = "".join(wrong_code(rng) for _ in range(rng.randint(1, 2)))
    assert has_wrong_code(e)
    u = "".join(_closed_piece(rng) for _ in range(rng.randint(0, 3)))
    v = "".join(rng.choice(["0", "1", code(1), code(2)]) for _ in range(rng.randint(0, 3)))
    assert has_wrong_code(u + e + v)


def test_encode_never_makes_wrong_codes_exhaustive_small():
    rng = random.Random(3)
    for _ in range(2000):
        w = Word(Eraser(rng.randint(1, 6)) if rng.random() < 0.5 else W(rng.choice("01"))[0]
                 for _ in range(rng.randint(0, 10)))
        assert not has_wrong_code(encode(w))
