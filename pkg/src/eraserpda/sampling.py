"""Random surface words for equivalence testing.

Uniform strings over the surface alphabet almost never decode, so samples
are concatenations of letters, correct codes and injected wrong codes.  A
share of them is planted from the matching structure of ``L_inf`` so that
accepted words are not rare.
"""
from __future__ import annotations

import random
from typing import List

from .codec import encode_symbol
from .words import ONE, ZERO, Eraser, Letter, Word


def code(n: int) -> str:
    return encode_symbol(Eraser(n))


def wrong_code(rng: random.Random) -> str:
    """A segment the tokenizer rejects, or a stray code character."""
    if rng.random() < 0.2:
        return rng.choice("BCDEZ")
    while True:
        b, c, d, e = (rng.randint(0, 3) for _ in range(4))
        closed = rng.random() < 0.8
        if not (closed and b == c == d == e and b > 0):
            break
    return "A" + "B" * b + "C" * c + "D" * d + "E" * e + ("Z" if closed else "")


def _pair(rng: random.Random, jmax: int, max_index: int, budget: int) -> List:
    """Symbols of one erased item, nested pairs and the eraser removing it."""
    j = rng.randint(1, jmax)
    if j < max_index and rng.random() < 0.35:
        item = Eraser(rng.randint(j + 1, max_index))
    else:
        item = rng.choice((ZERO, ONE))
    inner: List = []
    room = budget - 2
    while room >= 2 and rng.random() < 0.4:
        sub = _pair(rng, j, max_index, room)
        inner += sub
        room -= len(sub)
    return [item] + inner + [Eraser(j)]


def planted_member(rng: random.Random, max_index: int = 4, max_len: int = 12) -> Word:
    """A word built as survivors ``0^a 1`` with erased segments between them.

    Usually in ``L_inf``; callers still ask the oracle for the verdict.
    """
    survivors = [ZERO] * rng.randint(0, 3) + [ONE]
    out: List = []
    room = max_len - len(survivors)
    for s in survivors:
        while room >= 2 and rng.random() < 0.5:
            seg = _pair(rng, max_index, max_index, room)
            out += seg
            room -= len(seg)
        out.append(s)
    while room >= 2 and rng.random() < 0.3:
        seg = _pair(rng, max_index, max_index, room)
        out += seg
        room -= len(seg)
    return Word(out)


def mutate(rng: random.Random, w: Word, max_index: int) -> Word:
    """Change one symbol: flip a letter or move an eraser index."""
    if not w:
        return w
    i = rng.randrange(len(w))
    s = w[i]
    if isinstance(s, Letter):
        new = Letter(1 - s.bit) if rng.random() < 0.7 else Eraser(rng.randint(1, max_index))
    else:
        choices = [k for k in range(1, max_index + 1) if k != s.index]
        new = Eraser(rng.choice(choices)) if choices and rng.random() < 0.7 else rng.choice((ZERO, ONE))
    return w[:i] + Word([new]) + w[i + 1:]


def random_word(rng: random.Random, max_index: int = 4, max_len: int = 12) -> Word:
    n = rng.randint(0, max_len)
    return Word(
        rng.choice((ZERO, ONE)) if rng.random() < 0.55 else Eraser(rng.randint(1, max_index))
        for _ in range(n)
    )


def structured_samples(rng: random.Random, k: int, max_index: int = 4, max_len: int = 12,
                       wrong_rate: float = 0.25) -> List[str]:
    """``k`` surface words of decoded length <= ``max_len``.

    Mix: planted members, one-symbol mutations of them, and random words;
    a ``wrong_rate`` share gets one or two injected wrong codes.
    """
    out = []
    for _ in range(k):
        r = rng.random()
        if r < 0.4:
            w = planted_member(rng, max_index, max_len)
        elif r < 0.7:
            w = mutate(rng, planted_member(rng, max_index, max_len), max_index)
        else:
            w = random_word(rng, max_index, max_len)
        parts = [encode_symbol(s) for s in w]
        if rng.random() < wrong_rate:
            for _ in range(rng.randint(1, 2)):
                parts.insert(rng.randint(0, len(parts)), wrong_code(rng))
        out.append("".join(parts))
    return out
