"""Surface coding of erasers as ``A B^n C^n D^n E^n Z`` and wrong-code detection."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .words import DomainError, Eraser, Letter, Word, check_surface


@dataclass(frozen=True)
class LetterToken:
    bit: int
    start: int  # 1-based surface position

    @property
    def end(self) -> int:
        return self.start


@dataclass(frozen=True)
class EraserCode:
    n: int
    start: int
    end: int


@dataclass(frozen=True)
class Malformed:
    start: int
    end: int  # inclusive

    @property
    def span(self) -> tuple:
        return (self.start, self.end)


Token = Union[LetterToken, EraserCode, Malformed]


class WrongCodeError(DomainError):
    def __init__(self, spans):
        self.spans = tuple(spans)
        super().__init__("wrong code at " + ", ".join(f"{a}..{b}" for a, b in self.spans))


def encode_symbol(s) -> str:
    if isinstance(s, Letter):
        return str(s.bit)
    if isinstance(s, Eraser) and s.index >= 1:
        n = s.index
        return "A" + "B" * n + "C" * n + "D" * n + "E" * n + "Z"
    raise DomainError(f"{s!r} cannot be encoded")


def encode(w: Word) -> str:
    return "".join(encode_symbol(s) for s in w)


def _run(e: str, i: int, ch: str) -> int:
    j = i
    while j < len(e) and e[j] == ch:
        j += 1
    return j


def tokenize(e: str) -> list:
    """Split a surface word into letters, eraser codes and malformed spans.

    After an ``A`` the scanner consumes maximal runs of B, C, D and E (each
    possibly empty) and then an optional ``Z``.  The segment is an eraser
    code only if all four runs have the same positive length and the ``Z``
    is there; otherwise the whole segment is one malformed span.  A code
    character other than ``A`` met outside a segment is a malformed span of
    length one.
    """
    check_surface(e)
    out = []
    i = 0
    while i < len(e):
        ch = e[i]
        if ch in "01":
            out.append(LetterToken(int(ch), i + 1))
            i += 1
            continue
        if ch != "A":
            out.append(Malformed(i + 1, i + 1))
            i += 1
            continue
        j = i + 1
        counts = []
        for block in "BCDE":
            k = _run(e, j, block)
            counts.append(k - j)
            j = k
        closed = j < len(e) and e[j] == "Z"
        if closed:
            j += 1
        if closed and counts[0] >= 1 and len(set(counts)) == 1:
            out.append(EraserCode(counts[0], i + 1, j))
        else:
            out.append(Malformed(i + 1, j))
        i = j
    return out


def malformed_spans(e: str) -> list:
    return [t.span for t in tokenize(e) if isinstance(t, Malformed)]


def has_wrong_code(e: str) -> bool:
    return any(isinstance(t, Malformed) for t in tokenize(e))


def decode(e: str) -> Word:
    tokens = tokenize(e)
    spans = [t.span for t in tokens if isinstance(t, Malformed)]
    if spans:
        raise WrongCodeError(spans)
    return Word(Letter(t.bit) if isinstance(t, LetterToken) else Eraser(t.n) for t in tokens)
