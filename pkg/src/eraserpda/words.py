"""Symbols, words and the two textual formats shared by the rest of the package.

A symbolic word is written as whitespace separated tokens: ``0``, ``1`` and
``!k`` for the eraser of index ``k`` (``!0`` is the strongest eraser, used only
by the Wadge-game strategies).  The encoded surface format is a plain string
over ``0 1 A B C D E Z`` where ``A`` and ``Z`` stand for the opening and
closing code characters.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

SURFACE_ALPHABET = "01ABCDEZ"
CODE_CHARS = "ABCDEZ"


class WordSyntaxError(ValueError):
    """Malformed symbolic text."""

    def __init__(self, token: str, position: int):
        super().__init__(f"malformed token {token!r} at token {position}")
        self.token = token
        self.position = position


class DomainError(ValueError):
    """An operation was called outside its precondition."""


@dataclass(frozen=True, order=True)
class Letter:
    bit: int

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise DomainError(f"letter must be 0 or 1, got {self.bit!r}")

    def __repr__(self):
        return f"Letter({self.bit})"


@dataclass(frozen=True, order=True)
class Eraser:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise DomainError(f"eraser index must be >= 0, got {self.index}")

    def __repr__(self):
        return f"Eraser({self.index})"


@dataclass(frozen=True, order=True)
class CodeChar:
    char: str

    def __post_init__(self):
        if self.char not in CODE_CHARS:
            raise DomainError(f"not a code character: {self.char!r}")

    def __repr__(self):
        return f"CodeChar({self.char!r})"


Symbol = Union[Letter, Eraser, CodeChar]

ZERO = Letter(0)
ONE = Letter(1)


class Word(tuple):
    """Immutable finite sequence of symbols.

    Python indexing (``w[0]``) stays 0-based; :meth:`at` and :meth:`prefix`
    follow the 1-based ``v(i)`` / ``v[i]`` convention.
    """

    def __new__(cls, symbols: Iterable[Symbol] = ()):
        return super().__new__(cls, symbols)

    def at(self, i: int) -> Symbol:
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return self[i - 1]

    def prefix(self, i: int) -> "Word":
        if not 0 <= i <= len(self):
            raise IndexError(f"prefix length {i} outside 0..{len(self)}")
        return Word(tuple.__getitem__(self, slice(0, i)))

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __radd__(self, other):
        return Word(tuple(other) + tuple(self))

    def eraser_indices(self) -> set[int]:
        return {s.index for s in self if isinstance(s, Eraser)}

    def __repr__(self):
        return f"Word({render_symbolic(self) if not self.has_code_chars() else list(self)!r})"

    def __str__(self):
        return render_symbolic(self)

    def has_code_chars(self) -> bool:
        return any(isinstance(s, CodeChar) for s in self)


_ERASER_TOKEN = re.compile(r"!(\d+)\Z")


def parse_symbol(token: str, position: int = 1) -> Symbol:
    if token == "0":
        return ZERO
    if token == "1":
        return ONE
    m = _ERASER_TOKEN.match(token)
    if m is None:
        raise WordSyntaxError(token, position)
    return Eraser(int(m.group(1)))


def parse_symbolic(text: str) -> Word:
    """Parse ``"0 1 !2"`` style text into a :class:`Word`."""
    return Word(parse_symbol(tok, pos) for pos, tok in enumerate(text.split(), start=1))


def render_symbol(s: Symbol) -> str:
    if isinstance(s, Letter):
        return str(s.bit)
    if isinstance(s, Eraser):
        return f"!{s.index}"
    raise DomainError(f"{s!r} has no symbolic rendering")


def render_symbolic(w: Iterable[Symbol]) -> str:
    return " ".join(render_symbol(s) for s in w)


def word(text_or_symbols: Union[str, Iterable[Symbol]]) -> Word:
    """Coerce symbolic text or an iterable of symbols to a :class:`Word`."""
    if isinstance(text_or_symbols, str):
        return parse_symbolic(text_or_symbols)
    return Word(text_or_symbols)


def check_surface(e: str) -> str:
    bad = set(e) - set(SURFACE_ALPHABET)
    if bad:
        raise DomainError(f"characters outside the surface alphabet: {''.join(sorted(bad))!r}")
    return e
