"""Backspace evaluation of indexed erasers.

``erase_one`` evaluates a single eraser index as a backspace, left to right.
``erase_cascade`` runs the passes for indices 1, 2, ... in increasing order,
so a lower index is the stronger eraser: it is evaluated while the higher
ones are still present and may delete them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import _kernels
from .words import DomainError, Eraser, Letter, Word

_ZERO_STAR_ONE = re.compile(r"0*1\Z")


@dataclass(frozen=True)
class Defined:
    result: Word
    # (eraser position, erased position), 1-based in the pass input
    erasures: tuple = field(default=(), compare=False, repr=False)

    @property
    def defined(self) -> bool:
        return True


@dataclass(frozen=True)
class UndefinedAt:
    position: int

    @property
    def defined(self) -> bool:
        return False


EvalOutcome = Union[Defined, UndefinedAt]


@dataclass(frozen=True)
class CascadeTrace:
    stages: tuple  # of (index, EvalOutcome)
    final: EvalOutcome

    @property
    def defined(self) -> bool:
        return self.final.defined


def _codes(w: Word) -> list:
    return [s.index if isinstance(s, Eraser) else -1 for s in w]


def erase_one(w: Word, e: int) -> EvalOutcome:
    """Evaluate every ``Eraser(e)`` in ``w`` as a backspace.

    All other symbols, including erasers of other indices, are ordinary
    letters for this pass.
    """
    kept, pairs, undefined_at = _kernels.erase_pass(_codes(w), e)
    if undefined_at >= 0:
        return UndefinedAt(undefined_at + 1)
    return Defined(Word(w[i] for i in kept), tuple((a + 1, b + 1) for a, b in pairs))


def erase_or_default(w: Word, e: int, default: Word) -> Word:
    out = erase_one(w, e)
    return out.result if out.defined else default


def cascade_in_order(w: Word, order: Iterable[int]) -> CascadeTrace:
    """Apply ``erase_one`` for each index of ``order`` in turn, stopping at the first undefined pass."""
    stages = []
    current: EvalOutcome = Defined(Word(w))
    for k in order:
        current = erase_one(current.result, k)
        stages.append((k, current))
        if not current.defined:
            break
    return CascadeTrace(tuple(stages), current)


def erase_cascade(w: Word, max_index: int) -> CascadeTrace:
    if max_index < 1:
        raise DomainError("max_index must be >= 1")
    bad = sorted(k for k in w.eraser_indices() if not 1 <= k <= max_index)
    if bad:
        raise DomainError(f"eraser indices {bad} outside 1..{max_index}")
    return cascade_in_order(w, range(1, max_index + 1))


def _check_ln_alphabet(w: Word, n: int) -> None:
    for s in w:
        if isinstance(s, Letter):
            continue
        if isinstance(s, Eraser) and 1 <= s.index <= n:
            continue
        raise DomainError(f"{s!r} is not allowed in a word over 0, 1, !1..!{n}")


def in_zero_star_one(w: Word) -> bool:
    if not all(isinstance(s, Letter) for s in w):
        return False
    return _ZERO_STAR_ONE.match("".join(str(s.bit) for s in w)) is not None


def is_Ln_member(w: Word, n: int) -> bool:
    if n < 1:
        raise DomainError("n must be >= 1")
    _check_ln_alphabet(w, n)
    trace = erase_cascade(w, n)
    return trace.defined and in_zero_star_one(trace.final.result)


def limit_prefix(w: Word, available_indices: Optional[Iterable[int]] = None) -> Word:
    """Longest prefix of the full cascade of ``w`` that no extension can change.

    ``available_indices`` are the eraser indices an extension may use
    (none by default).  Whatever the index, enough copies of one eraser
    appended to ``w`` delete every survivor, so with any eraser available
    only the empty prefix is stable.  An undefined cascade stays undefined
    under extension and yields the empty word.
    """
    if available_indices and set(available_indices):
        return Word()
    trace = cascade_in_order(w, sorted(w.eraser_indices()))
    return trace.final.result if trace.defined else Word()
