"""Finite-horizon Wadge-game plays and the two reduction strategies.

Player I plays symbols from a script; player II answers each round with a
:class:`Move` computed from I's history.  Eraser ``!0`` is I's extra
eraser, stronger than every ``!n`` with ``n >= 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from .calc import UndefinedAt, cascade_in_order
from .codec import encode, has_wrong_code
from .words import DomainError, Eraser, Word, parse_symbolic, render_symbolic


@dataclass(frozen=True)
class Play:
    """Move of the round; ``Skip`` is the ``None`` variant."""

    symbol: object


class _Skip:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Skip"


Skip = _Skip()
Move = Union[Play, _Skip]
Strategy = Callable[[Word], Move]


class ScriptExhausted(ValueError):
    pass


@dataclass(frozen=True)
class GamePlay:
    rounds: tuple  # of (move_I, move_II)

    def __post_init__(self):
        for move_i, move_ii in self.rounds:
            if not isinstance(move_i, Play):
                raise DomainError("player I may not skip")
            if not (isinstance(move_ii, Play) or move_ii is Skip):
                raise DomainError(f"bad move for player II: {move_ii!r}")

    @property
    def x_I(self) -> Word:
        return Word(m.symbol for m, _ in self.rounds)

    @property
    def x_II(self) -> Word:
        return Word(m.symbol for _, m in self.rounds if isinstance(m, Play))

    @property
    def skip_mask(self) -> str:
        return "".join("1" if m is Skip else "0" for _, m in self.rounds)

    def dumps(self) -> str:
        return f"{render_symbolic(self.x_I)}\n{render_symbolic(self.x_II)}\n{self.skip_mask}\n"

    @classmethod
    def loads(cls, text: str) -> "GamePlay":
        lines = text.split("\n")
        if len(lines) < 3:
            raise ValueError("a play transcript has three lines")
        xi, xii, mask = parse_symbolic(lines[0]), list(parse_symbolic(lines[1])), lines[2].strip()
        if len(mask) != len(xi) or set(mask) - {"0", "1"}:
            raise ValueError("skip mask must have one 0/1 flag per round")
        if mask.count("0") != len(xii):
            raise ValueError("skip mask disagrees with player II's word")
        answers = iter(xii)
        return cls(tuple(
            (Play(a), Skip if flag == "1" else Play(next(answers))) for a, flag in zip(xi, mask)
        ))


def run_play(source_I: Sequence, strat_II: Strategy, rounds: int) -> GamePlay:
    source = Word(source_I)
    if len(source) < rounds:
        raise ScriptExhausted(f"script has {len(source)} symbols, {rounds} rounds requested")
    out = []
    for r in range(rounds):
        move = strat_II(source.prefix(r + 1))
        out.append((Play(source[r]), move))
    return GamePlay(tuple(out))


def copy_strategy(history: Word) -> Move:
    return Play(history[-1])


def skip_strategy(history: Word) -> Move:
    return Skip


def shift_strategy() -> Strategy:
    """Copy letters, play ``!(n+1)`` for ``!n`` and ``!1`` for the strongest eraser ``!0``."""

    def answer(history: Word) -> Move:
        s = history[-1]
        if isinstance(s, Eraser):
            return Play(Eraser(s.index + 1))
        return Play(s)

    return answer


def copy_rename_strategy(rename: Union[Mapping[int, int], Callable[[int], int]]) -> Strategy:
    """Copy I's letters and rename erasers by a strictly increasing map into indices >= 1.

    A mapping is checked up front; a callable is checked on every pair of
    indices it has been asked about.
    """
    if isinstance(rename, Mapping):
        items = sorted(rename.items())
        for (a, fa), (b, fb) in zip(items, items[1:]):
            if not fa < fb:
                raise DomainError(f"rename is not strictly increasing: {a}->{fa}, {b}->{fb}")
        if any(v < 1 for _, v in items):
            raise DomainError("renamed erasers must have index >= 1")
        table = dict(rename)

        def lookup(k):
            if k not in table:
                raise DomainError(f"rename has no image for !{k}")
            return table[k]
    else:
        seen: dict = {}

        def lookup(k):
            if k not in seen:
                v = rename(k)
                if v < 1:
                    raise DomainError("renamed erasers must have index >= 1")
                for a, fa in seen.items():
                    if (a < k) != (fa < v) or fa == v:
                        raise DomainError(f"rename is not strictly increasing at {a}, {k}")
                seen[k] = v
            return seen[k]

    def answer(history: Word) -> Move:
        s = history[-1]
        if isinstance(s, Eraser):
            return Play(Eraser(lookup(s.index)))
        return Play(s)

    return answer


def _relabel(w: Word, shift: int) -> Word:
    return Word(Eraser(s.index + shift) if isinstance(s, Eraser) else s for s in w)


def check_shift_invariant(play: GamePlay, horizon: Optional[int] = None) -> bool:
    """Stage-by-stage correspondence of the two cascades.

    I's erasers are evaluated strongest first (``!0``, ``!1``, ...), II's
    from ``!1``.  Stage ``k`` of I must match stage ``k + 1`` of II: both
    undefined at the same position, or both defined with II's result equal
    to I's with every remaining eraser index raised by one.
    """
    rounds = play.rounds if horizon is None else play.rounds[:horizon]
    if any(m is Skip for _, m in rounds):
        return False
    x_i = Word(m.symbol for m, _ in rounds)
    x_ii = Word(m.symbol for _, m in rounds)
    top = max(x_i.eraser_indices() | {0})
    tr_i = cascade_in_order(x_i, range(0, top + 1))
    tr_ii = cascade_in_order(x_ii, range(1, top + 2))
    if len(tr_i.stages) != len(tr_ii.stages):
        return False
    for (ki, oi), (kii, oii) in zip(tr_i.stages, tr_ii.stages):
        if kii != ki + 1:
            return False
        if isinstance(oi, UndefinedAt) or isinstance(oii, UndefinedAt):
            if oi != oii:
                return False
            continue
        if _relabel(oi.result, 1) != oii.result:
            return False
    return True


def response_is_wrong_code_free(play: GamePlay) -> bool:
    return not has_wrong_code(encode(play.x_II))
