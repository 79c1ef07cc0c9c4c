import random

import pytest

from eraserpda.wadge import (
    GamePlay,
    Play,
    ScriptExhausted,
    Skip,
    check_shift_invariant,
    copy_rename_strategy,
    copy_strategy,
    response_is_wrong_code_free,
    run_play,
    shift_strategy,
    skip_strategy,
)
from eraserpda.words import DomainError, Eraser, Word, parse_symbolic as W


def test_copy_and_skip():
    assert run_play(W("0 1"), copy_strategy, 2).x_II == W("0 1")
    play = run_play(W("0 1"), skip_strategy, 2)
    assert play.x_II == Word() and play.skip_mask == "11"


def test_shift_examples():
    assert run_play(W("0 !0 1"), shift_strategy(), 3).x_II == W("0 !1 1")
    s = shift_strategy()
    assert s(W("1")) == Play(W("1")[0])
    assert s(W("!3")) == Play(Eraser(4))
    assert s(W("!0")) == Play(Eraser(1))


def test_script_exhausted():
    with pytest.raises(ScriptExhausted):
        run_play(W("0"), copy_strategy, 2)


def test_copy_rename():
    assert run_play(W("0 !1 1"), copy_rename_strategy({1: 1}), 3).x_II == W("0 !1 1")
    assert run_play(W("!1 !2"), copy_rename_strategy(lambda n: n + 1), 2).x_II == W("!2 !3")


@pytest.mark.parametrize("bad", [{1: 2, 2: 2}, {1: 3, 2: 1}, {0: 0}])
def test_copy_rename_rejects_non_monotone(bad):
    with pytest.raises(DomainError):
        copy_rename_strategy(bad)


def test_copy_rename_callable_checked_lazily():
    strat = copy_rename_strategy(lambda n: 5 - n)
    strat(W("!1"))
    with pytest.raises(DomainError):
        strat(W("!1 !2"))


@pytest.mark.parametrize("x_i, x_ii", [("0 !0", "0 !1"), ("1 0 !2", "1 0 !3"), ("!0 1", "!1 1")])
def test_shift_invariant_examples(x_i, x_ii):
    play = run_play(W(x_i), shift_strategy(), len(W(x_i)))
    assert play.x_II == W(x_ii)
    assert check_shift_invariant(play)


def test_shift_invariant_detects_plain_copy():
    play = run_play(W("0 !1 !0 1"), copy_strategy, 4)
    assert not check_shift_invariant(play)
    assert not check_shift_invariant(run_play(W("0 1"), skip_strategy, 2))


def test_transcript_roundtrip():
    rng = random.Random(5)
    for _ in range(200):
        script = Word(rng.choice([W("0")[0], W("1")[0], Eraser(rng.randint(0, 3))]) for _ in range(8))
        strat = rng.choice([copy_strategy, skip_strategy, shift_strategy()])
        play = run_play(script, strat, rng.randint(0, 8))
        text = play.dumps()
        assert GamePlay.loads(text) == play
        assert len(text.split("\n")) == 4


def test_transcript_format_errors():
    with pytest.raises(ValueError):
        GamePlay.loads("0 1\n0\n00\n")
    with pytest.raises(ValueError):
        GamePlay.loads("0\n")
    with pytest.raises(DomainError):
        GamePlay(((Skip, Skip),))


def test_responses_are_wrong_code_free():
    play = run_play(W("0 !0 !3 1"), shift_strategy(), 4)
    assert response_is_wrong_code_free(play)
