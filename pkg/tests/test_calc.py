import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eraserpda.calc import (
    Defined,
    UndefinedAt,
    erase_cascade,
    erase_one,
    erase_or_default,
    is_Ln_member,
    limit_prefix,
)
from eraserpda.words import DomainError, Eraser, Letter, Word, parse_symbolic as W

from conftest import first_overdraft, naive_cascade, naive_erase, words


@pytest.mark.parametrize("text, e, expected", [
    ("0 1 !1", 1, "0"),
    ("1 !2 !1 1", 1, "1 1"),
    ("0 1 !1 !1", 1, ""),
    ("0 !1 1", 1, "1"),
    ("1 !2 1", 2, "1"),
])
def test_erase_one_defined(text, e, expected):
    assert naive_erase(W(text), e) == W(expected)
    assert erase_one(W(text), e) == Defined(W(expected))


def test_erase_one_leading_eraser_is_undefined():
    assert erase_one(W("!1 0"), 1) == UndefinedAt(1)
    assert erase_one(W("0 !1 !1 1"), 1) == UndefinedAt(3)


def test_erase_one_treats_other_erasers_as_letters():
    assert erase_one(W("!3 !1"), 1) == Defined(Word())
    assert erase_one(W("!0 0"), 0) == UndefinedAt(1)


def test_erasure_pairs_are_recorded():
    out = erase_one(W("0 1 !1 !1"), 1)
    assert out.erasures == ((3, 2), (4, 1))


@pytest.mark.parametrize("text, default, expected", [("!1", "0", "0"), ("1", "0", "1"), ("0 !1 1", "0", "1")])
def test_erase_or_default(text, default, expected):
    assert erase_or_default(W(text), 1, W(default)) == W(expected)


@pytest.mark.parametrize("text, n, stage_results", [
    ("0 !2 !1 0 1", 2, ["0 0 1", "0 0 1"]),
    ("0 1 !2 !1 1", 2, ["0 1 1", "0 1 1"]),
    ("1", 3, ["1", "1", "1"]),
    ("0 1 !2 0 !1", 2, ["0 1 !2", "0"]),
])
def test_cascade_stages(text, n, stage_results):
    trace = erase_cascade(W(text), n)
    assert [k for k, _ in trace.stages] == list(range(1, n + 1))
    assert [o.result for _, o in trace.stages] == [W(r) for r in stage_results]
    assert trace.final == Defined(W(stage_results[-1]))
    assert naive_cascade(W(text), n) == W(stage_results[-1])


def test_cascade_stops_at_first_undefined():
    trace = erase_cascade(W("0 !1 !1 !2"), 3)
    assert len(trace.stages) == 1
    assert trace.final == UndefinedAt(3)
    trace = erase_cascade(W("1 !1 !2"), 2)
    assert [k for k, _ in trace.stages] == [1, 2]
    assert trace.final == UndefinedAt(1)


def test_cascade_rejects_out_of_range_index():
    with pytest.raises(DomainError):
        erase_cascade(W("0 !3"), 2)
    with pytest.raises(DomainError):
        erase_cascade(W("0 !0"), 2)


@pytest.mark.parametrize("text, n, expected", [
    ("0 !2 !1 0 1", 2, True),
    ("0 1 !2 !1 1", 2, False),
    ("1", 1, True),
    ("!1 1", 1, False),
    ("", 1, False),
    ("0 0 1 !1 1", 1, True),
])
def test_is_Ln_member(text, n, expected):
    assert is_Ln_member(W(text), n) is expected


def test_is_Ln_member_precondition():
    with pytest.raises(DomainError):
        is_Ln_member(W("1 !3"), 2)
    with pytest.raises(DomainError):
        is_Ln_member(W("!0 1"), 2)


@pytest.mark.parametrize("text, avail, expected", [
    ("1 0", (), "1 0"),
    ("1 0", {1}, ""),
    ("0 !1 1", (), "1"),
    ("1 0 !2", (), "1"),
    ("!1 1", (), ""),
])
def test_limit_prefix(text, avail, expected):
    assert limit_prefix(W(text), avail) == W(expected)


def test_limit_prefix_is_stable_under_extensions():
    # with no erasers left to the adversary, appended letters only extend the result
    w = W("0 1 !2 0 !1 1")
    base = limit_prefix(w)
    for tail in itertools.product([Letter(0), Letter(1)], repeat=3):
        ext = limit_prefix(w + Word(tail))
        assert ext[: len(base)] == base


def test_single_eraser_exhaustive_small():
    alphabet = [Letter(0), Letter(1), Eraser(1)]
    for n in range(8):
        for t in itertools.product(alphabet, repeat=n):
            w = Word(t)
            out = erase_one(w, 1)
            over = first_overdraft(w, 1)
            assert out.defined == (over is None)
            if out.defined:
                assert out.result == naive_erase(w, 1)
            else:
                assert out.position == over


@given(words(max_index=3, max_size=14), st.integers(1, 3))
def test_length_and_no_leftover_eraser(w, e):
    out = erase_one(w, e)
    if out.defined:
        assert len(out.result) == len(w) - 2 * sum(1 for s in w if s == Eraser(e))
        assert Eraser(e) not in out.result
    else:
        assert w.at(out.position) == Eraser(e)
        assert erase_one(w.prefix(out.position - 1), e).result == Word()


@given(words(max_index=3, max_size=14))
def test_condition_a_on_traces(w):
    trace = erase_cascade(w, 3)
    current = w
    for k, stage in trace.stages:
        if not stage.defined:
            break
        for eraser_pos, erased_pos in stage.erasures:
            victim = current.at(erased_pos)
            assert current.at(eraser_pos) == Eraser(k)
            assert isinstance(victim, Letter) or victim.index > k
        current = stage.result


@given(words(max_index=3, max_size=14), st.integers(3, 6))
def test_padding_with_identity_passes(w, m):
    assert erase_cascade(w, 3).final == erase_cascade(w, m).final
