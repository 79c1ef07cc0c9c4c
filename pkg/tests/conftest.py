import itertools
import sys
import re

import pytest
from hypothesis import strategies as st

from eraserpda.pda import EPS, make_pda
from eraserpda.words import Eraser, Letter, Word

# --- independent oracles -------------------------------------------------


def naive_erase(symbols, e):
    """Backspace by repeated rewriting: delete any adjacent (non-e, e) pair until none is left.

    Returns ``None`` when an eraser survives (the pass is undefined).
    """
    s = list(symbols)
    changed = True
    while changed:
        changed = False
        for i in range(1, len(s)):
            if s[i] == Eraser(e) and s[i - 1] != Eraser(e):
                del s[i - 1:i + 1]
                changed = True
                break
    if Eraser(e) in s:
        return None
    return Word(s)


def first_overdraft(symbols, e):
    """1-based position of the first prefix with more e-erasers than other symbols, else None."""
    bal = 0
    for i, s in enumerate(symbols, start=1):
        bal += -1 if s == Eraser(e) else 1
        if bal < 0:
            return i
    return None


def naive_cascade(symbols, max_index):
    cur = Word(symbols)
    for k in range(1, max_index + 1):
        cur = naive_erase(cur, k)
        if cur is None:
            return None
    return cur


def naive_is_Linf(symbols):
    n = max((s.index for s in symbols if isinstance(s, Eraser)), default=1)
    out = naive_cascade(symbols, n)
    if out is None:
        return False
    return re.fullmatch(r"0*1", "".join(str(s.bit) for s in out)) is not None


def balanced(word):
    depth = 0
    for c in word:
        depth += 1 if c == "(" else -1
        if depth < 0:
            return False
    return depth == 0


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


# --- sample machines -----------------------------------------------------


@pytest.fixture(scope="session")
def bracket_pda():
    return make_pda([
        ("q", "(", "Z0", "q", ("X", "Z0")),
        ("q", "(", "X", "q", ("X", "X")),
        ("q", ")", "X", "q", ()),
        ("q", EPS, "Z0", "f", ("Z0",)),
    ], "q", "Z0", {"f"})


@pytest.fixture(scope="session")
def anbn_pda():
    return make_pda([
        ("p", "a", "Z0", "p", ("A", "Z0")),
        ("p", "a", "A", "p", ("A", "A")),
        ("p", "b", "A", "r", ()),
        ("r", "b", "A", "r", ()),
        ("r", EPS, "Z0", "f", ("Z0",)),
    ], "p", "Z0", {"f"})


# --- hypothesis strategies -----------------------------------------------

letters = st.sampled_from([Letter(0), Letter(1)])


def symbols(max_index=6, min_index=1):
    return st.one_of(letters, st.builds(Eraser, st.integers(min_index, max_index)))


def words(max_index=6, max_size=20, min_index=1):
    return st.lists(symbols(max_index, min_index), max_size=max_size).map(Word)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
