"""Brute-force reference semantics for the languages the automaton should accept."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, List, Optional, Sequence

from .calc import is_Ln_member
from .codec import decode, has_wrong_code, malformed_spans
from .words import DomainError, Eraser, Word


class BudgetExceeded(RuntimeError):
    pass


def is_Linf(w: Word) -> bool:
    if any(isinstance(s, Eraser) and s.index == 0 for s in w):
        raise DomainError("the strongest eraser !0 is not part of L_inf words")
    n = max(w.eraser_indices(), default=1)
    return is_Ln_member(w, n)


def oracle_member_B(e: str) -> bool:
    return has_wrong_code(e) or is_Linf(decode(e))


def enumerate_members(member_fn: Callable, alphabet: Sequence, max_len: int,
                      budget: int = 2_000_000) -> list:
    """Members of length <= ``max_len`` in length-lexicographic order.

    ``alphabet`` is taken in the given order.  Words are passed to
    ``member_fn`` as strings when every letter is a one-character string,
    else as tuples.
    """
    alphabet = list(alphabet)
    total = sum(len(alphabet) ** n for n in range(max_len + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} candidate words exceed the budget of {budget}")
    as_str = all(isinstance(a, str) and len(a) == 1 for a in alphabet)
    out = []
    for n in range(max_len + 1):
        if n and not alphabet:
            break
        for letters in product(alphabet, repeat=n):
            cand = "".join(letters) if as_str else tuple(letters)
            if member_fn(cand):
                out.append(cand)
    return out


def decompose_power(u: str, member_fn: Callable[[str], bool]) -> Optional[List[int]]:
    """Split points ``0 = p0 < ... < pm = len(u)`` with every piece a nonempty member.

    The empty word yields ``[0]``, the empty product.
    """
    n = len(u)
    member = lru_cache(maxsize=None)(lambda i, j: bool(member_fn(u[i:j])))
    # back[j] = some i such that u[:i] decomposes and u[i:j] is a member
    back = [None] * (n + 1)
    back[0] = 0
    for j in range(1, n + 1):
        for i in range(j):
            if back[i] is not None and member(i, j):
                back[j] = i
                break
    if back[n] is None:
        return None
    splits = [n]
    while splits[-1]:
        splits.append(back[splits[-1]])
    return splits[::-1]


def decompose_naive(u: str, member_fn: Callable[[str], bool]) -> bool:
    """Try every set of cut points; exponential, for cross-checking only."""
    n = len(u)
    if n == 0:
        return True
    for cuts in product((False, True), repeat=n - 1):
        points = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
        if all(member_fn(u[a:b]) for a, b in zip(points, points[1:])):
            return True
    return False


@dataclass(frozen=True)
class PrefixClass:
    wrong_code_count: int
    decomposable: bool
    splits: Optional[tuple] = None

    @property
    def trivial(self) -> bool:
        return self.splits == (0,)


def classify_prefix(e: str, member_fn: Callable[[str], bool] = oracle_member_B) -> PrefixClass:
    """Wrong-code count and V+ decomposability of a finite prefix.

    A prefix with no wrong code can only extend into the part of the
    omega-power without wrong codes; a count that keeps growing along a
    play points towards infinitely many.
    """
    splits = decompose_power(e, member_fn)
    return PrefixClass(len(malformed_spans(e)), splits is not None,
                       tuple(splits) if splits is not None else None)
