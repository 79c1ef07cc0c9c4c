"""Nondeterministic pushdown automata accepting by final state."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from .. import _kernels
from ..words import DomainError

EPS = None  # input label of an epsilon move

Key = Tuple[str, Optional[str], str]
Target = Tuple[str, Tuple[str, ...]]


class Inconclusive(RuntimeError):
    """The search hit a resource limit before reaching a verdict."""


@dataclass(frozen=True)
class Configuration:
    state: str
    input_position: int
    stack: Tuple[str, ...]  # top first


@dataclass(frozen=True)
class Pda:
    states: FrozenSet[str]
    input_alphabet: FrozenSet[str]
    stack_alphabet: FrozenSet[str]
    delta: Mapping[Key, FrozenSet[Target]]
    initial: str
    bottom: str
    finals: FrozenSet[str]
    _compiled: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        object.__setattr__(self, "stack_alphabet", frozenset(self.stack_alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self,
            "delta",
            {k: frozenset((p, tuple(push)) for p, push in v) for k, v in self.delta.items() if v},
        )
        self._validate()

    def _validate(self):
        if self.initial not in self.states:
            raise DomainError(f"initial state {self.initial!r} undeclared")
        if self.bottom not in self.stack_alphabet:
            raise DomainError(f"bottom symbol {self.bottom!r} undeclared")
        if not self.finals <= self.states:
            raise DomainError(f"final states {sorted(self.finals - self.states)} undeclared")
        for (q, a, z), targets in self.delta.items():
            if q not in self.states or z not in self.stack_alphabet:
                raise DomainError(f"transition key {(q, a, z)!r} uses undeclared names")
            if a is not EPS and a not in self.input_alphabet:
                raise DomainError(f"transition key {(q, a, z)!r} reads undeclared input")
            for p, push in targets:
                if p not in self.states or not set(push) <= self.stack_alphabet:
                    raise DomainError(f"transition {(q, a, z)!r} -> {(p, push)!r} uses undeclared names")

    def __hash__(self):
        return hash((self.initial, self.bottom, self.states, self.finals, len(self.delta)))

    def transitions(self):
        """Yield ``(q, a, Z, p, push)`` in a canonical order."""
        for (q, a, z) in sorted(self.delta, key=_key_order):
            for p, push in sorted(self.delta[(q, a, z)]):
                yield q, a, z, p, push

    @property
    def is_normalized(self) -> bool:
        return all(len(push) <= 2 for *_, push in self.transitions())

    def compiled(self):
        """Integer-coded transition table for the search kernel (cached)."""
        if "table" not in self._compiled:
            states = sorted(self.states)
            stack = sorted(self.stack_alphabet)
            inputs = sorted(self.input_alphabet)
            if len(stack) > 255:
                raise DomainError("search kernel supports at most 255 stack symbols")
            sid = {s: i for i, s in enumerate(states)}
            zid = {z: i for i, z in enumerate(stack)}
            aid = {a: i for i, a in enumerate(inputs)}
            table: Dict[tuple, tuple] = {}
            for (q, a, z), targets in self.delta.items():
                key = (sid[q], -1 if a is EPS else aid[a], zid[z])
                table[key] = tuple(
                    (sid[p], bytes(zid[y] for y in push)) for p, push in sorted(targets)
                )
            self._compiled.update(
                table=table,
                states=states,
                stack=stack,
                sid=sid,
                zid=zid,
                aid=aid,
                finals=frozenset(sid[f] for f in self.finals),
            )
        return self._compiled


def _key_order(key):
    q, a, z = key
    return (q, "" if a is EPS else "\x01" + a, z)


def make_pda(transitions: Iterable[tuple], initial: str, bottom: str, finals: Iterable[str],
             states: Iterable[str] = (), input_alphabet: Iterable[str] = (),
             stack_alphabet: Iterable[str] = ()) -> Pda:
    """Build a :class:`Pda` from ``(q, a_or_None, Z, p, push)`` tuples.

    States and alphabets are inferred from the transitions and extended with
    the explicit arguments.
    """
    delta: Dict[Key, set] = {}
    st = set(states) | {initial} | set(finals)
    ins = set(input_alphabet)
    stk = set(stack_alphabet) | {bottom}
    for q, a, z, p, push in transitions:
        push = tuple(push)
        delta.setdefault((q, a, z), set()).add((p, push))
        st |= {q, p}
        stk |= {z, *push}
        if a is not EPS:
            ins.add(a)
    return Pda(st, ins, stk, delta, initial, bottom, frozenset(finals))


def step(pda: Pda, c: Configuration, word: Sequence[str]) -> set:
    """All configurations reachable from ``c`` in one move."""
    if not c.stack:
        return set()
    top, rest = c.stack[0], c.stack[1:]
    out = set()
    for p, push in pda.delta.get((c.state, EPS, top), ()):
        out.add(Configuration(p, c.input_position, push + rest))
    if c.input_position < len(word):
        a = word[c.input_position]
        for p, push in pda.delta.get((c.state, a, top), ()):
            out.add(Configuration(p, c.input_position + 1, push + rest))
    return out


@dataclass(frozen=True)
class SearchResult:
    accepted: bool
    certificate: Optional[Tuple[Configuration, ...]] = None

    def __bool__(self):
        return self.accepted


DEFAULT_MAX_DEPTH = 512
DEFAULT_MAX_VISITED = 2_000_000


def accepts_search(pda: Pda, word: Sequence[str], max_stack_depth: int = DEFAULT_MAX_DEPTH,
                   max_visited: int = DEFAULT_MAX_VISITED, certificate: bool = False,
                   seed: Optional[int] = None) -> SearchResult:
    """Decide membership by memoized search over exact configurations.

    Raises :class:`Inconclusive` when a limit cut the search short and no
    accepting run was found.  ``seed`` shuffles the successor order.
    """
    comp = pda.compiled()
    aid = comp["aid"]
    if any(a not in aid for a in word):
        # a letter outside the alphabet can never be read
        return SearchResult(False)
    coded = tuple(aid[a] for a in word)
    rng = random.Random(seed) if seed is not None else None
    status, path = _kernels.search(
        comp["table"], comp["finals"], comp["sid"][pda.initial], comp["zid"][pda.bottom],
        coded, max_stack_depth, max_visited, rng, certificate,
    )
    if status == _kernels.INCONCLUSIVE:
        raise Inconclusive(
            f"search limits reached (max_stack_depth={max_stack_depth}, max_visited={max_visited})"
        )
    if status == _kernels.REJECT:
        return SearchResult(False)
    cert = None
    if certificate:
        states, stack = comp["states"], comp["stack"]
        cert = tuple(Configuration(states[q], pos, tuple(stack[z] for z in st)) for q, pos, st in path)
    return SearchResult(True, cert)


def accepts(pda: Pda, word: Sequence[str], **limits) -> bool:
    return accepts_search(pda, word, **limits).accepted


def replay_certificate(pda: Pda, word: Sequence[str], cert: Sequence[Configuration]) -> bool:
    """Check that ``cert`` is an accepting run of ``pda`` on ``word``."""
    if not cert:
        return False
    first = cert[0]
    if first != Configuration(pda.initial, 0, (pda.bottom,)):
        return False
    for a, b in zip(cert, cert[1:]):
        if b not in step(pda, a, word):
            return False
    last = cert[-1]
    return last.input_position == len(word) and last.state in pda.finals


def rename_states(pda: Pda, prefix: str) -> Pda:
    tr = [(prefix + q, a, z, prefix + p, push) for q, a, z, p, push in pda.transitions()]
    return make_pda(
        tr, prefix + pda.initial, pda.bottom, {prefix + f for f in pda.finals},
        states={prefix + q for q in pda.states}, input_alphabet=pda.input_alphabet,
        stack_alphabet=pda.stack_alphabet,
    )


def union(p1: Pda, p2: Pda, initial: str = "init") -> Pda:
    """PDA for ``L(p1) | L(p2)``: a fresh initial state branching by epsilon moves.

    States are prefixed ``1.`` and ``2.``; both machines must share the
    bottom symbol so the branch moves leave the stack unchanged.
    """
    if p1.input_alphabet != p2.input_alphabet:
        raise DomainError("union needs identical input alphabets")
    if p1.bottom != p2.bottom:
        raise DomainError("union needs a shared bottom symbol")
    a, b = rename_states(p1, "1."), rename_states(p2, "2.")
    z = p1.bottom
    tr = list(a.transitions()) + list(b.transitions())
    tr += [(initial, EPS, z, a.initial, (z,)), (initial, EPS, z, b.initial, (z,))]
    return make_pda(
        tr, initial, z, a.finals | b.finals, states=a.states | b.states | {initial},
        input_alphabet=p1.input_alphabet, stack_alphabet=p1.stack_alphabet | p2.stack_alphabet,
    )


@dataclass(frozen=True)
class Dfa:
    states: FrozenSet[str]
    alphabet: FrozenSet[str]
    delta: Mapping[Tuple[str, str], str]  # partial; missing entries reject
    initial: str
    finals: FrozenSet[str]

    def accepts(self, word: Sequence[str]) -> bool:
        q = self.initial
        for a in word:
            q = self.delta.get((q, a))
            if q is None:
                return False
        return q in self.finals


def from_dfa(dfa: Dfa, bottom: str = "Z0") -> Pda:
    tr = [(q, a, bottom, p, (bottom,)) for (q, a), p in dfa.delta.items()]
    return make_pda(tr, dfa.initial, bottom, dfa.finals, states=dfa.states,
                    input_alphabet=dfa.alphabet, stack_alphabet={bottom})


ZERO_STAR_ONE_DFA = Dfa(
    frozenset({"a0", "a1"}), frozenset("01"), {("a0", "0"): "a0", ("a0", "1"): "a1"},
    "a0", frozenset({"a1"}),
)


def normalize(pda: Pda) -> Pda:
    """Split pushes longer than two symbols through fresh intermediate states."""
    if pda.is_normalized:
        return pda
    tr = []
    fresh = 0
    states = set(pda.states)
    for q, a, z, p, push in pda.transitions():
        if len(push) <= 2:
            tr.append((q, a, z, p, push))
            continue
        # replace Z by the last two symbols, then push the rest one at a time
        prev = None
        cur_from, cur_in, cur_top = q, a, z
        chunks = [push[-2:]] + [(y,) for y in reversed(push[:-2])]
        for i, chunk in enumerate(chunks):
            last = i == len(chunks) - 1
            nxt = p if last else f"~n{fresh}"
            if not last:
                fresh += 1
                while nxt in states:
                    nxt = f"~n{fresh}"
                    fresh += 1
                states.add(nxt)
            if i == 0:
                tr.append((cur_from, cur_in, cur_top, nxt, chunk))
            else:
                y = prev
                tr.append((cur_from, EPS, y, nxt, chunk + (y,)))
            prev = chunk[0]
            cur_from = nxt
    return make_pda(tr, pda.initial, pda.bottom, pda.finals, states=states,
                    input_alphabet=pda.input_alphabet, stack_alphabet=pda.stack_alphabet)
