"""The eraser-coded pushdown automaton ``B = B_main | B_wrong``.

``B_main`` reads surface words in which every ``A...Z`` segment codes an
eraser.  Its control state is a phase paired with the state of the 0*1
automaton; the automaton state is frozen while the machine is inside a
segment that will be erased.  Stack symbols:

* ``P0``/``P1``: a letter that will be erased later;
* ``gamma E^i nu``: an eraser code of index ``i`` that will be erased later;
* ``L2 S^k L1``: guard above a pending item, ``k`` being the largest eraser
  index used since that item was pushed.

A code ``A B^j C^j D^j E^j Z`` used as an eraser spends its blocks as
follows: the B block pops one ``S`` per ``B`` (so ``j >= k``), the C block
pops one ``E`` per ``C`` of a pending eraser code and at least one ``E``
must be left (so ``i > j``), and the D and E blocks rewrite the guard of the
item now on top to ``S^max(j, l)``.  A code guessed to be erased pushes one
``E`` per ``B``.  Since ``B_main`` may assume each block has the same
length, it never compares blocks with each other; ``B_wrong`` accepts every
word where that assumption fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence

from .pda.machine import EPS, ZERO_STAR_ONE_DFA, Configuration, Pda, make_pda, replay_certificate, union
from .words import SURFACE_ALPHABET

Z0 = "Z0"
GAMMA, E, NU = "gamma", "E", "nu"
L2, S, L1 = "L2", "S", "L1"
PENDING_LETTER = {"0": "P0", "1": "P1"}
PENDING = ("P0", "P1", GAMMA)
X = "X"

MAIN_STACK = (Z0, "P0", "P1", GAMMA, E, NU, L2, S, L1)
SEGMENT_TOPS = PENDING + (L2,)


def _st(phase: str, a: str) -> str:
    return f"{phase}.{a}"


@lru_cache(maxsize=None)
def build_main() -> Pda:
    dfa = ZERO_STAR_ONE_DFA
    tr = []

    def add(q, a, z, p, push):
        tr.append((q, a, z, p, tuple(push)))

    for a in sorted(dfa.states):
        top, seg = _st("TOP", a), _st("SEG", a)
        # simulate the 0*1 automaton on surviving letters
        for c in "01":
            nxt = dfa.delta.get((a, c))
            if nxt is not None:
                add(top, c, Z0, _st("TOP", nxt), [Z0])
        # open a segment that will be erased: letter or code pushed as pending
        for c in "01":
            add(top, c, Z0, seg, [PENDING_LETTER[c], Z0])
        add(top, "A", Z0, _st("PB", a), [NU, Z0])

        # inside a segment: every letter is pending, every code is pushed or used
        for y in SEGMENT_TOPS:
            for c in "01":
                add(seg, c, y, seg, [PENDING_LETTER[c], y])
            add(seg, "A", y, _st("PB", a), [NU, y])
        add(seg, "A", L2, _st("UBG", a), [])
        for y in PENDING:
            add(seg, "A", y, _st("UBN", a), [y])

        # push gamma E^j nu for a code that will be erased, one E per B
        add(_st("PB", a), "B", NU, _st("PB1", a), [E, NU])
        add(_st("PB1", a), "B", E, _st("PB1", a), [E, E])
        add(_st("PB1", a), "C", E, _st("PC1", a), [E])
        add(_st("PC1", a), "C", E, _st("PC1", a), [E])
        add(_st("PC1", a), "D", E, _st("PD1", a), [E])
        add(_st("PD1", a), "D", E, _st("PD1", a), [E])
        add(_st("PD1", a), "E", E, _st("PE1", a), [E])
        add(_st("PE1", a), "E", E, _st("PE1", a), [E])
        add(_st("PE1", a), "Z", E, seg, [GAMMA, E])

        # used eraser, guard on top: B block pops S^k, then the guard goes
        add(_st("UBG", a), "B", S, _st("UBG", a), [])
        add(_st("UBG", a), "B", L1, _st("UBG", a), [L1])
        add(_st("UBG", a), EPS, L1, _st("UBN", a), [])
        for y in PENDING:
            add(_st("UBN", a), "B", y, _st("UBN", a), [y])
        # pop the erased item
        for c in "01":
            add(_st("UBN", a), EPS, PENDING_LETTER[c], _st("UCL", a), [])
        add(_st("UBN", a), EPS, GAMMA, _st("UCE", a), [])
        for y in MAIN_STACK:
            add(_st("UCL", a), "C", y, _st("UCL", a), [y])
            add(_st("UCL", a), EPS, y, _st("POST", a), [y])
        # erased code gamma E^i nu: C block pops E^j, at least one E must remain
        add(_st("UCE", a), "C", E, _st("UCE", a), [])
        add(_st("UCE", a), EPS, E, _st("UDR", a), [])
        add(_st("UDR", a), EPS, E, _st("UDR", a), [])
        add(_st("UDR", a), EPS, NU, _st("POST", a), [])

        # what is below the popped item
        add(_st("POST", a), EPS, Z0, _st("T1D", a), [Z0])
        for y in PENDING:
            add(_st("POST", a), EPS, y, _st("GD", a), [L1, y])
        add(_st("POST", a), EPS, L2, _st("GD", a), [])
        # back at the bottom: finish reading the code, resume the automaton
        add(_st("T1D", a), "D", Z0, _st("T1D", a), [Z0])
        add(_st("T1D", a), "E", Z0, _st("T1E", a), [Z0])
        add(_st("T1E", a), "E", Z0, _st("T1E", a), [Z0])
        add(_st("T1E", a), "Z", Z0, top, [Z0])
        # guard S^l (l = 0 for a fresh guard): pop one S per D, push one per E
        add(_st("GD", a), "D", S, _st("GD", a), [])
        add(_st("GD", a), "D", L1, _st("GD", a), [L1])
        add(_st("GD", a), "E", S, _st("GE", a), [S, S])
        add(_st("GD", a), "E", L1, _st("GE", a), [S, L1])
        add(_st("GE", a), "E", S, _st("GE", a), [S, S])
        add(_st("GE", a), "Z", S, seg, [L2, S])

    return make_pda(
        tr, _st("TOP", dfa.initial), Z0, {_st("TOP", f) for f in dfa.finals},
        input_alphabet=SURFACE_ALPHABET, stack_alphabet=MAIN_STACK,
    )


@lru_cache(maxsize=None)
def build_wrong_detector() -> Pda:
    """Accepts exactly the surface words whose tokenization has a malformed span.

    The plain track follows the tokenizer and accepts on the first
    structural failure or at end of input inside a segment.  On each ``A``
    it may instead branch into one of three counting tracks that prove
    ``b != c``, ``c != d`` or ``d != e`` with the stack.
    """
    tr = []
    tops = (Z0, X)

    def add(q, a, z, p, push):
        tr.append((q, a, z, p, tuple(push)))

    def fail_on_others(q, allowed, stack_tops=tops):
        for ch in SURFACE_ALPHABET:
            if ch not in allowed:
                for z in stack_tops:
                    add(q, ch, z, "ACC", [z])

    for ch in SURFACE_ALPHABET:
        for z in tops:
            add("ACC", ch, z, "ACC", [z])

    add("OUT", "0", Z0, "OUT", [Z0])
    add("OUT", "1", Z0, "OUT", [Z0])
    for ch in "BCDEZ":
        add("OUT", ch, Z0, "ACC", [Z0])
    add("OUT", "A", Z0, "SA", [Z0])
    chain = [("SA", "B", "SB"), ("SB", "C", "SC"), ("SC", "D", "SD"), ("SD", "E", "SE")]
    for q, ch, p in chain:
        add(q, ch, Z0, p, [Z0])
        if q != "SA":
            add(q, q[1], Z0, q, [Z0])
    add("SE", "E", Z0, "SE", [Z0])
    add("SE", "Z", Z0, "OUT", [Z0])
    for q, ok in (("SA", "B"), ("SB", "BC"), ("SC", "CD"), ("SD", "DE"), ("SE", "EZ")):
        fail_on_others(q, ok, (Z0,))

    # counting tracks: push on one block, pop on the next, compare where it ends
    shape = "ABCDE"
    follow = {"A": "B", "B": "C", "C": "D", "D": "E", "E": "Z"}
    for first in range(1, 4):
        pushb, popb = shape[first], shape[first + 1]
        m = f"{pushb}{popb}"
        add("OUT", "A", Z0, f"{m}.A", [Z0])
        for s in shape[: first + 2]:
            q = f"{m}.{s}"
            stack_tops = (X,) if s == pushb else tops if s == popb else (Z0,)
            allowed = {follow[s]} | ({s} if s != "A" else set())
            fail_on_others(q, allowed, stack_tops)
            if s == popb:
                add(q, popb, X, q, [])
                add(q, popb, Z0, "ACC", [Z0])  # second block longer
                add(q, follow[s], X, "ACC", [X])  # first block longer
            elif s == pushb:
                add(q, pushb, X, q, [X, X])
                add(q, popb, X, f"{m}.{popb}", [])
            else:
                nxt = follow[s]
                if s != "A":
                    add(q, s, Z0, q, [Z0])
                add(q, nxt, Z0, f"{m}.{nxt}", [X, Z0] if nxt == pushb else [Z0])

    finals = {"ACC", "SA", "SB", "SC", "SD", "SE"}
    states = {q for q, *_ in tr} | {p for *_, p, _ in tr}
    finals |= {q for q in states if "." in q}
    return make_pda(tr, "OUT", Z0, finals, input_alphabet=SURFACE_ALPHABET,
                    stack_alphabet=(Z0, X))


@lru_cache(maxsize=None)
def build_B() -> Pda:
    return union(build_main(), build_wrong_detector())


@dataclass
class _Shadow:
    kind: str  # "letter" or "eraser"
    index: int = 0
    used: List[int] = field(default_factory=list)


@dataclass
class DisciplineReport:
    ok: bool
    violations: List[str]
    pops: int = 0
    guards: int = 0


def _code_index(e: str, pos: int) -> int:
    """Length of the B run after the ``A`` at 0-based ``pos``."""
    j = pos + 1
    while j < len(e) and e[j] == "B":
        j += 1
    return j - pos - 1


def check_certificate_discipline(e: str, cert: Sequence[Configuration],
                                 pda: Optional[Pda] = None) -> DisciplineReport:
    """Replay an accepting ``B_main`` run with an independent shadow of the pending items.

    Checks that every popped guard held ``k <= j``, that the guard counts
    equal the largest eraser index used since the guarded item was pushed,
    that an eraser code is only erased by a strictly lower index, that every
    eraser used since an item was pushed has index at most the one that
    erases it, and that the run ends with nothing pending.
    """
    pda = pda or build_main()
    bad: List[str] = []
    if not replay_certificate(pda, e, cert):
        return DisciplineReport(False, ["certificate does not replay"])
    shadow: List[_Shadow] = []
    current_j = None
    pops = guards = 0
    for a, b in zip(cert, cert[1:]):
        pa, pb = a.state.split(".")[0], b.state.split(".")[0]
        read = b.input_position > a.input_position
        at = a.input_position
        if read and e[at] in "01" and pa in ("TOP", "SEG") and pb == "SEG":
            shadow.append(_Shadow("letter"))
        elif read and e[at] == "A" and pb == "PB":
            shadow.append(_Shadow("eraser", _code_index(e, at)))
        elif read and e[at] == "A" and pb in ("UBG", "UBN"):
            current_j = _code_index(e, at)
            if pb == "UBG":
                guards += 1
                k = 0
                for sym in a.stack[1:]:
                    if sym != S:
                        break
                    k += 1
                item = shadow[-1] if shadow else None
                if k > current_j:
                    bad.append(f"guard S^{k} popped by !{current_j} at {at + 1}")
                if item is None or k != max(item.used, default=0):
                    bad.append(f"guard S^{k} disagrees with shadow at {at + 1}")
        elif pa == "UBN" and pb in ("UCL", "UCE"):
            pops += 1
            if not shadow or current_j is None:
                bad.append("pop with nothing pending")
                break
            item = shadow.pop()
            if item.kind == "eraser" and not item.index > current_j:
                bad.append(f"!{current_j} erased !{item.index}")
            if any(p > current_j for p in item.used):
                bad.append(f"!{current_j} popped an item after !{max(item.used)} was used")
            if (item.kind == "letter") != (pb == "UCL"):
                bad.append("pending item kind disagrees with shadow")
            if shadow:
                shadow[-1].used.extend(item.used + [current_j])
    if shadow:
        bad.append(f"{len(shadow)} items left pending")
    if cert[-1].stack != (Z0,):
        bad.append(f"final stack {cert[-1].stack}")
    return DisciplineReport(not bad, bad, pops, guards)
