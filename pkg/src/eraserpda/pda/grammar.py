"""Context-free grammars: the triple construction from a PDA, CNF and CYK.

These give a membership decider that shares nothing with the configuration
search, so the two can be checked against each other.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Hashable, Iterable, Sequence, Tuple

from ..words import DomainError
from .machine import EPS, Pda, make_pda

Production = Tuple[Hashable, Tuple[Hashable, ...]]

START = ("start",)


@dataclass(frozen=True)
class Cfg:
    nonterminals: FrozenSet[Hashable]
    terminals: FrozenSet[Hashable]
    productions: FrozenSet[Production]
    start: Hashable

    @property
    def is_cnf(self) -> bool:
        for lhs, rhs in self.productions:
            if len(rhs) == 2 and all(x in self.nonterminals and x != self.start for x in rhs):
                continue
            if len(rhs) == 1 and rhs[0] in self.terminals:
                continue
            if not rhs and lhs == self.start:
                continue
            return False
        return True

    def rules_for(self):
        by_lhs = defaultdict(list)
        for lhs, rhs in self.productions:
            by_lhs[lhs].append(rhs)
        return by_lhs


def make_cfg(productions: Iterable[Production], start: Hashable, terminals: Iterable[Hashable]) -> Cfg:
    prods = frozenset((lhs, tuple(rhs)) for lhs, rhs in productions)
    terms = frozenset(terminals)
    nts = {start} | {lhs for lhs, _ in prods} | {x for _, rhs in prods for x in rhs if x not in terms}
    return Cfg(frozenset(nts), terms, prods, start)


BOTTOM, BEGIN, DRAIN = "#bottom", "#start", "#drain"


def to_final_state_free(pda: Pda) -> Pda:
    """Equivalent PDA that accepts by emptying its stack.

    The result marks only its drain state final; reaching it after the
    whole input is equivalent to being able to empty the stack, so the
    language is the same under either acceptance mode.
    """
    if not pda.is_normalized:
        raise DomainError("to_final_state_free needs a normalized PDA")
    clash = {BOTTOM, BEGIN, DRAIN} & (pda.states | pda.stack_alphabet)
    if clash:
        raise DomainError(f"reserved names in use: {sorted(clash)}")
    gamma = pda.stack_alphabet | {BOTTOM}
    tr = list(pda.transitions())
    tr.append((BEGIN, EPS, BOTTOM, pda.initial, (pda.bottom, BOTTOM)))
    for y in gamma:
        for f in pda.finals:
            tr.append((f, EPS, y, DRAIN, ()))
        tr.append((DRAIN, EPS, y, DRAIN, ()))
    return make_pda(tr, BEGIN, BOTTOM, {DRAIN}, states=pda.states | {BEGIN, DRAIN},
                    input_alphabet=pda.input_alphabet, stack_alphabet=gamma)


def pop_summaries(pda: Pda) -> set:
    """Triples ``(q, Z, p)`` such that some run from ``q`` with ``Z`` on top pops it and ends in ``p``."""
    found = set()
    # waiting[(r, Y)] -> list of continuations needing a summary starting there
    by_start = defaultdict(set)
    waiting = defaultdict(list)
    work = []

    def add(t):
        if t not in found:
            found.add(t)
            by_start[(t[0], t[1])].add(t[2])
            work.append(t)

    for q, a, z, p, push in pda.transitions():
        if not push:
            add((q, z, p))
        elif len(push) == 1:
            waiting[(p, push[0])].append(("one", q, z))
        else:
            waiting[(p, push[0])].append(("two", q, z, push[1]))
    while work:
        r, y, s = work.pop()
        for cont in list(waiting[(r, y)]):
            if cont[0] == "two":
                _, q, z, y2 = cont
                for p in list(by_start[(s, y2)]):
                    add((q, z, p))
                waiting[(s, y2)].append(("one", q, z))
            else:
                add((cont[1], cont[2], s))
    return found


def to_cfg(pda: Pda) -> Cfg:
    """Triple construction ``[q Z p]`` for the language of ``pda`` (final-state acceptance).

    Only triples that can actually pop are generated, which keeps the
    grammar small without changing its language.
    """
    es = to_final_state_free(pda)
    summ = pop_summaries(es)
    by_start = defaultdict(set)
    for q, z, p in summ:
        by_start[(q, z)].add(p)
    prods = set()
    for q, a, z, r, push in es.transitions():
        lead = () if a is EPS else (a,)
        if not push:
            prods.add(((q, z, r), lead))
        elif len(push) == 1:
            for p in by_start[(r, push[0])]:
                prods.add(((q, z, p), lead + ((r, push[0], p),)))
        else:
            y1, y2 = push
            for s in by_start[(r, y1)]:
                for p in by_start[(s, y2)]:
                    prods.add(((q, z, p), lead + ((r, y1, s), (s, y2, p))))
    for p in by_start[(es.initial, es.bottom)]:
        prods.add((START, ((es.initial, es.bottom, p),)))
    return make_cfg(prods, START, pda.input_alphabet)


def _nullable(prods) -> set:
    null = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in prods:
            if lhs not in null and all(x in null for x in rhs):
                null.add(lhs)
                changed = True
    return null


def remove_useless(cfg: Cfg) -> Cfg:
    gen = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in cfg.productions:
            if lhs not in gen and all(x in cfg.terminals or x in gen for x in rhs):
                gen.add(lhs)
                changed = True
    prods = [(l, r) for l, r in cfg.productions
             if l in gen and all(x in cfg.terminals or x in gen for x in r)]
    rules = defaultdict(list)
    for l, r in prods:
        rules[l].append(r)
    reach = {cfg.start}
    todo = [cfg.start]
    while todo:
        a = todo.pop()
        for r in rules[a]:
            for x in r:
                if x not in cfg.terminals and x not in reach:
                    reach.add(x)
                    todo.append(x)
    kept = frozenset((l, r) for l, r in prods if l in reach)
    nts = frozenset({cfg.start} | {l for l, _ in kept})
    return Cfg(nts, cfg.terminals, kept, cfg.start)


def cnf(cfg: Cfg) -> Cfg:
    """Chomsky normal form; the empty word survives only as ``start -> ()``."""
    s0 = ("S0", cfg.start)
    prods = {(s0, (cfg.start,))} | set(cfg.productions)

    # terminals inside longer right-hand sides
    step = set()
    for lhs, rhs in prods:
        if len(rhs) >= 2:
            rhs = tuple(("T", x) if x in cfg.terminals else x for x in rhs)
        step.add((lhs, rhs))
    for t in cfg.terminals:
        step.add((("T", t), (t,)))
    prods = step

    # binarize
    step = set()
    for lhs, rhs in prods:
        cur = lhs
        while len(rhs) > 2:
            nxt = ("bin", lhs, rhs[1:])
            step.add((cur, (rhs[0], nxt)))
            cur, rhs = nxt, rhs[1:]
        step.add((cur, rhs))
    prods = step

    # epsilon rules
    null = _nullable(prods)
    step = set()
    for lhs, rhs in prods:
        options = [((x,), ()) if x in null else ((x,),) for x in rhs]
        for choice in product(*options):
            new = tuple(y for part in choice for y in part)
            if new or lhs == s0:
                step.add((lhs, new))
    prods = step

    # unit rules
    nts = {l for l, _ in prods}
    units = defaultdict(set)
    for lhs, rhs in prods:
        if len(rhs) == 1 and rhs[0] in nts:
            units[lhs].add(rhs[0])
    closure = {}
    for a in nts:
        seen = {a}
        todo = [a]
        while todo:
            b = todo.pop()
            for c in units[b]:
                if c not in seen:
                    seen.add(c)
                    todo.append(c)
        closure[a] = seen
    nonunit = defaultdict(set)
    for lhs, rhs in prods:
        if not (len(rhs) == 1 and rhs[0] in nts):
            nonunit[lhs].add(rhs)
    step = set()
    for a in nts:
        for b in closure[a]:
            for rhs in nonunit[b]:
                if rhs or a == s0:
                    step.add((a, rhs))
    out = remove_useless(make_cfg(step, s0, cfg.terminals))
    return out


class _CykTables:
    def __init__(self, cfg: Cfg):
        if not cfg.is_cnf:
            raise DomainError("CYK needs a grammar in Chomsky normal form")
        self.cfg = cfg
        self.unit = defaultdict(set)
        self.binary = defaultdict(set)
        self.left = defaultdict(set)
        for lhs, rhs in cfg.productions:
            if len(rhs) == 1:
                self.unit[rhs[0]].add(lhs)
            elif len(rhs) == 2:
                self.binary[rhs].add(lhs)
                self.left[rhs[0]].add(rhs[1])
        self.accepts_empty = (cfg.start, ()) in cfg.productions

    def combine(self, left: set, right: set) -> set:
        out = set()
        binary = self.binary
        for b in left:
            cands = self.left.get(b)
            if not cands:
                continue
            for c in cands & right:
                out |= binary[(b, c)]
        return out

    def column(self, columns: list, a) -> dict:
        """Cells ``[i, j)`` for the new end ``j = len(columns) + 1``."""
        j = len(columns) + 1
        col = {j - 1: set(self.unit.get(a, ()))}
        for i in range(j - 2, -1, -1):
            cell = set()
            for k in range(i + 1, j):
                left = columns[k - 1].get(i)
                if not left:
                    continue
                right = col.get(k)
                if not right:
                    continue
                cell |= self.combine(left, right)
            col[i] = cell
        return col


def cyk_member(cfg: Cfg, word: Sequence) -> bool:
    tables = _CykTables(cfg)
    if not len(word):
        return tables.accepts_empty
    columns = []
    for a in word:
        columns.append(tables.column(columns, a))
    return cfg.start in columns[-1][0]


def cyk_language(cfg: Cfg, alphabet: Sequence, max_len: int) -> set:
    """All words of length <= ``max_len`` over ``alphabet`` in the language, as tuples.

    Shares table columns between words with a common prefix.
    """
    tables = _CykTables(cfg)
    found = set()
    if tables.accepts_empty:
        found.add(())
    columns: list = []
    letters: list = []

    def walk():
        if len(columns) == max_len:
            return
        for a in alphabet:
            columns.append(tables.column(columns, a))
            letters.append(a)
            if cfg.start in columns[-1][0]:
                found.add(tuple(letters))
            walk()
            columns.pop()
            letters.pop()

    walk()
    return found
