import random

import pytest

from eraserpda.pda import (
    EPS,
    ZERO_STAR_ONE_DFA,
    Configuration,
    Inconclusive,
    Pda,
    accepts,
    accepts_search,
    cnf,
    cyk_language,
    cyk_member,
    dumps,
    from_dfa,
    loads,
    make_cfg,
    make_pda,
    normalize,
    replay_certificate,
    step,
    to_cfg,
    union,
)
from eraserpda.pda.textformat import PdaFormatError
from eraserpda.words import DomainError

from conftest import all_words, balanced


def C(q, pos, *stack):
    return Configuration(q, pos, tuple(stack))


def test_step_reads_and_moves(bracket_pda):
    assert step(bracket_pda, C("q", 0, "Z0"), "()") == {C("q", 1, "X", "Z0"), C("f", 0, "Z0")}
    assert step(bracket_pda, C("q", 1, "X", "Z0"), "()") == {C("q", 2, "Z0")}
    assert step(bracket_pda, C("q", 2, "Z0"), "()") == {C("f", 2, "Z0")}


def test_step_on_empty_stack_is_stuck(bracket_pda):
    assert step(bracket_pda, C("q", 0), "(") == set()


def test_bracket_accepts_with_certificate(bracket_pda):
    res = accepts_search(bracket_pda, "(())", certificate=True)
    assert res.accepted
    assert res.certificate[0] == C("q", 0, "Z0")
    assert res.certificate[-1] == C("f", 4, "Z0")
    assert replay_certificate(bracket_pda, "(())", res.certificate)


def test_replay_rejects_tampered_certificate(bracket_pda):
    cert = list(accepts_search(bracket_pda, "(())", certificate=True).certificate)
    cert[2] = C("q", 2, "X", "X", "X", "Z0")
    assert not replay_certificate(bracket_pda, "(())", cert)
    assert not replay_certificate(bracket_pda, "(())", [])
    assert not replay_certificate(bracket_pda, "(()", cert)


@pytest.mark.parametrize("word, expected", [("(()", False), (")(", False), ("", True), ("()()", True)])
def test_bracket_verdicts(bracket_pda, word, expected):
    assert accepts(bracket_pda, word) is expected


def test_foreign_symbol_rejects(bracket_pda):
    assert not accepts(bracket_pda, "(x)")


def test_empty_word_with_final_initial_state():
    p = make_pda([], "q", "Z0", {"q"}, input_alphabet="a")
    assert accepts(p, "")
    assert not accepts(p, "a")


def test_search_agrees_with_balance(bracket_pda, anbn_pda):
    for w in all_words("()", 10):
        assert accepts(bracket_pda, w) == balanced(w), w
    for w in all_words("ab", 9):
        n = len(w) // 2
        assert accepts(anbn_pda, w) == (n > 0 and w == "a" * n + "b" * n), w


def test_shuffled_search_keeps_verdict(anbn_pda):
    for seed in range(10):
        for w in ["aabb", "aab", "", "ab", "abab"]:
            assert accepts_search(anbn_pda, w, seed=seed).accepted == accepts(anbn_pda, w)


def test_epsilon_push_loop_is_inconclusive():
    p = make_pda([("q", EPS, "Z0", "q", ("X", "Z0")), ("q", EPS, "X", "q", ("X", "X"))],
                 "q", "Z0", {"f"}, input_alphabet="a")
    with pytest.raises(Inconclusive):
        accepts_search(p, "a", max_stack_depth=50)


def test_epsilon_cycle_without_growth_terminates():
    p = make_pda([("q", EPS, "Z0", "r", ("Z0",)), ("r", EPS, "Z0", "q", ("Z0",))],
                 "q", "Z0", {"f"}, input_alphabet="a")
    assert not accepts(p, "")


def test_visit_budget_is_inconclusive(bracket_pda):
    with pytest.raises(Inconclusive):
        accepts_search(bracket_pda, "(" * 30 + ")" * 29, max_visited=5)


def test_validation_rejects_undeclared_names():
    with pytest.raises(DomainError):
        Pda({"q"}, {"a"}, {"Z0"}, {("q", "a", "Y"): {("q", ())}}, "q", "Z0", set())
    with pytest.raises(DomainError):
        Pda({"q"}, {"a"}, {"Z0"}, {}, "r", "Z0", set())


def test_zero_star_one_dfa():
    p = from_dfa(ZERO_STAR_ONE_DFA)
    for w in all_words("01", 7):
        expected = w.endswith("1") and set(w[:-1]) <= {"0"}
        assert ZERO_STAR_ONE_DFA.accepts(w) == expected
        assert accepts(p, w) == expected


def test_union_language(bracket_pda):
    rev = make_pda([
        ("q", ")", "Z0", "q", ("X", "Z0")),
        ("q", ")", "X", "q", ("X", "X")),
        ("q", "(", "X", "q", ()),
        ("q", EPS, "Z0", "f", ("Z0",)),
    ], "q", "Z0", {"f"})
    u = union(bracket_pda, rev)
    assert u.initial == "init"
    assert {"1.q", "2.q"} <= u.states
    for w in all_words("()", 8):
        assert accepts(u, w) == (balanced(w) or balanced(w.translate(str.maketrans("()", ")(")))), w


def test_union_neutral_and_idempotent(bracket_pda):
    empty = make_pda([], "z", "Z0", set(), input_alphabet="()")
    for w in all_words("()", 8):
        b = balanced(w)
        assert accepts(union(bracket_pda, empty), w) == b
        assert accepts(union(bracket_pda, bracket_pda), w) == b


def test_union_needs_shared_alphabet(bracket_pda):
    with pytest.raises(DomainError):
        union(bracket_pda, from_dfa(ZERO_STAR_ONE_DFA))


def test_normalize_splits_long_pushes():
    p = make_pda([("q", "a", "Z0", "q", ("X", "Y", "W", "Z0")), ("q", "b", "X", "r", ()),
                  ("r", EPS, "Y", "r", ()), ("r", EPS, "W", "f", ())], "q", "Z0", {"f"})
    n = normalize(p)
    assert not p.is_normalized and n.is_normalized
    for w in all_words("ab", 5):
        assert accepts(n, w) == accepts(p, w)
    assert accepts(n, "ab")
    assert normalize(n) is n


def test_textformat_roundtrip(bracket_pda, anbn_pda):
    for p in (bracket_pda, anbn_pda, normalize(from_dfa(ZERO_STAR_ONE_DFA))):
        text = dumps(p)
        q = loads(text)
        assert q == p
        assert dumps(q) == text


def test_textformat_layout(bracket_pda):
    text = dumps(bracket_pda)
    assert text.splitlines()[:6] == [
        "states: f q", "input: ( )", "stack: X Z0", "initial: q", "bottom: Z0", "finals: f",
    ]
    assert "q , eps , Z0 -> f , Z0" in text
    assert "q , ) , X -> q , eps" in text


@pytest.mark.parametrize("text", [
    "states: q\ninput: a\nstack: Z0\ninitial: q\nbottom: Z0\n",
    "states: q\ninput: a\nstack: Z0\ninitial: q\nbottom: Z0\nfinals:\nq , a -> q , eps\n",
    "states: q\ninput: a\nstack: Z0\ninitial: q\nbottom: Z0\nfinals:\nq , a , Z0 -> r , eps\n",
    "states: q\ninput: a\nstack: Z0\ninitial: q\nbottom: Z0\nfinals:\nnoise\n",
])
def test_textformat_errors(text):
    with pytest.raises((PdaFormatError, DomainError)):
        loads(text)


# --- grammars -------------------------------------------------------------


def test_cyk_on_hand_grammar():
    g = make_cfg([("S", ("S", "S")), ("S", ("(", ")")), ("S", ("(", "S", ")"))], "S", "()")
    c = cnf(g)
    assert c.is_cnf
    assert cyk_member(c, "()()")
    assert cyk_member(c, "(())")
    assert not cyk_member(c, "(")
    assert not cyk_member(c, "")


def test_cnf_keeps_nullable_start():
    g = make_cfg([("S", ("(", "S", ")", "S")), ("S", ())], "S", "()")
    c = cnf(g)
    assert c.is_cnf
    assert cyk_member(c, "")
    found = cyk_language(c, "()", 8)
    assert found == {tuple(w) for w in all_words("()", 8) if balanced(w)}


def test_cyk_requires_cnf():
    with pytest.raises(DomainError):
        cyk_member(make_cfg([("S", ("a", "a", "a"))], "S", "a"), "aaa")


def test_to_cfg_of_empty_language():
    p = make_pda([], "q", "Z0", set(), input_alphabet="ab")
    assert cyk_language(cnf(to_cfg(p)), "ab", 4) == set()


@pytest.mark.parametrize("fixture, alphabet, n", [("bracket_pda", "()", 10), ("anbn_pda", "ab", 10)])
def test_triple_construction_agrees_with_search(request, fixture, alphabet, n):
    p = request.getfixturevalue(fixture)
    c = cnf(to_cfg(p))
    found = cyk_language(c, alphabet, n)
    for w in all_words(alphabet, n):
        assert (tuple(w) in found) == accepts(p, w), w


def test_triple_construction_of_dfa():
    p = from_dfa(ZERO_STAR_ONE_DFA)
    found = cyk_language(cnf(to_cfg(p)), "01", 7)
    assert found == {tuple(w) for w in all_words("01", 7) if ZERO_STAR_ONE_DFA.accepts(w)}


def test_random_pdas_all_deciders_agree():
    rng = random.Random(11)
    for _ in range(30):
        states, stack = ["q0", "q1", "q2"], ["Z0", "X"]
        tr = []
        for _ in range(rng.randint(3, 8)):
            push = tuple(rng.choice(stack) for _ in range(rng.randint(0, 2)))
            tr.append((rng.choice(states), rng.choice(["a", "b", EPS]), rng.choice(stack),
                       rng.choice(states), push))
        p = make_pda(tr, "q0", "Z0", {rng.choice(states)}, states=states,
                     input_alphabet="ab", stack_alphabet=stack)
        found = cyk_language(cnf(to_cfg(p)), "ab", 6)
        for w in all_words("ab", 6):
            try:
                verdict = accepts(p, w, max_stack_depth=64, max_visited=200_000)
            except Inconclusive:
                continue
            assert (tuple(w) in found) == verdict, (tr, w)
