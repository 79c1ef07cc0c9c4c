"""Command-line front end.

Exit codes: 0 for any verdict (reject included), 1 when engines disagree in
``compare``, 2 for usage errors, 3 when a search is inconclusive.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from functools import lru_cache

from . import calc, codec, oracle, wadge
from .construction import build_B, build_main, build_wrong_detector, check_certificate_discipline
from .pda import Inconclusive, accepts_search, cnf, cyk_member, to_cfg
from .pda import textformat
from .words import SURFACE_ALPHABET, DomainError, Eraser, WordSyntaxError, parse_symbolic, render_symbolic

EXIT_DISAGREE, EXIT_USAGE, EXIT_INCONCLUSIVE = 1, 2, 3

MACHINES = {"B": build_B, "main": build_main, "wrong": build_wrong_detector}


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, **record):
        if self.as_json:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


@lru_cache(maxsize=None)
def _cnf_of(name: str):
    return cnf(to_cfg(MACHINES[name]()))


def member_fn(engine: str, machine: str = "B"):
    if engine == "oracle":
        return oracle.oracle_member_B
    pda = MACHINES[machine]()
    if engine == "pda-search":
        return lambda e: accepts_search(pda, e).accepted
    if engine == "pda-cyk":
        grammar = _cnf_of(machine)
        return lambda e: cyk_member(grammar, e)
    raise DomainError(f"unknown engine {engine!r}")


def _outcome_text(out) -> str:
    if out.defined:
        return repr(render_symbolic(out.result))
    return f"UNDEFINED@{out.position}"


def cmd_erase(args, out: Output) -> int:
    w = parse_symbolic(args.word)
    if args.cascade is None:
        res = calc.erase_one(w, args.eraser)
        out.emit(_outcome_text(res), eraser=args.eraser, defined=res.defined,
                 result=render_symbolic(res.result) if res.defined else None,
                 undefined_at=None if res.defined else res.position)
        return 0
    trace = calc.erase_cascade(w, args.cascade)
    for k, stage in trace.stages:
        out.emit(f"stage {k}: {_outcome_text(stage)}", stage=k, defined=stage.defined,
                 result=render_symbolic(stage.result) if stage.defined else None,
                 undefined_at=None if stage.defined else stage.position)
    fin = trace.final
    out.emit(f"final: {_outcome_text(fin)}", final=True, defined=fin.defined,
             result=render_symbolic(fin.result) if fin.defined else None,
             undefined_at=None if fin.defined else fin.position)
    return 0


def cmd_encode(args, out: Output) -> int:
    e = codec.encode(parse_symbolic(args.word))
    out.emit(e, encoded=e)
    return 0


def cmd_decode(args, out: Output) -> int:
    w = render_symbolic(codec.decode(args.encoded))
    out.emit(w, word=w)
    return 0


def _token_text(t) -> str:
    if isinstance(t, codec.LetterToken):
        return str(t.bit)
    if isinstance(t, codec.EraserCode):
        return f"!{t.n}"
    return f"MALFORMED[{t.start}..{t.end}]"


def cmd_wrongcode(args, out: Output) -> int:
    tokens = codec.tokenize(args.encoded)
    verdict = any(isinstance(t, codec.Malformed) for t in tokens)
    out.emit(" ".join(_token_text(t) for t in tokens) + f"\n{'WRONG' if verdict else 'OK'}",
             tokens=[_token_text(t) for t in tokens], wrong_code=verdict)
    return 0


def cmd_member(args, out: Output) -> int:
    # a machine read from a file brings its own input alphabet
    e = args.encoded if args.pda else codec.check_surface(args.encoded)
    if args.pda:
        pda = textformat.load(args.pda)
        res = accepts_search(pda, e, certificate=args.certificate)
        verdict, cert = res.accepted, res.certificate
    elif args.engine == "pda-search":
        res = accepts_search(MACHINES[args.machine](), e, certificate=args.certificate)
        verdict, cert = res.accepted, res.certificate
    else:
        verdict, cert = member_fn(args.engine, args.machine)(e), None
    text = "ACCEPT" if verdict else "REJECT"
    record = {"verdict": text, "encoded": e}
    if cert is not None:
        record["certificate"] = [[c.state, c.input_position, list(c.stack)] for c in cert]
        text += "\n" + "\n".join(f"{c.state} {c.input_position} {' '.join(c.stack)}" for c in cert)
    out.emit(text, **record)
    return 0


def cmd_enumerate(args, out: Output) -> int:
    fn = member_fn(args.engine, args.machine)
    words = oracle.enumerate_members(fn, args.alphabet, args.max_len, budget=args.budget)
    for w in words:
        out.emit(w if w else "(empty)", word=w)
    return 0


def clean_words(max_len: int, max_index: int) -> list:
    """Every wrong-code-free surface word up to ``max_len`` with eraser indices <= ``max_index``."""
    tokens = ["0", "1"] + [codec.encode_symbol(Eraser(n)) for n in range(1, max_index + 1)]
    found = []

    def rec(cur):
        found.append(cur)
        for t in tokens:
            if len(cur) + len(t) <= max_len:
                rec(cur + t)

    rec("")
    return sorted(found, key=lambda w: (len(w), w))


def _expected(machine: str, e: str):
    """Oracle verdict for ``machine``; ``None`` where ``B_main`` is unconstrained."""
    if machine == "B":
        return oracle.oracle_member_B(e)
    if machine == "wrong":
        return codec.has_wrong_code(e)
    if codec.has_wrong_code(e):
        return None
    return oracle.is_Linf(codec.decode(e))


def cmd_compare(args, out: Output) -> int:
    from .sampling import structured_samples

    words = clean_words(args.max_len, args.enum_index)
    if args.random:
        words += structured_samples(random.Random(args.seed), args.random, args.max_index)
    pda = MACHINES[args.machine]()
    disagree = []
    inconclusive = []
    for e in words:
        expected = _expected(args.machine, e)
        try:
            got = accepts_search(pda, e).accepted
        except Inconclusive:
            inconclusive.append(e)
            continue
        if expected is not None and got != expected:
            disagree.append((e, expected, got))
    n = len(words)
    agreed = n - len(disagree) - len(inconclusive)
    pct = 100.0 * agreed / n if n else 100.0
    for e, exp, got in disagree:
        out.emit(f"DISAGREE {e or '(empty)'} oracle={exp} pda={got}", disagree=e, oracle=exp, pda=got)
    for e in inconclusive:
        out.emit(f"INCONCLUSIVE {e}", inconclusive=e)
    out.emit(f"agreement {pct:g}% ({n} words)", agreement=pct, words=n,
             disagreements=len(disagree), inconclusive=len(inconclusive))
    if disagree:
        return EXIT_DISAGREE
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return 0


def cmd_decompose(args, out: Output) -> int:
    e = codec.check_surface(args.encoded)
    splits = oracle.decompose_power(e, member_fn(args.engine, args.machine))
    if splits is None:
        out.emit("NONE", splits=None)
    else:
        out.emit(" ".join(map(str, splits)), splits=splits, trivial=splits == [0])
    return 0


def cmd_wadge(args, out: Output) -> int:
    script = parse_symbolic(args.script)
    if args.strategy == "shift":
        strat = wadge.shift_strategy()
    else:
        strat = wadge.copy_rename_strategy(lambda k: k + args.offset)
    play = wadge.run_play(script, strat, args.rounds)
    record = {"x_I": render_symbolic(play.x_I), "x_II": render_symbolic(play.x_II),
              "skips": play.skip_mask}
    text = play.dumps().rstrip("\n")
    if args.check:
        if args.strategy == "shift":
            ok = wadge.check_shift_invariant(play)
        else:
            ok = wadge.response_is_wrong_code_free(play)
        record["check"] = ok
        text += f"\ncheck: {'PASS' if ok else 'FAIL'}"
    out.emit(text, **record)
    return 0


def cmd_pda(args, out: Output) -> int:
    text = textformat.dumps(MACHINES[args.machine]())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.stream.write(text)
    return 0


def cmd_certify(args, out: Output) -> int:
    e = codec.check_surface(args.encoded)
    res = accepts_search(build_main(), e, certificate=True)
    if not res.accepted:
        out.emit("REJECT", verdict="REJECT")
        return 0
    rep = check_certificate_discipline(e, res.certificate)
    out.emit("PASS" if rep.ok else "FAIL\n" + "\n".join(rep.violations),
             verdict="ACCEPT", ok=rep.ok, violations=rep.violations, pops=rep.pops, guards=rep.guards)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eraserpda", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="JSON-lines output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("erase", help="evaluate erasers in a symbolic word")
    s.add_argument("--word", required=True)
    s.add_argument("--cascade", type=int, metavar="N")
    s.add_argument("--eraser", type=int, default=1, help="index for a single pass (default 1)")
    s.set_defaults(func=cmd_erase)

    s = sub.add_parser("encode")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode")
    s.add_argument("--encoded", required=True)
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("wrongcode")
    s.add_argument("--encoded", required=True)
    s.set_defaults(func=cmd_wrongcode)

    engines = ("oracle", "pda-search", "pda-cyk")
    s = sub.add_parser("member")
    s.add_argument("--engine", choices=engines, default="oracle")
    s.add_argument("--machine", choices=sorted(MACHINES), default="B")
    s.add_argument("--pda", metavar="FILE", help="search a PDA read from the text format")
    s.add_argument("--encoded", required=True)
    s.add_argument("--certificate", action="store_true")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("enumerate")
    s.add_argument("--engine", choices=engines, default="oracle")
    s.add_argument("--machine", choices=sorted(MACHINES), default="B")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--alphabet", default=SURFACE_ALPHABET)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("compare", help="oracle versus PDA search agreement report")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--enum-index", type=int, default=2,
                   help="largest eraser index in the exhaustive part (default 2)")
    s.add_argument("--random", type=int, default=0, metavar="K")
    s.add_argument("--max-index", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--machine", choices=sorted(MACHINES), default="B")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("decompose")
    s.add_argument("--encoded", required=True)
    s.add_argument("--engine", choices=engines, default="oracle")
    s.add_argument("--machine", choices=sorted(MACHINES), default="B")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("wadge")
    s.add_argument("--strategy", choices=("shift", "copy"), required=True)
    s.add_argument("--script", required=True)
    s.add_argument("--rounds", type=int, required=True)
    s.add_argument("--offset", type=int, default=1, help="copy strategy renames !n to !(n+offset)")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_wadge)

    s = sub.add_parser("pda", help="write a machine in the PDA text format")
    s.add_argument("--machine", choices=sorted(MACHINES), default="B")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_pda)

    s = sub.add_parser("certify", help="replay-check an accepting B_main certificate")
    s.add_argument("--encoded", required=True)
    s.set_defaults(func=cmd_certify)
    return p


def main(argv=None, stream=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json, stream)
    try:
        return args.func(args, out)
    except Inconclusive as exc:
        out.emit(f"INCONCLUSIVE: {exc}", inconclusive=str(exc))
        return EXIT_INCONCLUSIVE
    except (DomainError, WordSyntaxError, wadge.ScriptExhausted, textformat.PdaFormatError) as exc:
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
