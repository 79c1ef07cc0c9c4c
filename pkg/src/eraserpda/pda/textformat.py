"""Line-oriented PDA text format.

::

    states: q0 q1
    input: 0 1
    stack: Z0 X
    initial: q0
    bottom: Z0
    finals: q1
    q0 , 0 , Z0 -> q0 , X Z0
    q0 , eps , X -> q1 , eps

Push strings are written top first, space separated, ``eps`` for the empty
string.  Names may not contain whitespace or commas, and ``eps`` is
reserved.  Lines starting with ``#`` are comments.  :func:`dumps` is
canonical (sorted), so ``dumps(loads(dumps(p))) == dumps(p)``.
"""
from __future__ import annotations

from ..words import DomainError
from .machine import EPS, Pda, make_pda

HEADERS = ("states", "input", "stack", "initial", "bottom", "finals")


class PdaFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _check_name(name: str) -> str:
    if not name or any(c.isspace() for c in name) or "," in name or name in ("eps", "->"):
        raise DomainError(f"name {name!r} cannot be serialized")
    return name


def dumps(pda: Pda) -> str:
    for n in pda.states | pda.input_alphabet | pda.stack_alphabet:
        _check_name(n)
    lines = [
        "states: " + " ".join(sorted(pda.states)),
        "input: " + " ".join(sorted(pda.input_alphabet)),
        "stack: " + " ".join(sorted(pda.stack_alphabet)),
        f"initial: {pda.initial}",
        f"bottom: {pda.bottom}",
        "finals: " + " ".join(sorted(pda.finals)),
    ]
    for q, a, z, p, push in pda.transitions():
        label = "eps" if a is EPS else a
        body = " ".join(push) if push else "eps"
        lines.append(f"{q} , {label} , {z} -> {p} , {body}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> Pda:
    header = {}
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" in line:
            lhs, _, rhs = line.partition("->")
            left = [x.strip() for x in lhs.split(",")]
            right = [x.strip() for x in rhs.split(",")]
            if len(left) != 3 or len(right) != 2 or not all(left) or not all(right):
                raise PdaFormatError(lineno, f"bad transition {line!r}")
            q, a, z = left
            p, body = right
            push = () if body == "eps" else tuple(body.split())
            transitions.append((q, EPS if a == "eps" else a, z, p, push))
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in HEADERS:
            raise PdaFormatError(lineno, f"unknown line {line!r}")
        if key in header:
            raise PdaFormatError(lineno, f"duplicate header {key!r}")
        header[key] = value.split()
    missing = [h for h in HEADERS if h not in header]
    if missing:
        raise PdaFormatError(0, f"missing headers {missing}")
    for key in ("initial", "bottom"):
        if len(header[key]) != 1:
            raise PdaFormatError(0, f"{key} needs exactly one name")
    pda = make_pda(transitions, header["initial"][0], header["bottom"][0], header["finals"],
                   states=header["states"], input_alphabet=header["input"],
                   stack_alphabet=header["stack"])
    if pda.states != frozenset(header["states"]) or pda.stack_alphabet != frozenset(header["stack"]) \
            or pda.input_alphabet != frozenset(header["input"]):
        raise PdaFormatError(0, "transitions use names missing from the headers")
    return pda


def dump(pda: Pda, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(pda))


def load(path) -> Pda:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
