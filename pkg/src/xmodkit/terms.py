"""Prefix term language for equational laws.

Grammar (whitespace separated, fully parenthesised):

    term ::= <var> | 0 | ( <op> term ... )

``0`` is the additive zero constant. Anything else outside parens is a
variable. Operation arity is not fixed here; it is validated when a
profile accepts an identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Union

from .errors import ParseError, StructuralError

if TYPE_CHECKING:  # pragma: no cover
    from .structures import Structure


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class App:
    op: str
    args: tuple["Term", ...]


Term = Union[Var, Zero, App]


@dataclass(frozen=True)
class Identity:
    """An equational law lhs = rhs, quantified over its variables."""

    name: str
    lhs: Term
    rhs: Term

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for v in term_vars(self.lhs) + term_vars(self.rhs):
            if v not in seen:
                seen.append(v)
        return tuple(seen)


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks: list[tuple[str, int]] = []
    col = 0
    cur = ""
    start = 0
    for i, ch in enumerate(text):
        if ch in "() \t\n":
            if cur:
                toks.append((cur, start))
                cur = ""
            if ch in "()":
                toks.append((ch, i))
        else:
            if not cur:
                start = i
            cur += ch
        col = i
    if cur:
        toks.append((cur, start))
    return toks


def parse_term(text: str) -> Term:
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty term", col=0)
    term, pos = _parse_one(toks, 0, text)
    if pos != len(toks):
        raise ParseError("trailing tokens after term", col=toks[pos][1])
    return term


def _parse_one(toks: list[tuple[str, int]], pos: int, text: str) -> tuple[Term, int]:
    tok, col = toks[pos]
    if tok == ")":
        raise ParseError("unexpected ')'", col=col)
    if tok != "(":
        return (Zero() if tok == "0" else Var(tok)), pos + 1
    pos += 1
    if pos >= len(toks):
        raise ParseError("unclosed '('", col=col)
    op, opcol = toks[pos]
    if op in "()":
        raise ParseError("expected operation symbol after '('", col=opcol)
    pos += 1
    args: list[Term] = []
    while True:
        if pos >= len(toks):
            raise ParseError("unclosed '('", col=col)
        if toks[pos][0] == ")":
            return App(op, tuple(args)), pos + 1
        arg, pos = _parse_one(toks, pos, text)
        args.append(arg)


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    return "(" + " ".join([t.op] + [format_term(a) for a in t.args]) + ")"


def term_vars(t: Term) -> tuple[str, ...]:
    if isinstance(t, Var):
        return (t.name,)
    if isinstance(t, Zero):
        return ()
    out: list[str] = []
    for a in t.args:
        for v in term_vars(a):
            if v not in out:
                out.append(v)
    return tuple(out)


def term_ops(t: Term) -> tuple[tuple[str, int], ...]:
    """All (op, arity) pairs appearing in t, in first-occurrence order."""
    if not isinstance(t, App):
        return ()
    out = [(t.op, len(t.args))]
    for a in t.args:
        for pair in term_ops(a):
            if pair not in out:
                out.append(pair)
    return tuple(out)


def eval_term(t: Term, s: "Structure", env: Mapping[str, int]) -> int:
    """Evaluate over a structure's tables; env maps variable name -> index."""
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Zero):
        if s.zero is None:
            raise StructuralError(f"structure {s.name} has no additive zero")
        return s.zero
    vals = [eval_term(a, s, env) for a in t.args]
    op = t.op
    if op == "add":
        return s.add[vals[0]][vals[1]]
    if op == "neg":
        return s.neg[vals[0]]
    if op in s.star:
        return s.star[op][vals[0]][vals[1]]
    if op in s.omega:
        return s.omega[op][vals[0]]
    raise StructuralError(f"unknown operation {op!r} for profile {s.profile.name}")
