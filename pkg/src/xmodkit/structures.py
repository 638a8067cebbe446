"""Finite structures over a variety profile, and their law checker.

A structure is a finite carrier with a group operation ``add`` (written
additively, not assumed abelian), unary ``neg``, one table per star
symbol and one per unary symbol. Verification evaluates a deterministic
law list; every law is an equational identity, so any reported witness
can be independently re-evaluated (see :func:`evaluate_law`).

Core laws, per profile:

* group laws for (carrier, add, neg, zero),
* left distributivity of every star symbol over add (the right-hand
  version is the same law for the opposite symbol),
* unary additivity, plus the S/D star law for each unary-star pair,
* centrality of star products under add,
* opposite coherence: the table of a symbol's opposite is its transpose.

Extra identities from the profile are checked after the core; passing
``core_only=True`` skips them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ClosureError, StructuralError
from .profiles import VarietyProfile
from .report import CheckItem, Report
from .terms import App, Identity, Term, Var, Zero, eval_term

Table1 = tuple[int, ...]
Table2 = tuple[Table1, ...]


@dataclass(frozen=True)
class Structure:
    name: str
    profile: VarietyProfile
    elements: tuple[str, ...]
    add: Table2
    neg: Table1
    star: Mapping[str, Table2]
    omega: Mapping[str, Table1]
    zero: int | None

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, element_id: str) -> int:
        try:
            return self.elements.index(element_id)
        except ValueError:
            raise StructuralError(f"{self.name}: unknown element id {element_id!r}") from None

    def index_map(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def plus(self, i: int, j: int) -> int:
        return self.add[i][j]

    def minus(self, i: int) -> int:
        return self.neg[i]

    def star_op(self, symbol: str, i: int, j: int) -> int:
        return self.star[symbol][i][j]

    def un(self, symbol: str, i: int) -> int:
        return self.omega[symbol][i]

    def conj(self, i: int, j: int) -> int:
        """i + j - i"""
        return self.add[self.add[i][j]][self.neg[i]]


@dataclass(frozen=True)
class Morphism:
    name: str
    dom: Structure
    cod: Structure
    map: Table1

    def apply(self, i: int) -> int:
        return self.map[i]


@dataclass(frozen=True)
class Subobject:
    parent: Structure
    elements: tuple[int, ...]  # parent indices, ascending
    induced: Structure
    embed: Morphism


def _transpose(t: Table2) -> Table2:
    n = len(t)
    return tuple(tuple(t[j][i] for j in range(n)) for i in range(n))


def _check_table2(name: str, op: str, t: Sequence[Sequence[int]], n: int) -> Table2:
    if len(t) != n:
        raise StructuralError(f"{name}: table {op!r} has {len(t)} rows, expected {n}")
    rows = []
    for r, row in enumerate(t):
        if len(row) != n:
            raise StructuralError(
                f"{name}: table {op!r} row {r} has {len(row)} entries, expected {n}"
            )
        for v in row:
            if not (0 <= v < n):
                raise StructuralError(f"{name}: table {op!r} entry {v} out of range")
        rows.append(tuple(row))
    return tuple(rows)


def _check_table1(name: str, op: str, t: Sequence[int], n: int) -> Table1:
    if len(t) != n:
        raise StructuralError(f"{name}: table {op!r} has {len(t)} entries, expected {n}")
    for v in t:
        if not (0 <= v < n):
            raise StructuralError(f"{name}: table {op!r} entry {v} out of range")
    return tuple(t)


def _infer_zero(add: Table2) -> int | None:
    n = len(add)
    for e in range(n):
        if all(add[e][x] == x and add[x][e] == x for x in range(n)):
            return e
    return None


def make_structure(
    name: str,
    profile: VarietyProfile,
    elements: Sequence[str],
    add: Sequence[Sequence[int]],
    neg: Sequence[int],
    star: Mapping[str, Sequence[Sequence[int]]],
    omega: Mapping[str, Sequence[int]],
) -> Structure:
    """Validate tables, transpose in missing opposite star tables, infer zero."""
    elements = tuple(elements)
    if not elements:
        raise StructuralError(f"{name}: carrier must be nonempty")
    if len(set(elements)) != len(elements):
        raise StructuralError(f"{name}: duplicate element ids")
    for e in elements:
        if not e or any(c.isspace() for c in e):
            raise StructuralError(f"{name}: bad element id {e!r}")
    n = len(elements)

    add_t = _check_table2(name, "add", add, n)
    neg_t = _check_table1(name, "neg", neg, n)

    syms = profile.binary_symbols()
    for k in star:
        if k not in syms:
            raise StructuralError(f"{name}: star table for unknown symbol {k!r}")
    star_t: dict[str, Table2] = {}
    for sym in syms:
        if sym in star:
            star_t[sym] = _check_table2(name, sym, star[sym], n)
        elif profile.opposite_of(sym) in star:
            star_t[sym] = _transpose(_check_table2(name, sym, star[profile.opposite_of(sym)], n))
        else:
            raise StructuralError(f"{name}: missing star table for {sym!r}")

    usyms = profile.unary_symbols()
    for k in omega:
        if k not in usyms:
            raise StructuralError(f"{name}: unary table for unknown symbol {k!r}")
    omega_t: dict[str, Table1] = {}
    for sym in usyms:
        if sym not in omega:
            raise StructuralError(f"{name}: missing unary table for {sym!r}")
        omega_t[sym] = _check_table1(name, sym, omega[sym], n)

    return Structure(name, profile, elements, add_t, neg_t, star_t, omega_t, _infer_zero(add_t))


# ---------------------------------------------------------------------------
# law lists


def _v(n: str) -> Term:
    return Var(n)


def _group_laws() -> list[Identity]:
    x, y, z = _v("x"), _v("y"), _v("z")
    a = lambda p, q: App("add", (p, q))  # noqa: E731
    return [
        Identity("add-assoc", a(a(x, y), z), a(x, a(y, z))),
        Identity("add-zero-left", a(Zero(), x), x),
        Identity("add-zero-right", a(x, Zero()), x),
        Identity("add-neg-right", a(x, App("neg", (x,))), Zero()),
        Identity("add-neg-left", a(App("neg", (x,)), x), Zero()),
    ]


def structure_laws(profile: VarietyProfile, core_only: bool = False) -> tuple[Identity, ...]:
    x, y, z, w = _v("x"), _v("y"), _v("z"), _v("w")
    a = lambda p, q: App("add", (p, q))  # noqa: E731
    laws = _group_laws()
    for sym in profile.binary_symbols():
        s = lambda p, q: App(sym, (p, q))  # noqa: B023,E731
        laws.append(Identity(f"distrib[{sym}]", s(x, a(y, z)), a(s(x, y), s(x, z))))
    for u in profile.unary:
        o = lambda p: App(u.symbol, (p,))  # noqa: B023,E731
        laws.append(Identity(f"unary-add[{u.symbol}]", o(a(x, y)), a(o(x), o(y))))
        for sym in profile.binary_symbols():
            s = lambda p, q: App(sym, (p, q))  # noqa: B023,E731
            rhs = s(o(x), y) if u.kind == "S" else s(o(x), o(y))
            laws.append(Identity(f"unary-star[{u.symbol},{sym}]", o(s(x, y)), rhs))
    for sym in profile.binary_symbols():
        s = lambda p, q: App(sym, (p, q))  # noqa: B023,E731
        laws.append(Identity(f"central[{sym}]", a(w, s(x, y)), a(s(x, y), w)))
    for sym in profile.primary_binary_symbols():
        opp = profile.opposite_of(sym)
        laws.append(Identity(f"opposite[{sym}]", App(sym, (x, y)), App(opp, (y, x))))
    if not core_only:
        for ident in profile.identities:
            laws.append(Identity(f"id[{ident.name}]", ident.lhs, ident.rhs))
    return tuple(laws)


def _first_witness(s: Structure, law: Identity) -> tuple[str, ...] | None:
    names = law.variables()
    for combo in itertools.product(range(s.n), repeat=len(names)):
        env = dict(zip(names, combo))
        if eval_term(law.lhs, s, env) != eval_term(law.rhs, s, env):
            return tuple(s.elements[i] for i in combo)
    return None


def verify_structure(s: Structure, core_only: bool = False) -> Report:
    subject = f"structure {s.name}"
    if s.zero is None:
        item = CheckItem("add-zero-exists", False, (), "no two-sided identity in add table")
        return Report(subject, (item,))
    items = [CheckItem("add-zero-exists", True)]
    for law in structure_laws(s.profile, core_only):
        witness = _first_witness(s, law)
        if witness is None:
            items.append(CheckItem(law.name, True))
        else:
            env = {v: s.index(i) for v, i in zip(law.variables(), witness)}
            lhs = s.elements[eval_term(law.lhs, s, env)]
            rhs = s.elements[eval_term(law.rhs, s, env)]
            items.append(CheckItem(law.name, False, witness, f"lhs={lhs} rhs={rhs}"))
    return Report(subject, tuple(items))


def evaluate_law(s: Structure, law_name: str, witness: tuple[str, ...]) -> bool:
    """Re-evaluate one named law at a witness; True means the law holds there."""
    if law_name == "add-zero-exists":
        return s.zero is not None
    if s.zero is None:
        return False
    for law in structure_laws(s.profile):
        if law.name == law_name:
            names = law.variables()
            if len(names) != len(witness):
                raise StructuralError(f"law {law_name!r} takes {len(names)} witness entries")
            env = {v: s.index(i) for v, i in zip(names, witness)}
            return eval_term(law.lhs, s, env) == eval_term(law.rhs, s, env)
    raise StructuralError(f"unknown law {law_name!r} for profile {s.profile.name}")


# ---------------------------------------------------------------------------
# subobjects


def subobject(parent: Structure, indices: Sequence[int], name: str | None = None) -> Subobject:
    """Restrict parent to a closed subset; raises ClosureError otherwise."""
    elems = tuple(sorted(set(indices)))
    if not elems:
        raise ClosureError(f"{parent.name}: subobject must be nonempty")
    for i in elems:
        if not (0 <= i < parent.n):
            raise StructuralError(f"{parent.name}: subobject index {i} out of range")
    if parent.zero is None or parent.zero not in elems:
        raise ClosureError(f"{parent.name}: subset does not contain zero")
    pos = {p: k for k, p in enumerate(elems)}

    def down(value: int, op: str, args: tuple[int, ...]) -> int:
        if value not in pos:
            ids = ", ".join(parent.elements[a] for a in args)
            raise ClosureError(
                f"{parent.name}: subset not closed under {op} at ({ids}) -> {parent.elements[value]}"
            )
        return pos[value]

    add = tuple(tuple(down(parent.add[i][j], "add", (i, j)) for j in elems) for i in elems)
    neg = tuple(down(parent.neg[i], "neg", (i,)) for i in elems)
    star = {
        sym: tuple(tuple(down(parent.star[sym][i][j], sym, (i, j)) for j in elems) for i in elems)
        for sym in parent.profile.binary_symbols()
    }
    omega = {
        sym: tuple(down(parent.omega[sym][i], sym, (i,)) for i in elems)
        for sym in parent.profile.unary_symbols()
    }
    sub_name = name or f"{parent.name}.sub"
    induced = make_structure(
        sub_name, parent.profile, tuple(parent.elements[i] for i in elems), add, neg, star, omega
    )
    embed = Morphism(f"incl_{sub_name}", induced, parent, elems)
    return Subobject(parent, elems, induced, embed)
