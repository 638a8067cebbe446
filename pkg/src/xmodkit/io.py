"""Line-oriented text files for every object kind.

A file holds one object. The first word of the first meaningful line
names the kind: structure, morphism, action, xmod, xmodmorphism, cat1.
Values are element ids, never indices, and compound objects reference
their parts as sibling files (``dom z2.mci``). Blank lines and lines
starting with ``#`` are skipped outside counted table rows.

Serialization is canonical: single spaces, tables in carrier order, one
trailing newline, only primary star tables for structures (opposites are
transposed on load) but all star tables for actions, where the two
orientations are independent. parse(serialize(x)) rebuilds x and
serialize(parse(text)) reproduces canonical text byte for byte.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Optional

from .actions import DerivedAction, make_action
from .cat1 import Cat1Object, make_cat1
from .errors import ParseError, StructuralError
from .limits import same_structure
from .profiles import get_profile
from .structures import Morphism, Structure, make_structure
from .xmod import CrossedModule, XModMorphism, make_xmod


class _Cursor:
    def __init__(self, text: str):
        self.rows: list[tuple[int, list[str]]] = []
        for i, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self.rows.append((i, stripped.split()))
        self.k = 0

    def done(self) -> bool:
        return self.k >= len(self.rows)

    def last_line(self) -> int:
        return self.rows[-1][0] if self.rows else 1

    def next(self) -> tuple[int, list[str]]:
        if self.done():
            raise ParseError("unexpected end of file", line=self.last_line())
        out = self.rows[self.k]
        self.k += 1
        return out

    def take(self, key: str) -> tuple[int, list[str]]:
        line, fields = self.next()
        if fields[0] != key:
            raise ParseError(f"expected {key!r}, found {fields[0]!r}", line=line)
        return line, fields

    def finish(self) -> None:
        self.take("end")
        if not self.done():
            line, _ = self.rows[self.k]
            raise ParseError("content after end", line=line)


def _lookup(idx: dict[str, int], token: str, line: int) -> int:
    try:
        return idx[token]
    except KeyError:
        raise ParseError(f"unknown element id {token!r}", line=line)


def _read_row(c: _Cursor, width: int, idx: dict[str, int]) -> tuple[int, ...]:
    line, fields = c.next()
    if len(fields) != width:
        raise ParseError(f"row needs {width} entries, found {len(fields)}", line=line)
    return tuple(_lookup(idx, t, line) for t in fields)


def _read_table(c: _Cursor, rows: int, width: int, idx: dict[str, int]):
    return tuple(_read_row(c, width, idx) for _ in range(rows))


def _ids_after(fields: list[str], skip: int, count: int, idx: dict[str, int], line: int):
    if len(fields) != skip + count:
        raise ParseError(
            f"{fields[0]!r} line needs {count} value(s), found {len(fields) - skip}",
            line=line,
        )
    return tuple(_lookup(idx, t, line) for t in fields[skip:])


def parse_structure(text: str) -> Structure:
    c = _Cursor(text)
    line, fields = c.take("structure")
    if len(fields) != 2:
        raise ParseError("'structure' line needs exactly one name", line=line)
    name = fields[1]
    line, fields = c.take("profile")
    if len(fields) != 2:
        raise ParseError("'profile' line needs exactly one name", line=line)
    try:
        profile = get_profile(fields[1])
    except StructuralError as e:
        raise ParseError(e.message, line=line)
    line, fields = c.take("elements")
    ids = tuple(fields[1:])
    if not ids:
        raise ParseError("'elements' line needs at least one id", line=line)
    if len(set(ids)) != len(ids):
        raise ParseError("duplicate element id", line=line)
    idx = {e: i for i, e in enumerate(ids)}
    n = len(ids)

    add = neg = None
    star: dict[str, tuple] = {}
    omega: dict[str, tuple] = {}
    while True:
        line, fields = c.next()
        kw = fields[0]
        if kw == "end":
            break
        if kw == "add":
            if add is not None:
                raise ParseError("duplicate add table", line=line)
            add = _read_table(c, n, n, idx)
        elif kw == "neg":
            if neg is not None:
                raise ParseError("duplicate neg table", line=line)
            neg = _ids_after(fields, 1, n, idx, line)
        elif kw == "table":
            if len(fields) != 2:
                raise ParseError("'table' line needs exactly one symbol", line=line)
            if fields[1] in star:
                raise ParseError(f"duplicate table {fields[1]!r}", line=line)
            star[fields[1]] = _read_table(c, n, n, idx)
        elif kw == "unary":
            if len(fields) < 2:
                raise ParseError("'unary' line needs a symbol", line=line)
            if fields[1] in omega:
                raise ParseError(f"duplicate unary {fields[1]!r}", line=line)
            omega[fields[1]] = _ids_after(fields, 2, n, idx, line)
        else:
            raise ParseError(f"unknown keyword {kw!r}", line=line)
    if add is None:
        raise ParseError("missing add table", line=line)
    if neg is None:
        raise ParseError("missing neg table", line=line)
    if not c.done():
        after, _ = c.rows[c.k]
        raise ParseError("content after end", line=after)
    return make_structure(name, profile, ids, add, neg, star, omega)


def _take_name(c: _Cursor, kind: str) -> str:
    line, fields = c.take(kind)
    if len(fields) != 2:
        raise ParseError(f"{kind!r} line needs exactly one name", line=line)
    return fields[1]


def _take_ref(c: _Cursor, key: str, loader: Callable[[str, int], object]):
    line, fields = c.take(key)
    if len(fields) != 2:
        raise ParseError(f"{key!r} line needs exactly one file name", line=line)
    return loader(fields[1], line)


def _read_map(c: _Cursor, dom_ids, cod_idx: dict[str, int]) -> tuple[int, ...]:
    dom_idx = {e: i for i, e in enumerate(dom_ids)}
    out: list[Optional[int]] = [None] * len(dom_ids)
    for _ in dom_ids:
        line, fields = c.next()
        if len(fields) != 2:
            raise ParseError("map row needs two ids", line=line)
        i = _lookup(dom_idx, fields[0], line)
        if out[i] is not None:
            raise ParseError(f"duplicate map row for {fields[0]!r}", line=line)
        out[i] = _lookup(cod_idx, fields[1], line)
    return tuple(out)  # type: ignore[arg-type]


def parse_morphism(text: str, loader) -> Morphism:
    c = _Cursor(text)
    name = _take_name(c, "morphism")
    dom = _take_ref(c, "dom", loader)
    cod = _take_ref(c, "cod", loader)
    c.take("map")
    m = _read_map(c, dom.elements, cod.index_map())
    c.finish()
    return Morphism(name, dom, cod, m)


def _star_blocks(c: _Cursor, rows: int, width: int, idx) -> dict[str, tuple]:
    star: dict[str, tuple] = {}
    while True:
        line, fields = c.next()
        if fields[0] == "end":
            if not c.done():
                after, _ = c.rows[c.k]
                raise ParseError("content after end", line=after)
            return star
        if fields[0] != "table" or len(fields) != 2:
            raise ParseError(f"expected 'table' or 'end', found {fields[0]!r}", line=line)
        if fields[1] in star:
            raise ParseError(f"duplicate table {fields[1]!r}", line=line)
        star[fields[1]] = _read_table(c, rows, width, idx)


def parse_action(text: str, loader) -> DerivedAction:
    c = _Cursor(text)
    name = _take_name(c, "action")
    actor = _take_ref(c, "actor", loader)
    acted = _take_ref(c, "acted", loader)
    idx = acted.index_map()
    c.take("dot")
    dot = _read_table(c, actor.n, acted.n, idx)
    star = _star_blocks(c, actor.n, acted.n, idx)
    return make_action(name, actor, acted, dot, star)


def parse_xmod(text: str, loader) -> CrossedModule:
    c = _Cursor(text)
    name = _take_name(c, "xmod")
    c1 = _take_ref(c, "c1", loader)
    c0 = _take_ref(c, "c0", loader)
    line, fields = c.take("boundary")
    bmap = _ids_after(fields, 1, c1.n, c0.index_map(), line)
    c.take("action")
    c.take("dot")
    idx = c1.index_map()
    dot = _read_table(c, c0.n, c1.n, idx)
    star = _star_blocks(c, c0.n, c1.n, idx)
    act = make_action(f"act_{name}", c0, c1, dot, star)
    return make_xmod(name, Morphism(f"bnd_{name}", c1, c0, bmap), act)


def parse_xmodmorphism(text: str, loader) -> XModMorphism:
    c = _Cursor(text)
    name = _take_name(c, "xmodmorphism")
    dom = _take_ref(c, "dom", loader)
    cod = _take_ref(c, "cod", loader)
    c.take("top")
    top = _read_map(c, dom.c1.elements, cod.c1.index_map())
    c.take("bottom")
    bottom = _read_map(c, dom.c0.elements, cod.c0.index_map())
    c.finish()
    return XModMorphism(
        name,
        dom,
        cod,
        Morphism(f"top_{name}", dom.c1, cod.c1, top),
        Morphism(f"bottom_{name}", dom.c0, cod.c0, bottom),
    )


def parse_cat1(text: str, loader) -> Cat1Object:
    c = _Cursor(text)
    name = _take_name(c, "cat1")
    big = _take_ref(c, "big", loader)
    base = _take_ref(c, "base", loader)
    line, fields = c.take("embed")
    emap = _ids_after(fields, 1, base.n, big.index_map(), line)
    line, fields = c.take("src")
    smap = _ids_after(fields, 1, big.n, base.index_map(), line)
    line, fields = c.take("tgt")
    tmap = _ids_after(fields, 1, big.n, base.index_map(), line)
    c.finish()
    return make_cat1(
        name,
        Morphism(f"embed_{name}", base, big, emap),
        Morphism(f"src_{name}", big, base, smap),
        Morphism(f"tgt_{name}", big, base, tmap),
    )


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise StructuralError(f"cannot read {path}: {e}")


def _resolve_ref(base: Path, ref: str, line: int) -> Path:
    if "/" in ref or "\\" in ref or ref.startswith("."):
        raise ParseError(f"reference {ref!r} must be a sibling file name", line=line)
    return base.parent / ref


def load_structure(path) -> Structure:
    return parse_structure(_read_text(Path(path)))


def _structure_loader(path: Path):
    return lambda ref, line: load_structure(_resolve_ref(path, ref, line))


def load_morphism(path) -> Morphism:
    p = Path(path)
    return parse_morphism(_read_text(p), _structure_loader(p))


def load_action(path) -> DerivedAction:
    p = Path(path)
    return parse_action(_read_text(p), _structure_loader(p))


def load_xmod(path) -> CrossedModule:
    p = Path(path)
    return parse_xmod(_read_text(p), _structure_loader(p))


def load_xmodmorphism(path) -> XModMorphism:
    p = Path(path)
    return parse_xmodmorphism(
        _read_text(p), lambda ref, line: load_xmod(_resolve_ref(p, ref, line))
    )


def load_cat1(path) -> Cat1Object:
    p = Path(path)
    return parse_cat1(_read_text(p), _structure_loader(p))


_LOADERS = {
    "structure": load_structure,
    "morphism": load_morphism,
    "action": load_action,
    "xmod": load_xmod,
    "xmodmorphism": load_xmodmorphism,
    "cat1": load_cat1,
}


def load_any(path):
    """Dispatch on the first keyword; returns (kind, object)."""
    p = Path(path)
    c = _Cursor(_read_text(p))
    if c.done():
        raise ParseError("empty file", line=1)
    line, fields = c.rows[0]
    kind = fields[0]
    if kind not in _LOADERS:
        raise ParseError(f"unknown file kind {kind!r}", line=line)
    return kind, _LOADERS[kind](p)


def _check_token(name: str) -> None:
    bad = not name or "/" in name or "\\" in name or name.startswith(".")
    if bad or any(ch.isspace() for ch in name):
        raise StructuralError(f"name {name!r} cannot be used in files")


def _ref(s) -> str:
    _check_token(s.name)
    return f"{s.name}.mci"


def _table_lines(s: Structure, table) -> list[str]:
    return [" ".join(s.elements[v] for v in row) for row in table]


def serialize_structure(s: Structure) -> str:
    _check_token(s.name)
    out = [
        f"structure {s.name}",
        f"profile {s.profile.name}",
        "elements " + " ".join(s.elements),
        "add",
    ]
    out += _table_lines(s, s.add)
    out.append("neg " + " ".join(s.elements[v] for v in s.neg))
    for sym in s.profile.primary_binary_symbols():
        out.append(f"table {sym}")
        out += _table_lines(s, s.star[sym])
    for sym in s.profile.unary_symbols():
        out.append(f"unary {sym} " + " ".join(s.elements[v] for v in s.omega[sym]))
    out.append("end")
    return "\n".join(out) + "\n"


def _map_lines(dom: Structure, cod: Structure, m) -> list[str]:
    return [f"{dom.elements[i]} {cod.elements[m[i]]}" for i in range(dom.n)]


def serialize_morphism(m: Morphism) -> str:
    _check_token(m.name)
    out = [f"morphism {m.name}", f"dom {_ref(m.dom)}", f"cod {_ref(m.cod)}", "map"]
    out += _map_lines(m.dom, m.cod, m.map)
    out.append("end")
    return "\n".join(out) + "\n"


def _action_tables(acted: Structure, act: DerivedAction) -> list[str]:
    out = ["dot"]
    out += [" ".join(acted.elements[v] for v in row) for row in act.dot]
    for sym in act.actor.profile.binary_symbols():
        out.append(f"table {sym}")
        out += [" ".join(acted.elements[v] for v in row) for row in act.star_act[sym]]
    return out


def serialize_action(act: DerivedAction) -> str:
    _check_token(act.name)
    out = [
        f"action {act.name}",
        f"actor {_ref(act.actor)}",
        f"acted {_ref(act.acted)}",
    ]
    out += _action_tables(act.acted, act)
    out.append("end")
    return "\n".join(out) + "\n"


def serialize_xmod(xm: CrossedModule) -> str:
    _check_token(xm.name)
    out = [
        f"xmod {xm.name}",
        f"c1 {_ref(xm.c1)}",
        f"c0 {_ref(xm.c0)}",
        "boundary " + " ".join(xm.c0.elements[v] for v in xm.boundary.map),
        "action",
    ]
    out += _action_tables(xm.c1, xm.action)
    out.append("end")
    return "\n".join(out) + "\n"


def serialize_xmodmorphism(m: XModMorphism) -> str:
    _check_token(m.name)
    out = [
        f"xmodmorphism {m.name}",
        f"dom {m.dom.name}.mci",
        f"cod {m.cod.name}.mci",
        "top",
    ]
    _check_token(m.dom.name)
    _check_token(m.cod.name)
    out += _map_lines(m.dom.c1, m.cod.c1, m.top.map)
    out.append("bottom")
    out += _map_lines(m.dom.c0, m.cod.c0, m.bottom.map)
    out.append("end")
    return "\n".join(out) + "\n"


def serialize_cat1(c: Cat1Object) -> str:
    _check_token(c.name)
    out = [
        f"cat1 {c.name}",
        f"big {_ref(c.big)}",
        f"base {_ref(c.base)}",
        "embed " + " ".join(c.big.elements[v] for v in c.embed.map),
        "src " + " ".join(c.base.elements[v] for v in c.src.map),
        "tgt " + " ".join(c.base.elements[v] for v in c.tgt.map),
        "end",
    ]
    return "\n".join(out) + "\n"


def _write_named(path: Path, text: str) -> None:
    """Write a companion file, refusing to clobber different content."""
    if path.exists():
        if path.read_text(encoding="utf-8") != text:
            raise StructuralError(
                f"refusing to overwrite {path.name}: existing file differs"
            )
        return
    path.write_text(text, encoding="utf-8")


def _write_structures(dirpath: Path, structs) -> None:
    seen: dict[str, Structure] = {}
    for s in structs:
        _check_token(s.name)
        if s.name in seen:
            if not same_structure(seen[s.name], s):
                raise StructuralError(
                    f"two different structures share the name {s.name!r}"
                )
            continue
        seen[s.name] = s
        _write_named(dirpath / f"{s.name}.mci", serialize_structure(s))


def save_structure(s: Structure, path) -> None:
    Path(path).write_text(serialize_structure(s), encoding="utf-8")


def save_morphism(m: Morphism, path) -> None:
    p = Path(path)
    _write_structures(p.parent, (m.dom, m.cod))
    p.write_text(serialize_morphism(m), encoding="utf-8")


def save_action(act: DerivedAction, path) -> None:
    p = Path(path)
    _write_structures(p.parent, (act.actor, act.acted))
    p.write_text(serialize_action(act), encoding="utf-8")


def save_xmod(xm: CrossedModule, path) -> None:
    p = Path(path)
    _write_structures(p.parent, (xm.c1, xm.c0))
    p.write_text(serialize_xmod(xm), encoding="utf-8")


def _same_xmod(a: CrossedModule, b: CrossedModule) -> bool:
    return (
        same_structure(a.c1, b.c1)
        and same_structure(a.c0, b.c0)
        and a.boundary.map == b.boundary.map
        and a.action.dot == b.action.dot
        and a.action.star_act == b.action.star_act
    )


def save_xmodmorphism(m: XModMorphism, path) -> None:
    p = Path(path)
    if m.dom.name == m.cod.name and not _same_xmod(m.dom, m.cod):
        raise StructuralError(f"two different modules share the name {m.dom.name!r}")
    _write_structures(p.parent, (m.dom.c1, m.dom.c0, m.cod.c1, m.cod.c0))
    for xm in (m.dom, m.cod):
        _check_token(xm.name)
        _write_named(p.parent / f"{xm.name}.mci", serialize_xmod(xm))
    p.write_text(serialize_xmodmorphism(m), encoding="utf-8")


def save_cat1(c: Cat1Object, path) -> None:
    p = Path(path)
    _write_structures(p.parent, (c.big, c.base))
    p.write_text(serialize_cat1(c), encoding="utf-8")
