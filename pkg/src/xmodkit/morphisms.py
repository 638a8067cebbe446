"""Morphism verification, kernels, ideals, and morphism enumeration.

Enumeration never scans all |B|^|A| maps. The additive reduct of a valid
structure is a finite group, so a morphism is determined by images of a
greedy generating set; candidates are the |B|^g image tuples (pruned by
element-order divisibility), each extended along recorded sum
derivations and then checked against every table. A brute-force scan is
kept in the tests as the oracle for this routine.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import SizeGuardError, StructuralError
from .report import CheckItem, Report
from .structures import Morphism, Structure, Subobject, Table1, subobject

DEFAULT_MAX_SIZE = 12
UNIVERSAL_MAX_SIZE = 8


def identity_morphism(s: Structure) -> Morphism:
    return Morphism(f"id_{s.name}", s, s, tuple(range(s.n)))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.cod is not g.dom and f.cod != g.dom:
        raise StructuralError(f"cannot compose {g.name} after {f.name}: endpoint mismatch")
    return Morphism(f"{g.name}.{f.name}", f.dom, g.cod, tuple(g.map[v] for v in f.map))


def _validate_endpoints(f: Morphism) -> None:
    if f.dom.profile.name != f.cod.profile.name:
        raise StructuralError(
            f"morphism {f.name}: profiles differ ({f.dom.profile.name} vs {f.cod.profile.name})"
        )
    if len(f.map) != f.dom.n:
        raise StructuralError(f"morphism {f.name}: map has {len(f.map)} entries, expected {f.dom.n}")
    for v in f.map:
        if not (0 <= v < f.cod.n):
            raise StructuralError(f"morphism {f.name}: image index {v} out of range")


def morphism_report(f: Morphism) -> Report:
    _validate_endpoints(f)
    a, b, m = f.dom, f.cod, f.map
    items: list[CheckItem] = []

    if a.zero is None or b.zero is None:
        items.append(CheckItem("hom-zero", False, (), "an endpoint has no additive zero"))
        return Report(f"morphism {f.name}", tuple(items))
    if m[a.zero] == b.zero:
        items.append(CheckItem("hom-zero", True))
    else:
        items.append(CheckItem("hom-zero", False, (a.elements[a.zero],), f"maps to {b.elements[m[a.zero]]}"))

    def table_item(law: str, ok: bool, witness=(), detail="") -> None:
        items.append(CheckItem(law, ok, witness, detail))

    wit = None
    for i in range(a.n):
        for j in range(a.n):
            if m[a.add[i][j]] != b.add[m[i]][m[j]]:
                wit = (i, j)
                break
        if wit:
            break
    if wit is None:
        table_item("hom-add", True)
    else:
        i, j = wit
        table_item(
            "hom-add",
            False,
            (a.elements[i], a.elements[j]),
            f"f(x+y)={b.elements[m[a.add[i][j]]]} f(x)+f(y)={b.elements[b.add[m[i]][m[j]]]}",
        )

    for sym in a.profile.binary_symbols():
        wit = None
        ta, tb = a.star[sym], b.star[sym]
        for i in range(a.n):
            for j in range(a.n):
                if m[ta[i][j]] != tb[m[i]][m[j]]:
                    wit = (i, j)
                    break
            if wit:
                break
        if wit is None:
            table_item(f"hom-star[{sym}]", True)
        else:
            i, j = wit
            table_item(
                f"hom-star[{sym}]",
                False,
                (a.elements[i], a.elements[j]),
                f"f(x{sym}y)={b.elements[m[ta[i][j]]]} f(x){sym}f(y)={b.elements[tb[m[i]][m[j]]]}",
            )

    for sym in a.profile.unary_symbols():
        ta, tb = a.omega[sym], b.omega[sym]
        wit1 = next((i for i in range(a.n) if m[ta[i]] != tb[m[i]]), None)
        if wit1 is None:
            table_item(f"hom-unary[{sym}]", True)
        else:
            table_item(
                f"hom-unary[{sym}]",
                False,
                (a.elements[wit1],),
                f"f({sym}(x))={b.elements[m[ta[wit1]]]} {sym}(f(x))={b.elements[tb[m[wit1]]]}",
            )
    return Report(f"morphism {f.name}", tuple(items))


def is_morphism(f: Morphism) -> bool:
    return morphism_report(f).ok


def element_order(s: Structure, i: int) -> int:
    if s.zero is None:
        raise StructuralError(f"{s.name}: no zero, orders undefined")
    acc = i
    for k in range(1, s.n + 1):
        if acc == s.zero:
            return k
        acc = s.add[acc][i]
    raise StructuralError(f"{s.name}: element {s.elements[i]} has no additive order")


def kernel(f: Morphism) -> Subobject:
    rep = morphism_report(f)
    if not rep.ok:
        first = rep.failures()[0]
        raise StructuralError(f"kernel of non-morphism {f.name}: {first.law}")
    subset = tuple(i for i in range(f.dom.n) if f.map[i] == f.cod.zero)
    return subobject(f.dom, subset, name=f"ker_{f.name}")


def ideal_report(sub: Subobject) -> Report:
    p = sub.parent
    inside = set(sub.elements)
    items: list[CheckItem] = []
    wit = next(
        (
            (g, a)
            for g in range(p.n)
            for a in sub.elements
            if p.conj(g, a) not in inside
        ),
        None,
    )
    if wit is None:
        items.append(CheckItem("ideal-conj", True))
    else:
        g, a = wit
        items.append(
            CheckItem(
                "ideal-conj",
                False,
                (p.elements[g], p.elements[a]),
                f"g+a-g={p.elements[p.conj(g, a)]} escapes",
            )
        )
    for sym in p.profile.binary_symbols():
        t = p.star[sym]
        wit = next(
            ((g, a) for g in range(p.n) for a in sub.elements if t[g][a] not in inside), None
        )
        if wit is None:
            items.append(CheckItem(f"ideal-star[{sym}]", True))
        else:
            g, a = wit
            items.append(
                CheckItem(
                    f"ideal-star[{sym}]",
                    False,
                    (p.elements[g], p.elements[a]),
                    f"g{sym}a={p.elements[t[g][a]]} escapes",
                )
            )
    return Report(f"ideal {sub.induced.name}", tuple(items))


def is_ideal(sub: Subobject) -> bool:
    return ideal_report(sub).ok


# ---------------------------------------------------------------------------
# enumeration


def _generating_data(s: Structure):
    """Greedy additive generators plus a derivation for every element.

    Derivations: None for zero, ("gen", k), or ("sum", parent, k) meaning
    element = parent + gens[k] with parent discovered earlier.
    """
    if s.zero is None:
        raise StructuralError(f"{s.name}: no zero, cannot enumerate morphisms")
    known = {s.zero}
    order: list[tuple[int, object]] = [(s.zero, None)]
    gens: list[int] = []
    for x in range(s.n):
        if x in known:
            continue
        gens.append(x)
        known.add(x)
        order.append((x, ("gen", len(gens) - 1)))
        grew = True
        while grew:
            grew = False
            for e, _ in list(order):
                for k, g in enumerate(gens):
                    z = s.add[e][g]
                    if z not in known:
                        known.add(z)
                        order.append((z, ("sum", e, k)))
                        grew = True
    return gens, order


def _extend(a: Structure, b: Structure, order, gens, images) -> Table1:
    img = [0] * a.n
    for e, how in order:
        if how is None:
            img[e] = b.zero
        elif how[0] == "gen":
            img[e] = images[how[1]]
        else:
            _, parent, k = how
            img[e] = b.add[img[parent]][images[k]]
    return tuple(img)


def _preserves_all(a: Structure, b: Structure, m: Table1) -> bool:
    badd = b.add
    for i in range(a.n):
        arow = a.add[i]
        mi = m[i]
        for j in range(a.n):
            if m[arow[j]] != badd[mi][m[j]]:
                return False
    for sym in a.profile.binary_symbols():
        ta, tb = a.star[sym], b.star[sym]
        for i in range(a.n):
            row = ta[i]
            mi = m[i]
            for j in range(a.n):
                if m[row[j]] != tb[mi][m[j]]:
                    return False
    for sym in a.profile.unary_symbols():
        ta, tb = a.omega[sym], b.omega[sym]
        if any(m[ta[i]] != tb[m[i]] for i in range(a.n)):
            return False
    return True


def enumerate_morphisms(a: Structure, b: Structure, max_size: int = DEFAULT_MAX_SIZE) -> list[Morphism]:
    """All morphisms a -> b, sorted by image tuple."""
    if a.profile.name != b.profile.name:
        raise StructuralError(
            f"cannot enumerate morphisms across profiles ({a.profile.name} vs {b.profile.name})"
        )
    if a.n > max_size:
        raise SizeGuardError(
            f"enumerate_morphisms: domain carrier {a.n} exceeds guard {max_size}"
        )
    if b.zero is None:
        raise StructuralError(f"{b.name}: no zero, cannot enumerate morphisms")
    gens, order = _generating_data(a)
    allowed = []
    for g in gens:
        o = element_order(a, g)
        allowed.append([y for y in range(b.n) if o % element_order(b, y) == 0])
    found = []
    for images in itertools.product(*allowed):
        m = _extend(a, b, order, gens, images)
        if _preserves_all(a, b, m):
            found.append(m)
    found.sort()
    return [Morphism(f"hom{k}_{a.name}_{b.name}", a, b, m) for k, m in enumerate(found)]


def find_isomorphism(
    a: Structure, b: Structure, max_size: int = DEFAULT_MAX_SIZE
) -> Optional[Morphism]:
    """First bijective morphism with morphism inverse, or None."""
    if a.profile.name != b.profile.name:
        return None
    if a.n != b.n:
        return None
    if max(a.n, b.n) > max_size:
        raise SizeGuardError(f"find_isomorphism: carrier {a.n} exceeds guard {max_size}")
    if a.zero is None or b.zero is None:
        return None
    if sorted(element_order(a, i) for i in range(a.n)) != sorted(
        element_order(b, i) for i in range(b.n)
    ):
        return None
    gens, order = _generating_data(a)
    allowed = []
    for g in gens:
        o = element_order(a, g)
        allowed.append([y for y in range(b.n) if element_order(b, y) == o])
    for images in itertools.product(*allowed):
        m = _extend(a, b, order, gens, images)
        if len(set(m)) != a.n:
            continue
        if not _preserves_all(a, b, m):
            continue
        inv = [0] * a.n
        for i, v in enumerate(m):
            inv[v] = i
        if _preserves_all(b, a, tuple(inv)):
            return Morphism(f"iso_{a.name}_{b.name}", a, b, m)
    return None
