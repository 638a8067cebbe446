"""Base change: pulling crossed modules and split objects back along a map.

Given a morphism into the base, a crossed module is pulled back by
pairing kernel-level elements with new-base elements that agree under
the boundary; the new base acts through the morphism on the first
coordinate and by conjugation or stars on the second. Split objects pull
back on triples (outer, middle, outer) whose outer coordinates map to
the source and target of the middle one. Both constructions come with a
projection and a mediator recipe, and the two routes around the square
(translate then pull back, pull back then translate) are compared by
isomorphism search.
"""

from __future__ import annotations

from typing import Optional

from .actions import make_action
from .cat1 import (
    Cat1Morphism,
    Cat1Object,
    enumerate_cat1_morphisms,
    find_cat1_isomorphism,
    make_cat1,
    verify_cat1,
    xmod_to_cat1,
)
from .errors import StructuralError
from .limits import fiber_product, same_structure
from .morphisms import DEFAULT_MAX_SIZE, is_morphism
from .report import CheckItem, Report, merge_pre
from .structures import Morphism, make_structure
from .xmod import (
    CrossedModule,
    XModMorphism,
    enumerate_xmod_morphisms,
    inclusion_xmod,
    make_xmod,
)


def pullback_xmod(
    x: CrossedModule, phi: Morphism, name: Optional[str] = None
) -> tuple[CrossedModule, XModMorphism]:
    """Pull x back along phi; returns the new module and its projection."""
    if not same_structure(phi.cod, x.c0):
        raise StructuralError(
            f"pullback of {x.name}: {phi.name} does not land in its base"
        )
    name = name or f"pb_{x.name}_{phi.name}"
    fib, fst, snd = fiber_product(x.boundary, phi, name=f"c1_{name}")
    t = phi.dom
    pos = {(fst.map[k], snd.map[k]): k for k in range(fib.n)}

    def located(pair, ctx):
        k = pos.get(pair)
        if k is None:
            raise StructuralError(f"pullback of {x.name}: {ctx} leaves the fiber")
        return k

    dot = tuple(
        tuple(
            located(
                (x.action.dot[phi.map[b]][fst.map[k]], t.conj(b, snd.map[k])),
                "the dot action",
            )
            for k in range(fib.n)
        )
        for b in range(t.n)
    )
    star = {
        sym: tuple(
            tuple(
                located(
                    (
                        x.action.star_act[sym][phi.map[b]][fst.map[k]],
                        t.star[sym][b][snd.map[k]],
                    ),
                    f"the {sym} action",
                )
                for k in range(fib.n)
            )
            for b in range(t.n)
        )
        for sym in t.profile.binary_symbols()
    }
    act = make_action(f"act_{name}", t, fib, dot, star)
    bnd = Morphism(f"bnd_{name}", fib, t, snd.map)
    out = make_xmod(name, bnd, act)
    proj = XModMorphism(
        f"proj_{name}",
        out,
        x,
        Morphism(f"top_{name}", fib, x.c1, fst.map),
        Morphism(phi.name, t, x.c0, phi.map),
    )
    return out, proj


def xmod_pullback_mediator(
    pb: CrossedModule, proj: XModMorphism, f: XModMorphism
) -> XModMorphism:
    """Unique fill-in for a square onto the pulled-back module.

    f must share the projection's codomain and base map; the mediator
    pairs each element with its boundary value and keeps the base fixed.
    """
    if not (
        same_structure(f.cod.c1, proj.cod.c1) and same_structure(f.cod.c0, proj.cod.c0)
    ):
        raise StructuralError(f"mediator for {f.name}: codomain differs")
    if f.bottom.map != proj.bottom.map or not same_structure(f.dom.c0, pb.c0):
        raise StructuralError(f"mediator for {f.name}: base change does not match")
    pos = {(proj.top.map[k], pb.boundary.map[k]): k for k in range(pb.c1.n)}
    tops = []
    for y in range(f.dom.c1.n):
        k = pos.get((f.top.map[y], f.dom.boundary.map[y]))
        if k is None:
            raise StructuralError(
                f"mediator for {f.name}: no fiber element matches "
                f"{f.dom.c1.elements[y]}"
            )
        tops.append(k)
    return XModMorphism(
        f"med_{f.name}",
        f.dom,
        pb,
        Morphism(f"med_{f.name}", f.dom.c1, pb.c1, tuple(tops)),
        Morphism(f"id_{pb.c0.name}", f.dom.c0, pb.c0, tuple(range(pb.c0.n))),
    )


def xmod_pullback_mediators(
    pb: CrossedModule,
    proj: XModMorphism,
    f: XModMorphism,
    max_size: int = DEFAULT_MAX_SIZE,
) -> list[XModMorphism]:
    """All morphisms into the pullback that solve f's square, by scan."""
    idm = tuple(range(pb.c0.n))
    return [
        m
        for m in enumerate_xmod_morphisms(f.dom, pb, max_size)
        if m.bottom.map == idm
        and tuple(proj.top.map[v] for v in m.top.map) == f.top.map
    ]


def pullback_xmod_morphism(
    h: XModMorphism, phi: Morphism, name: Optional[str] = None
) -> XModMorphism:
    """Apply the base-change functor to a morphism over a fixed base."""
    idm = tuple(range(h.dom.c0.n))
    if h.bottom.map != idm or not same_structure(h.dom.c0, h.cod.c0):
        raise StructuralError(f"pullback of {h.name}: base map must be the identity")
    pd, prd = pullback_xmod(h.dom, phi)
    pc, prc = pullback_xmod(h.cod, phi)
    posc = {(prc.top.map[k], pc.boundary.map[k]): k for k in range(pc.c1.n)}
    tops = []
    for k in range(pd.c1.n):
        j = posc.get((h.top.map[prd.top.map[k]], pd.boundary.map[k]))
        if j is None:
            raise StructuralError(
                f"pullback of {h.name}: image leaves the fiber at "
                f"{pd.c1.elements[k]}"
            )
        tops.append(j)
    name = name or f"pb_{h.name}"
    return XModMorphism(
        name,
        pd,
        pc,
        Morphism(f"top_{name}", pd.c1, pc.c1, tuple(tops)),
        Morphism(f"id_{pd.c0.name}", pd.c0, pc.c0, tuple(range(pd.c0.n))),
    )


def preimage_xmod(
    phi: Morphism, indices: tuple[int, ...], name: Optional[str] = None
) -> CrossedModule:
    """Inclusion module of the preimage of a codomain subset under phi."""
    if not is_morphism(phi):
        raise StructuralError(f"preimage along {phi.name}: not a morphism")
    idx = set(indices)
    for i in idx:
        if not 0 <= i < phi.cod.n:
            raise StructuralError(f"preimage along {phi.name}: index {i} out of range")
    pre = tuple(i for i in range(phi.dom.n) if phi.map[i] in idx)
    return inclusion_xmod(phi.dom, pre, name=name or f"pre_{phi.name}")


def pullback_cat1(
    c: Cat1Object, phi: Morphism, name: Optional[str] = None
) -> tuple[Cat1Object, Cat1Morphism]:
    """Pull a split object back along a morphism into its base."""
    if not same_structure(phi.cod, c.base):
        raise StructuralError(
            f"pullback of {c.name}: {phi.name} does not land in its base"
        )
    if not is_morphism(phi):
        raise StructuralError(f"pullback of {c.name}: {phi.name} is not a morphism")
    name = name or f"pb_{c.name}_{phi.name}"
    t, r = phi.dom, c.big
    triples = [
        (q1, k, q2)
        for q1 in range(t.n)
        for k in range(r.n)
        for q2 in range(t.n)
        if phi.map[q1] == c.src.map[k] and phi.map[q2] == c.tgt.map[k]
    ]
    if not triples:
        raise StructuralError(f"pullback of {c.name}: empty carrier")
    pos = {trip: j for j, trip in enumerate(triples)}
    ids = tuple(
        f"({t.elements[q1]},{r.elements[k]},{t.elements[q2]})" for q1, k, q2 in triples
    )

    def located(trip, ctx):
        j = pos.get(trip)
        if j is None:
            raise StructuralError(f"pullback of {c.name}: {ctx} leaves the carrier")
        return j

    add = tuple(
        tuple(
            located(
                (t.add[a1][b1], r.add[ak][bk], t.add[a2][b2]),
                "addition",
            )
            for b1, bk, b2 in triples
        )
        for a1, ak, a2 in triples
    )
    neg = tuple(
        located((t.neg[q1], r.neg[k], t.neg[q2]), "negation") for q1, k, q2 in triples
    )
    star = {
        sym: tuple(
            tuple(
                located(
                    (t.star[sym][a1][b1], r.star[sym][ak][bk], t.star[sym][a2][b2]),
                    f"the {sym} table",
                )
                for b1, bk, b2 in triples
            )
            for a1, ak, a2 in triples
        )
        for sym in r.profile.binary_symbols()
    }
    omega = {
        sym: tuple(
            located(
                (t.omega[sym][q1], r.omega[sym][k], t.omega[sym][q2]),
                f"the {sym} table",
            )
            for q1, k, q2 in triples
        )
        for sym in r.profile.unary_symbols()
    }
    big = make_structure(f"big_{name}", r.profile, ids, add, neg, star, omega)
    src = Morphism(f"src_{name}", big, t, tuple(q1 for q1, _, _ in triples))
    tgt = Morphism(f"tgt_{name}", big, t, tuple(q2 for _, _, q2 in triples))
    embed = Morphism(
        f"embed_{name}",
        t,
        big,
        tuple(
            located((q, c.embed.map[phi.map[q]], q), "the embedding")
            for q in range(t.n)
        ),
    )
    pc = make_cat1(name, embed, src, tgt)
    proj = Cat1Morphism(
        f"proj_{name}",
        pc,
        c,
        Morphism(f"pi_{name}", big, r, tuple(k for _, k, _ in triples)),
        Morphism(phi.name, t, c.base, phi.map),
    )
    return pc, proj


def cat1_pullback_mediator(
    pc: Cat1Object, proj: Cat1Morphism, g: Cat1Morphism
) -> Cat1Morphism:
    """Unique fill-in for a square onto the pulled-back split object."""
    if not (
        same_structure(g.cod.big, proj.cod.big)
        and same_structure(g.cod.base, proj.cod.base)
    ):
        raise StructuralError(f"mediator for {g.name}: codomain differs")
    if g.base_map.map != proj.base_map.map or not same_structure(g.dom.base, pc.base):
        raise StructuralError(f"mediator for {g.name}: base change does not match")
    pos = {
        (pc.src.map[j], proj.big_map.map[j], pc.tgt.map[j]): j for j in range(pc.big.n)
    }
    maps = []
    for k in range(g.dom.big.n):
        j = pos.get((g.dom.src.map[k], g.big_map.map[k], g.dom.tgt.map[k]))
        if j is None:
            raise StructuralError(
                f"mediator for {g.name}: no carrier element matches "
                f"{g.dom.big.elements[k]}"
            )
        maps.append(j)
    return Cat1Morphism(
        f"med_{g.name}",
        g.dom,
        pc,
        Morphism(f"med_{g.name}", g.dom.big, pc.big, tuple(maps)),
        Morphism(f"id_{pc.base.name}", g.dom.base, pc.base, tuple(range(pc.base.n))),
    )


def cat1_pullback_mediators(
    pc: Cat1Object,
    proj: Cat1Morphism,
    g: Cat1Morphism,
    max_size: int = DEFAULT_MAX_SIZE,
) -> list[Cat1Morphism]:
    """All morphisms into the pullback that solve g's square, by scan."""
    idm = tuple(range(pc.base.n))
    return [
        m
        for m in enumerate_cat1_morphisms(g.dom, pc, max_size)
        if m.base_map.map == idm
        and tuple(proj.big_map.map[v] for v in m.big_map.map) == g.big_map.map
    ]


def square_commutes(
    x: CrossedModule, phi: Morphism, max_size: int = DEFAULT_MAX_SIZE
) -> Report:
    """Compare pulling back before and after translating to a split object.

    Both routes are verified, then an invertible comparison morphism is
    searched for; its images are printed in the passing detail.
    """
    pbx, _ = pullback_xmod(x, phi)
    a = xmod_to_cat1(pbx)
    b, _ = pullback_cat1(xmod_to_cat1(x), phi)
    items = [
        merge_pre("route-xmod-first", verify_cat1(a)),
        merge_pre("route-cat1-first", verify_cat1(b)),
    ]
    iso = find_cat1_isomorphism(a, b, max_size)
    if iso is None:
        items.append(
            CheckItem("isomorphic", False, (), "no invertible comparison found")
        )
    else:
        bigs = " ".join(b.big.elements[v] for v in iso.big_map.map)
        bases = " ".join(b.base.elements[v] for v in iso.base_map.map)
        items.append(
            CheckItem("isomorphic", True, (), f"big images: {bigs}; base images: {bases}")
        )
    return Report(f"square {x.name} along {phi.name}", tuple(items))
