"""Finite limits on plain structures: products, fiber products, equalizers.

All constructions are componentwise on explicit pair carriers. The fiber
product keeps only the pairs where the two legs agree; its tables are the
product tables restricted to that subset, which is closed because the legs
are morphisms.
"""

from __future__ import annotations

from .errors import StructuralError
from .morphisms import is_morphism
from .structures import Morphism, Structure, Subobject, make_structure, subobject


def same_structure(a: Structure, b: Structure) -> bool:
    return a is b or (
        a.profile.name == b.profile.name
        and a.elements == b.elements
        and a.add == b.add
        and a.neg == b.neg
        and a.star == b.star
        and a.omega == b.omega
    )


def _pair_tables(a: Structure, b: Structure, pairs: list[tuple[int, int]]):
    pos = {pr: k for k, pr in enumerate(pairs)}

    def look(p: int, r: int, what: str) -> int:
        k = pos.get((p, r))
        if k is None:
            raise StructuralError(
                f"{what} leaves the pair carrier at ({a.elements[p]},{b.elements[r]})"
            )
        return k

    add = tuple(
        tuple(look(a.add[p][q], b.add[r][s], "add") for q, s in pairs) for p, r in pairs
    )
    neg = tuple(look(a.neg[p], b.neg[r], "neg") for p, r in pairs)
    star = {
        sym: tuple(
            tuple(look(a.star[sym][p][q], b.star[sym][r][s], sym) for q, s in pairs)
            for p, r in pairs
        )
        for sym in a.profile.binary_symbols()
    }
    omega = {
        sym: tuple(look(a.omega[sym][p], b.omega[sym][r], sym) for p, r in pairs)
        for sym in a.profile.unary_symbols()
    }
    ids = tuple(f"({a.elements[p]},{b.elements[r]})" for p, r in pairs)
    return ids, add, neg, star, omega


def direct_product(
    a: Structure, b: Structure, name: str | None = None
) -> tuple[Structure, Morphism, Morphism]:
    """Componentwise product with its two projections."""
    if a.profile.name != b.profile.name:
        raise StructuralError(
            f"product needs one profile, got {a.profile.name} and {b.profile.name}"
        )
    pairs = [(p, r) for p in range(a.n) for r in range(b.n)]
    ids, add, neg, star, omega = _pair_tables(a, b, pairs)
    name = name or f"prod_{a.name}_{b.name}"
    prod = make_structure(name, a.profile, ids, add, neg, star, omega)
    fst = Morphism(f"fst_{name}", prod, a, tuple(p for p, _ in pairs))
    snd = Morphism(f"snd_{name}", prod, b, tuple(r for _, r in pairs))
    return prod, fst, snd


def fiber_product(
    alpha: Morphism, beta: Morphism, name: str | None = None
) -> tuple[Structure, Morphism, Morphism]:
    """Pairs where the two legs agree, with the coordinate projections."""
    if not same_structure(alpha.cod, beta.cod):
        raise StructuralError(
            f"fiber product of {alpha.name} and {beta.name}: codomains differ"
        )
    for leg in (alpha, beta):
        if not is_morphism(leg):
            raise StructuralError(f"fiber product leg {leg.name} is not a morphism")
    a, b = alpha.dom, beta.dom
    if a.profile.name != b.profile.name:
        raise StructuralError(
            f"fiber product needs one profile, got {a.profile.name} and {b.profile.name}"
        )
    pairs = [
        (p, r) for p in range(a.n) for r in range(b.n) if alpha.map[p] == beta.map[r]
    ]
    if not pairs:
        raise StructuralError(
            f"fiber product of {alpha.name} and {beta.name}: empty carrier"
        )
    ids, add, neg, star, omega = _pair_tables(a, b, pairs)
    name = name or f"fib_{a.name}_{b.name}"
    fib = make_structure(name, a.profile, ids, add, neg, star, omega)
    fst = Morphism(f"fst_{name}", fib, a, tuple(p for p, _ in pairs))
    snd = Morphism(f"snd_{name}", fib, b, tuple(r for _, r in pairs))
    return fib, fst, snd


def equalizer(f: Morphism, g: Morphism, name: str | None = None) -> Subobject:
    """Subobject of the shared domain where the parallel pair agrees."""
    if not same_structure(f.dom, g.dom) or not same_structure(f.cod, g.cod):
        raise StructuralError(f"equalizer of {f.name} and {g.name}: pair is not parallel")
    for leg in (f, g):
        if not is_morphism(leg):
            raise StructuralError(f"equalizer leg {leg.name} is not a morphism")
    subset = tuple(i for i in range(f.dom.n) if f.map[i] == g.map[i])
    return subobject(f.dom, subset, name=name or f"eq_{f.name}_{g.name}")
