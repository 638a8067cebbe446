"""Shared independent oracles.

These builders recompute small structures from first principles (modular
arithmetic, permutation composition, truncated polynomials) so tests can
compare package constructions against something the package did not
produce.
"""

import itertools

import pytest

from xmodkit.profiles import get_profile
from xmodkit.structures import Morphism, make_structure

PERMS3 = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
PERM_IDS = ("e", "r", "r2", "s", "rs", "r2s")


def oracle_cyclic(n, name=None):
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    neg = tuple((-i) % n for i in range(n))
    return make_structure(
        name or f"z{n}", get_profile("group"), tuple(str(i) for i in range(n)), add, neg, {}, {}
    )


def oracle_s3():
    idx = {p: i for i, p in enumerate(PERMS3)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))  # noqa: E731
    add = tuple(tuple(idx[compose(p, q)] for q in PERMS3) for p in PERMS3)
    inv = tuple(idx[tuple(sorted(range(3), key=lambda i: p[i]))] for p in PERMS3)
    return make_structure("s3", get_profile("group"), PERM_IDS, add, inv, {}, {})


def oracle_poly(p, name=None):
    """F_p[x]/(x^2) from scratch; element (a0, a1) is a0 + a1*x, a1-major order."""
    elems = [(a0, a1) for a1 in range(p) for a0 in range(p)]
    idx = {e: i for i, e in enumerate(elems)}

    def pid(a0, a1):
        if a0 == 0 and a1 == 0:
            return "0"
        parts = []
        if a0:
            parts.append(str(a0))
        if a1:
            parts.append("x" if a1 == 1 else f"{a1}x")
        return "+".join(parts)

    ids = tuple(pid(a0, a1) for (a0, a1) in elems)
    add = tuple(
        tuple(idx[((a0 + b0) % p, (a1 + b1) % p)] for (b0, b1) in elems) for (a0, a1) in elems
    )
    neg = tuple(idx[((-a0) % p, (-a1) % p)] for (a0, a1) in elems)
    mul = tuple(
        tuple(idx[((a0 * b0) % p, (a0 * b1 + a1 * b0) % p)] for (b0, b1) in elems)
        for (a0, a1) in elems
    )
    omega = {
        f"s{k}": tuple(idx[((k * a0) % p, (k * a1) % p)] for (a0, a1) in elems) for k in range(p)
    }
    return make_structure(
        name or f"f{p}x", get_profile(f"comm-algebra-f{p}"), ids, add, neg, {"mul": mul}, omega
    )


def brute_force_morphisms(a, b):
    """Oracle: scan all |b|^|a| maps, checking table preservation directly."""
    out = []
    syms = a.profile.binary_symbols()
    usyms = a.profile.unary_symbols()
    for m in itertools.product(range(b.n), repeat=a.n):
        if m[a.zero] != b.zero:
            continue
        if any(m[a.add[i][j]] != b.add[m[i]][m[j]] for i in range(a.n) for j in range(a.n)):
            continue
        bad = False
        for sym in syms:
            if any(
                m[a.star[sym][i][j]] != b.star[sym][m[i]][m[j]]
                for i in range(a.n)
                for j in range(a.n)
            ):
                bad = True
                break
        if bad:
            continue
        for sym in usyms:
            if any(m[a.omega[sym][i]] != b.omega[sym][m[i]] for i in range(a.n)):
                bad = True
                break
        if not bad:
            out.append(m)
    return sorted(out)


def hom(name, a, b, images):
    return Morphism(name, a, b, tuple(images))


@pytest.fixture
def z2():
    return oracle_cyclic(2)


@pytest.fixture
def z3():
    return oracle_cyclic(3)


@pytest.fixture
def z4():
    return oracle_cyclic(4)


@pytest.fixture
def s3():
    return oracle_s3()


@pytest.fixture
def f2x():
    return oracle_poly(2)
