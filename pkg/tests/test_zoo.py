"""Stock structures and modules, compared against the shared oracles.

Every builder output is checked against an independent recomputation
(modular arithmetic, permutation composition, coefficient formulas) and
then run through the full law verifier.
"""

import pytest

from xmodkit.cat1 import cat1_to_xmod, verify_cat1
from xmodkit.errors import StructuralError
from xmodkit.structures import verify_structure
from xmodkit.xmod import find_xmod_isomorphism, verify_xmod
from xmodkit.zoo import (
    make_cyclic,
    make_dialgebra,
    make_leibniz2,
    make_lie2,
    make_standard_cat1s,
    make_standard_xmods,
    make_symmetric3,
    make_truncated_poly,
)

from conftest import oracle_cyclic, oracle_poly, oracle_s3


def test_cyclic_matches_oracle():
    for n in (1, 2, 3, 4, 6):
        z = make_cyclic(n)
        o = oracle_cyclic(n)
        assert z.name == f"z{n}"
        assert z.elements == o.elements
        assert z.add == o.add
        assert z.neg == o.neg
        assert verify_structure(z).ok


def test_symmetric3_matches_oracle():
    s = make_symmetric3()
    o = oracle_s3()
    assert s.elements == ("e", "r", "r2", "s", "rs", "r2s")
    assert s.add == o.add
    assert s.neg == o.neg
    assert verify_structure(s).ok


def test_truncated_poly_matches_oracle():
    for p in (2, 3, 5):
        t = make_truncated_poly(p)
        o = oracle_poly(p)
        assert t.name == f"f{p}x"
        assert t.elements == o.elements
        assert t.add == o.add
        assert t.star["mul"] == o.star["mul"]
        assert t.omega == o.omega
        assert verify_structure(t).ok


def test_truncated_poly_cubic():
    t = make_truncated_poly(2, 3)
    assert t.n == 8
    assert t.elements == ("0", "1", "x", "1+x", "x2", "1+x2", "x+x2", "1+x+x2")
    x, x2 = t.index("x"), t.index("x2")
    assert t.star["mul"][x][x] == x2
    assert t.star["mul"][x][x2] == t.zero
    assert verify_structure(t).ok


def test_lie2_matches_independent_bracket():
    for p in (3, 5):
        g = make_lie2(p)
        assert g.n == p * p
        for i in range(g.n):
            c1, c2 = i % p, i // p
            for j in range(g.n):
                d1, d2 = j % p, j // p
                coef = (c1 * d2 - c2 * d1) % p
                assert g.star["bracket"][i][j] == coef
        assert g.star["bracketop"] == tuple(zip(*g.star["bracket"]))
        rep = verify_structure(g)
        assert rep.ok, rep.render()
    g3 = make_lie2(3)
    assert g3.elements == ("0", "a", "2a", "b", "a+b", "2a+b", "2b", "a+2b", "2a+2b")


def test_leibniz2_matches_independent_bracket():
    for p in (2, 3):
        g = make_leibniz2(p)
        assert g.n == p * p
        for i in range(g.n):
            c1 = i % p
            for j in range(g.n):
                d1 = j % p
                assert g.star["bracket"][i][j] == ((c1 * d1) % p) * p
        rep = verify_structure(g)
        assert rep.ok, rep.render()
    g2 = make_leibniz2(2)
    assert g2.elements == ("0", "a", "b", "a+b")
    assert g2.star["bracket"][1][1] == 2


def test_dialgebra_matches_independent_products():
    g = make_dialgebra(2)
    assert g.elements == ("0", "1", "d", "1+d")
    for i in range(4):
        a, m = i % 2, i // 2
        for j in range(4):
            b, n = j % 2, j // 2
            assert g.star["lprod"][i][j] == ((m * b) % 2) * 2 + (a * b) % 2
            assert g.star["rprod"][i][j] == ((a * n) % 2) * 2 + (a * b) % 2
    assert g.star["lprod"][2][1] == 2
    assert g.star["rprod"][2][1] == 0
    rep = verify_structure(g)
    assert rep.ok, rep.render()


def test_standard_xmods_all_verify():
    zoo = make_standard_xmods()
    assert tuple(zoo) == (
        "xm_z2_z4",
        "xm_ideal_f2x",
        "xm_ideal_f3x",
        "xm_ideal_lie3",
        "xm_ideal_leib2",
        "xm_ideal_dialg2",
        "xm_conj_s3",
        "xm_terminal_z4",
        "xm_initial_z4",
    )
    bad = {k: verify_xmod(v).render() for k, v in zoo.items() if not verify_xmod(v).ok}
    assert not bad, bad
    assert zoo["xm_z2_z4"].boundary.map == (0, 2)
    assert zoo["xm_conj_s3"].c1.elements == ("e", "r", "r2")
    assert zoo["xm_ideal_f3x"].c1.elements == ("0", "x", "2x")
    assert zoo["xm_ideal_lie3"].c1.elements == ("0", "a", "2a")
    assert zoo["xm_terminal_z4"].c1.n == 4
    assert zoo["xm_initial_z4"].c1.n == 1


def test_standard_cat1s_all_verify():
    cats = make_standard_cat1s()
    assert tuple(cats) == (
        "xm_z2_z4",
        "xm_ideal_f2x",
        "xm_ideal_leib2",
        "xm_ideal_dialg2",
        "xm_initial_z4",
    )
    for k, c in cats.items():
        assert c.big.n <= 12, k
        rep = verify_cat1(c)
        assert rep.ok, (k, rep.render())
    assert cats["xm_z2_z4"].big.n == 8
    assert cats["xm_initial_z4"].big.n == 4
    zoo = make_standard_xmods()
    back = cat1_to_xmod(cats["xm_ideal_f2x"])
    assert find_xmod_isomorphism(back, zoo["xm_ideal_f2x"]) is not None


def test_rejects_unsupported_parameters():
    with pytest.raises(StructuralError):
        make_cyclic(0)
    with pytest.raises(StructuralError):
        make_truncated_poly(4)
    with pytest.raises(StructuralError):
        make_lie2(2)
    with pytest.raises(StructuralError):
        make_leibniz2(5)
    with pytest.raises(StructuralError):
        make_dialgebra(3)
