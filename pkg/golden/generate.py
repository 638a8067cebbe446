"""Regenerate the golden input files from the example catalogue.

Run from the repository root:

    python3 golden/generate.py

Every file is written in canonical form, so regeneration is a no-op
unless the catalogue itself changed.
"""

from pathlib import Path

from xmodkit.actions import make_action
from xmodkit.io import (
    save_action,
    save_cat1,
    save_morphism,
    save_structure,
    save_xmod,
    save_xmodmorphism,
)
from xmodkit.morphisms import identity_morphism
from xmodkit.structures import Morphism
from xmodkit.xmod import XModMorphism
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

HERE = Path(__file__).resolve().parent


def main() -> None:
    z2, z3, z4 = make_cyclic(2), make_cyclic(3), make_cyclic(4)
    f2x = make_truncated_poly(2)
    for s in (
        z2,
        z3,
        z4,
        make_symmetric3(),
        f2x,
        make_truncated_poly(3),
        make_lie2(3),
        make_leibniz2(2),
        make_dialgebra(2),
    ):
        save_structure(s, HERE / f"{s.name}.mci")

    save_morphism(Morphism("double", z2, z4, (0, 2)), HERE / "double.mci")
    save_morphism(Morphism("mod2", z4, z2, (0, 1, 0, 1)), HERE / "mod2.mci")
    save_morphism(identity_morphism(z4), HERE / "id_z4.mci")
    save_morphism(identity_morphism(f2x), HERE / "id_f2x.mci")
    save_morphism(Morphism("neg_z4", z4, z4, z4.neg), HERE / "neg_z4.mci")

    save_action(
        make_action("inv_z2_z3", z2, z3, ((0, 1, 2), (0, 2, 1)), {}),
        HERE / "inv_z2_z3.mci",
    )

    zoo = make_standard_xmods()
    for xm in zoo.values():
        save_xmod(xm, HERE / f"{xm.name}.mci")
    for c in make_standard_cat1s().values():
        save_cat1(c, HERE / f"{c.name}.mci")

    xm, term = zoo["xm_z2_z4"], zoo["xm_terminal_z4"]
    save_xmodmorphism(
        XModMorphism(
            "same", xm, xm, identity_morphism(xm.c1), identity_morphism(xm.c0)
        ),
        HERE / "same.mci",
    )
    save_xmodmorphism(
        XModMorphism(
            "flip",
            xm,
            xm,
            identity_morphism(xm.c1),
            Morphism("neg_z4", xm.c0, xm.c0, xm.c0.neg),
        ),
        HERE / "flip.mci",
    )
    save_xmodmorphism(
        XModMorphism("collapse", xm, term, xm.boundary, identity_morphism(xm.c0)),
        HERE / "collapse.mci",
    )
    save_xmodmorphism(
        XModMorphism(
            "idterm",
            term,
            term,
            identity_morphism(term.c1),
            identity_morphism(term.c0),
        ),
        HERE / "idterm.mci",
    )


if __name__ == "__main__":
    main()
