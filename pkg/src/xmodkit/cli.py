"""Command line front end.

Two families of subcommands share fixed conventions:

* verification commands (verify, check-*, check-universal, square-check)
  print a report to stdout and exit 0 when every item passed, 1 otherwise;
* construction commands (semidirect, to-cat1, to-xmod, limit, pullback-*)
  first verify their inputs, then print the canonical serialization of the
  built object to stdout and exit 0; with -o the object and any companion
  morphisms are also written as .mci files next to the output path.

Unreadable or malformed files, size-guard trips, and other structural
problems print an ERROR line to stderr and exit 2.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from .actions import DerivedAction, check_derived_action, semidirect_product
from .cat1 import Cat1Object, cat1_to_xmod, verify_cat1, xmod_to_cat1
from .errors import IncompatibleActionError, XmodkitError
from .io import (
    load_action,
    load_any,
    load_cat1,
    load_morphism,
    load_structure,
    load_xmod,
    load_xmodmorphism,
    save_cat1,
    save_structure,
    save_xmod,
    save_xmodmorphism,
    serialize_cat1,
    serialize_structure,
    serialize_xmod,
)
from .limits import direct_product, equalizer, fiber_product
from .morphisms import DEFAULT_MAX_SIZE, UNIVERSAL_MAX_SIZE, morphism_report
from .pullbacks import pullback_cat1, pullback_xmod, square_commutes
from .report import Report
from .structures import Morphism, Structure, verify_structure
from .xmod import (
    CrossedModule,
    XModMorphism,
    slice_initial,
    slice_product,
    slice_pullback,
    slice_terminal,
    verify_universal_cone,
    verify_xmod,
    verify_xmod_morphism,
    xmod_equalizer,
)


def _report_for(obj) -> Report:
    if isinstance(obj, Structure):
        return verify_structure(obj)
    if isinstance(obj, Morphism):
        return morphism_report(obj)
    if isinstance(obj, DerivedAction):
        return check_derived_action(obj)
    if isinstance(obj, CrossedModule):
        return verify_xmod(obj)
    if isinstance(obj, XModMorphism):
        return verify_xmod_morphism(obj)
    return verify_cat1(obj)


def _finish(report: Report) -> int:
    print(report.render())
    return 0 if report.ok else 1


def _gate(*reports: Report) -> int | None:
    """Print the first failing input report and signal a math failure."""
    for rep in reports:
        if not rep.ok:
            print(rep.render())
            return 1
    return None


def _side_path(out: str, suffix: str) -> Path:
    p = Path(out)
    return p.with_name(f"{p.stem}_{suffix}{p.suffix}")


def _emit_structure(s: Structure, out: str | None) -> int:
    sys.stdout.write(serialize_structure(s))
    if out:
        save_structure(s, out)
    return 0


def _emit_xmod(
    xm: CrossedModule,
    out: str | None,
    legs: Sequence[tuple[str, XModMorphism]] = (),
) -> int:
    sys.stdout.write(serialize_xmod(xm))
    if out:
        save_xmod(xm, out)
        for suffix, leg in legs:
            save_xmodmorphism(leg, _side_path(out, suffix))
    return 0


def _emit_cat1(c: Cat1Object, out: str | None) -> int:
    sys.stdout.write(serialize_cat1(c))
    if out:
        save_cat1(c, out)
    return 0


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_verify(args) -> int:
    _, obj = load_any(args.file)
    return _finish(_report_for(obj))


def _cmd_check_action(args) -> int:
    return _finish(check_derived_action(load_action(args.file)))


def _cmd_check_xmod(args) -> int:
    return _finish(verify_xmod(load_xmod(args.file)))


def _cmd_check_cat1(args) -> int:
    return _finish(verify_cat1(load_cat1(args.file)))


def _cmd_semidirect(args) -> int:
    act = load_action(args.file)
    bad = _gate(check_derived_action(act))
    if bad:
        return bad
    prod, _, _, _ = semidirect_product(act)
    return _emit_structure(prod, args.out)


def _cmd_to_cat1(args) -> int:
    xm = load_xmod(args.file)
    bad = _gate(verify_xmod(xm))
    if bad:
        return bad
    return _emit_cat1(xmod_to_cat1(xm), args.out)


def _cmd_to_xmod(args) -> int:
    c = load_cat1(args.file)
    bad = _gate(verify_cat1(c))
    if bad:
        return bad
    return _emit_xmod(cat1_to_xmod(c), args.out)


_LIMIT_ARITY = {
    "product": 2,
    "pullback": 2,
    "equalizer": 2,
    "slice-terminal": 1,
    "slice-initial": 1,
    "slice-product": 2,
    "slice-pullback": 2,
    "slice-equalizer": 2,
}


def _cmd_limit(args) -> int:
    kind, files, out = args.kind, args.files, args.out
    if len(files) != _LIMIT_ARITY[kind]:
        raise XmodkitError(
            f"limit {kind} takes {_LIMIT_ARITY[kind]} file(s), got {len(files)}"
        )

    if kind == "product":
        a, b = load_structure(files[0]), load_structure(files[1])
        bad = _gate(verify_structure(a), verify_structure(b))
        if bad:
            return bad
        prod, _, _ = direct_product(a, b)
        return _emit_structure(prod, out)

    if kind == "pullback":
        f, g = load_morphism(files[0]), load_morphism(files[1])
        bad = _gate(morphism_report(f), morphism_report(g))
        if bad:
            return bad
        fib, _, _ = fiber_product(f, g)
        return _emit_structure(fib, out)

    if kind == "equalizer":
        f, g = load_morphism(files[0]), load_morphism(files[1])
        bad = _gate(morphism_report(f), morphism_report(g))
        if bad:
            return bad
        return _emit_structure(equalizer(f, g).induced, out)

    if kind in ("slice-terminal", "slice-initial"):
        x = load_structure(files[0])
        bad = _gate(verify_structure(x))
        if bad:
            return bad
        make = slice_terminal if kind == "slice-terminal" else slice_initial
        return _emit_xmod(make(x), out)

    if kind == "slice-product":
        x1, x2 = load_xmod(files[0]), load_xmod(files[1])
        bad = _gate(verify_xmod(x1), verify_xmod(x2))
        if bad:
            return bad
        prod, p1, p2 = slice_product(x1, x2)
        return _emit_xmod(prod, out, (("fst", p1), ("snd", p2)))

    if kind == "slice-pullback":
        f, g = load_xmodmorphism(files[0]), load_xmodmorphism(files[1])
        bad = _gate(verify_xmod_morphism(f), verify_xmod_morphism(g))
        if bad:
            return bad
        fib, p1, p2 = slice_pullback(f, g)
        return _emit_xmod(fib, out, (("fst", p1), ("snd", p2)))

    f, g = load_xmodmorphism(files[0]), load_xmodmorphism(files[1])
    bad = _gate(verify_xmod_morphism(f), verify_xmod_morphism(g))
    if bad:
        return bad
    eq, incl = xmod_equalizer(f, g)
    return _emit_xmod(eq, out, (("incl", incl),))


def _cmd_pullback_xmod(args) -> int:
    x = load_xmod(args.xmod)
    phi = load_morphism(args.along)
    bad = _gate(verify_xmod(x), morphism_report(phi))
    if bad:
        return bad
    pb, proj = pullback_xmod(x, phi)
    return _emit_xmod(pb, args.out, (("proj", proj),))


def _cmd_pullback_cat1(args) -> int:
    c = load_cat1(args.cat1)
    phi = load_morphism(args.along)
    bad = _gate(verify_cat1(c), morphism_report(phi))
    if bad:
        return bad
    pc, _ = pullback_cat1(c, phi)
    return _emit_cat1(pc, args.out)


def _cmd_check_universal(args) -> int:
    candidate = load_xmod(args.candidate)
    legs = tuple(load_xmodmorphism(f) for f in args.legs)
    testers = tuple(load_xmod(f) for f in args.testers)
    parallel = (
        tuple(load_xmodmorphism(f) for f in args.parallel)
        if args.parallel
        else None
    )
    return _finish(
        verify_universal_cone(
            args.kind, candidate, legs, testers, parallel, max_size=args.max_size
        )
    )


def _cmd_square_check(args) -> int:
    x = load_xmod(args.xmod)
    phi = load_morphism(args.along)
    return _finish(square_commutes(x, phi, max_size=args.max_size))


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xmodkit",
        description=(
            "Verify and build finite groups-with-operations, derived actions, "
            "crossed modules, and split objects stored as .mci files."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("verify", _cmd_verify, "verify any .mci file according to its kind")
    p.add_argument("file")

    p = add("check-action", _cmd_check_action, "check the derived action conditions")
    p.add_argument("file")
    p = add("check-xmod", _cmd_check_xmod, "check the crossed module laws")
    p.add_argument("file")
    p = add("check-cat1", _cmd_check_cat1, "check the split object laws")
    p.add_argument("file")

    p = add("semidirect", _cmd_semidirect, "build the semidirect product of an action")
    p.add_argument("file")
    p.add_argument("-o", "--out")

    p = add("to-cat1", _cmd_to_cat1, "translate a crossed module to a split object")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p = add("to-xmod", _cmd_to_xmod, "translate a split object to a crossed module")
    p.add_argument("file")
    p.add_argument("-o", "--out")

    p = add("limit", _cmd_limit, "build a limit of structures or crossed modules")
    p.add_argument("kind", choices=sorted(_LIMIT_ARITY))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--out")

    p = add("pullback-xmod", _cmd_pullback_xmod, "pull a crossed module back along a base morphism")
    p.add_argument("--xmod", required=True)
    p.add_argument("--along", required=True)
    p.add_argument("-o", "--out")

    p = add("pullback-cat1", _cmd_pullback_cat1, "pull a split object back along a base morphism")
    p.add_argument("--cat1", required=True)
    p.add_argument("--along", required=True)
    p.add_argument("-o", "--out")

    p = add(
        "check-universal",
        _cmd_check_universal,
        "count mediating morphisms into a candidate limit",
    )
    p.add_argument("kind", choices=["terminal", "initial", "product", "pullback", "equalizer"])
    p.add_argument("candidate")
    p.add_argument("--legs", nargs="*", default=[])
    p.add_argument("--parallel", nargs=2, default=None)
    p.add_argument("--testers", nargs="*", default=[])
    p.add_argument("--max-size", type=int, default=UNIVERSAL_MAX_SIZE)

    p = add(
        "square-check",
        _cmd_square_check,
        "compare pulling back before and after translating to a split object",
    )
    p.add_argument("--xmod", required=True)
    p.add_argument("--along", required=True)
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except IncompatibleActionError as exc:
        where = f" at ({', '.join(str(w) for w in exc.witness)})" if exc.witness else ""
        print(f"FAIL {exc}{where}")
        return 1
    except XmodkitError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
