"""Command-line interface.

Every command prints JSON on stdout.  Exit codes: 0 success, 1 a check or
claim failed, 2 bad input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import exactlin as el
from .auerbach import AuerbachFamily, lower_auerbach_bases, min_parallelepiped, upper_auerbach_bases
from .errors import (
    CapacityError,
    DegeneratePolytopeError,
    DimensionError,
    InputError,
    InvalidWitnessError,
    SingularMatrixError,
)
from .mvse import construct_nonparallelepipedal, decide, hexagon_regular_equiv
from .paper_suite import run_paper_suite
from .polytope import section2
from .projections import exists_norm_one_projection
from .render import write_section_svg
from .spacefile import load_space

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def family_to_dict(fam: AuerbachFamily) -> dict:
    return {
        "kind": fam.kind,
        "extremal_value": el.format_rational(fam.extremal_value),
        "ties_flag": fam.ties_flag,
        "bases": [el.format_matrix(b.vectors) for b in fam.bases],
    }


def _parse_vectors(text: str) -> list[el.Vector]:
    """``"1,0,0;0,1,0"`` -> two vectors."""
    try:
        return [el.vector(part.split(",")) for part in text.split(";") if part.strip()]
    except InputError as exc:
        raise InputError(f"bad vector list {text!r}: {exc}") from None


def _pair_section(space, i: int, j: int, standard: bool):
    if standard:
        cols = list(el.identity(space.dim))
    else:
        cols = min_parallelepiped(space)[0].columns
    if not (0 <= i < space.dim and 0 <= j < space.dim) or i == j:
        raise InputError(f"invalid pair ({i}, {j}) for a {space.dim}-dimensional space")
    return section2(space.ball, cols[i], cols[j])


def cmd_decide(args) -> int:
    space = load_space(args.space)
    report = decide(space)
    _emit(report.to_dict())
    if args.svg and report.witness is not None:
        w = report.witness
        cols = w.basis.columns
        i, j = w.basis_pair
        write_section_svg(section2(space.ball, cols[i], cols[j]), args.svg, f"{space.name}: pair {i},{j}")
    return EXIT_OK


def cmd_construct(args) -> int:
    space = load_space(args.space)
    report = decide(space)
    if report.witness is None:
        raise InvalidWitnessError(f"{space.name} has only parallelepipedal MVSE; nothing to construct")
    cand = construct_nonparallelepipedal(space, report.witness)
    _emit({"space": space.name, "decision": report.to_dict(), "candidate": cand.to_dict()})
    return EXIT_OK if cand.checks.all_passed else EXIT_FAILED


def cmd_auerbach(args) -> int:
    space = load_space(args.space)
    fam = lower_auerbach_bases(space) if args.lower else upper_auerbach_bases(space)
    _emit({"space": space.name, **family_to_dict(fam)})
    return EXIT_OK


def cmd_section(args) -> int:
    space = load_space(args.space)
    sec = _pair_section(space, args.i, args.j, args.standard)
    triple = hexagon_regular_equiv(sec)
    _emit({
        "space": space.name,
        "plane": [el.format_vector(sec.x1), el.format_vector(sec.x2)],
        "vertices": el.format_matrix(sec.verts2d),
        "regular_hexagon": triple is not None,
    })
    return EXIT_OK


def cmd_render(args) -> int:
    space = load_space(args.space)
    sec = _pair_section(space, args.i, args.j, args.standard)
    write_section_svg(sec, args.out, f"{space.name}: pair {args.i},{args.j}")
    _emit({"space": space.name, "out": args.out, "vertices": len(sec.verts2d)})
    return EXIT_OK


def cmd_project(args) -> int:
    space = load_space(args.space)
    vectors = _parse_vectors(args.subspace)
    if args.ambient:
        if space.embedding is None:
            raise InputError("--ambient needs a space embedded in l_inf^m")
        vectors = [space.embedding.to_coords(v) for v in vectors]
    report = exists_norm_one_projection(space, vectors)
    _emit({"space": space.name, **report.to_dict()})
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    result = run_paper_suite()
    _emit(result.to_dict())
    return EXIT_OK if result.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="auerbach-mvse",
        description="Exact MVSE shape decisions for polyhedral normed spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_decide(p):
        p.add_argument("space")
        p.add_argument("--svg", help="write the witness section as SVG")
        p.set_defaults(func=cmd_decide)

    def add_construct(p):
        p.add_argument("space")
        p.set_defaults(func=cmd_construct)

    add_decide(sub.add_parser("decide", help="decide whether a non-parallelepipedal MVSE exists"))
    add_construct(sub.add_parser("construct", help="build the zonotope MVSE from the decision witness"))

    mv = sub.add_parser("mvse", help="decide / construct (grouped form)")
    mv_sub = mv.add_subparsers(dest="mvse_command", required=True)
    add_decide(mv_sub.add_parser("decide"))
    add_construct(mv_sub.add_parser("construct"))

    p = sub.add_parser("auerbach", help="enumerate upper or lower Auerbach bases")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--upper", action="store_true")
    which.add_argument("--lower", action="store_true")
    p.add_argument("space")
    p.set_defaults(func=cmd_auerbach)

    for name, func, helptext in (
        ("section", cmd_section, "2-D section spanned by two vectors of the minimal parallelepiped basis"),
        ("render", cmd_render, "draw that section as SVG"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("space")
        p.add_argument("i", type=int)
        p.add_argument("j", type=int)
        if name == "render":
            p.add_argument("out")
        p.add_argument("--standard", action="store_true", help="use standard basis vectors instead")
        p.set_defaults(func=func)

    p = sub.add_parser("project", help="decide whether a norm-one projection onto a subspace exists")
    p.add_argument("--space", required=True)
    p.add_argument("--subspace", required=True, help='basis vectors, e.g. "1,0,0;0,1,0"')
    p.add_argument("--ambient", action="store_true", help="vectors are in l_inf^m coordinates")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify-paper", help="recompute the fixed list of example claims")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, DimensionError, DegeneratePolytopeError, SingularMatrixError, InvalidWitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
