"""Command-line front end.

Exit codes: 0 Yes, 1 No, 2 Unknown, 64 unreadable input or bad usage,
65 arity mismatch or invalid builder parameters.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import builders as B
from .conedraw import cone_slice, slice_csv, slice_svg
from .exact import CapacityError, DimensionError
from .modelio import (
    ModelFormatError,
    certificate_to_dict,
    curve_to_dict,
    dumps,
    load_model,
    parse_class,
    rat_str,
    surface_to_dict,
    to_jsonable,
    verdict_report,
    verdict_to_dict,
)
from .schemecalc import SchemeModel, StratCertificate, de_jong_certificate, doubled_origin_certificate, scheme_tensor_ample, validate_strat_certificate
from .surface import PROPERTIES, Status, SurfaceModel, canonical_report, classify, group_tensor_ample

EXIT_PARSE = 64
EXIT_DATA = 65
EXIT_FOR_STATUS = {Status.YES: 0, Status.NO: 1, Status.UNKNOWN: 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from err


def _surface(ref: str) -> SurfaceModel:
    m = load_model(ref)
    if not isinstance(m, SurfaceModel):
        raise ModelFormatError(f"{ref} is not a surface model")
    return m


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args) -> int:
    m = _surface(args.model)
    d = parse_class(m, args.cls)
    v = classify(m, d, args.property)
    query = {"command": "classify", "model": args.model, "class": d, "class_spec": args.cls, "property": args.property}
    _emit(verdict_report(query, v))
    return EXIT_FOR_STATUS[v.status]


def cmd_build(args) -> int:
    if args.family == "ruled":
        if args.semistable == (args.d is not None):
            raise UsageError("give exactly one of --d and --semistable")
        stab = B.Semistable() if args.semistable else B.Unstable(args.d)
        _emit(surface_to_dict(B.build_ruled(B.RuledData(args.g, args.e, stab))))
    elif args.family == "toric":
        _emit(surface_to_dict(B.build_toric(B.ToricCycle(tuple(args.cycle)))))
    elif args.family == "blowup-p2":
        cfg = B.BlowupP2Config(args.r, B.PointConfig(args.config), args.complete, args.curve_cone)
        _emit(surface_to_dict(B.build_blowup_p2(cfg)))
    elif args.family == "curve":
        comps = [(f"C{i + 1}", d) for i, d in enumerate(args.degrees)]
        _emit(curve_to_dict(B.build_curve(comps)))
    elif args.family == "certificate":
        c = de_jong_certificate() if args.example == "de-jong" else doubled_origin_certificate(args.n)
        _emit(certificate_to_dict(c))
    return 0


def cmd_canonical_report(args) -> int:
    m = _surface(args.model)
    r = canonical_report(m)
    out = {
        "query": {"command": "canonical-report", "model": args.model},
        "status": r.tensor_ample.status.value,
        "big": verdict_to_dict(r.big),
        "antibig": verdict_to_dict(r.anti_big),
        "minus_two_curves": list(r.minus_two_curves),
        "tensor_ample": verdict_to_dict(r.tensor_ample),
    }
    _emit(out)
    return EXIT_FOR_STATUS[r.tensor_ample.status]


def cmd_cones(args) -> int:
    m = _surface(args.model)
    plane = None
    if args.slice:
        parts = args.slice.split(";")
        if len(parts) != 2:
            raise UsageError("--slice takes two class expressions separated by ';'")
        plane = [parse_class(m, p) for p in parts]
    s = cone_slice(m, plane)
    csv_text = slice_csv(s)
    if args.svg:
        Path(args.svg).write_text(slice_svg(s, m.name), encoding="utf-8")
    if args.csv:
        Path(args.csv).write_text(csv_text, encoding="utf-8")
    out = {
        "query": {"command": "cones", "model": args.model},
        "plane": to_jsonable(s.plane),
        "pieces": [{"piece_id": p.piece_id, "label": p.label, "signs": list(p.signs), "rays": to_jsonable(p.rays)} for p in s.pieces],
        "rays": [{"label": r.label, "coords": to_jsonable(r.coords)} for r in s.rays],
    }
    _emit(out)
    return 0


def cmd_group(args) -> int:
    m = _surface(args.model)
    gens = [parse_class(m, g) for g in args.gen]
    v = group_tensor_ample(m, gens)
    query = {"command": "group", "model": args.model, "generators": gens, "generator_specs": list(args.gen)}
    _emit(verdict_report(query, v))
    return EXIT_FOR_STATUS[v.status]


def cmd_nagata(args) -> int:
    m = args.m
    if len(m) != args.r:
        raise DimensionError(f"expected {args.r} multiplicities, got {len(m)}")
    if args.d <= 0 or any(x < 0 for x in m):
        raise UsageError("need d > 0 and nonnegative multiplicities")
    excluded = B.nagata_excluded(args.r, args.d, m)
    _emit({
        "query": {"command": "nagata", "r": args.r, "d": args.d, "m": m},
        "excluded": excluded,
        "lhs": args.r * args.d ** 2,
        "rhs": sum(m) ** 2,
    })
    return 0


def cmd_edge3fold(args) -> int:
    if args.hypersurface is not None:
        r, b = args.hypersurface
        deg, e, d = B.hypersurface_line_params(r, b)
        conormal = B.Conormal(e, d)
    else:
        if args.deg is None:
            raise UsageError("give --deg, or --hypersurface R B")
        deg = args.deg
        if args.semistable:
            if args.e is not None or args.d is not None:
                raise UsageError("--semistable excludes --e and --d")
            conormal = B.Conormal()
        else:
            if args.e is None or args.d is None:
                raise UsageError("give --e and --d, or --semistable")
            conormal = B.Conormal(args.e, args.d)
    result = B.threefold_edge_check(deg, conormal)
    _emit({
        "query": {
            "command": "edge3fold",
            "deg": deg,
            "conormal": "semistable" if not conormal.unstable else {"e": conormal.e, "d": conormal.d},
        },
        "result": result,
    })
    return 0


def cmd_compose(args) -> int:
    s = load_model(args.model)
    if not isinstance(s, SchemeModel):
        raise ModelFormatError(f"{args.model} is not a scheme model")
    v = scheme_tensor_ample(s)
    _emit(verdict_report({"command": "compose", "model": args.model}, v))
    return EXIT_FOR_STATUS[v.status]


def cmd_certify(args) -> int:
    c = load_model(args.model)
    if not isinstance(c, StratCertificate):
        raise ModelFormatError(f"{args.model} is not a certificate")
    v = validate_strat_certificate(c)
    _emit(verdict_report({"command": "certify", "model": args.model}, v))
    return EXIT_FOR_STATUS[v.status]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tensamp", description="Exact positivity and tensor-ampleness verdicts for surface models.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify one class of a surface model")
    c.add_argument("model", help="model file or corpus name")
    c.add_argument("--class", dest="cls", required=True, help="coordinates 'a,b,..' or an expression; use --class=-K for leading minus")
    c.add_argument("--property", choices=PROPERTIES, default="tensample")
    c.set_defaults(func=cmd_classify)

    b = sub.add_parser("build", help="emit a model file for a standard family")
    bs = b.add_subparsers(dest="family", required=True, parser_class=_Parser)
    r = bs.add_parser("ruled")
    r.add_argument("--g", type=int, required=True)
    r.add_argument("--e", type=int, required=True)
    r.add_argument("--d", type=int)
    r.add_argument("--semistable", action="store_true")
    t = bs.add_parser("toric")
    t.add_argument("--cycle", type=_int_list, required=True, help="self-intersections, e.g. 1,1,1")
    bl = bs.add_parser("blowup-p2")
    bl.add_argument("--r", type=int, required=True)
    bl.add_argument("--config", choices=[x.value for x in B.PointConfig], default="general")
    bl.add_argument("--complete", action=argparse.BooleanOptionalAction, default=None,
                    help="declare the negative curve list complete")
    bl.add_argument("--curve-cone", action=argparse.BooleanOptionalAction, default=None,
                    help="declare that the catalog generates the curve cone")
    cv = bs.add_parser("curve")
    cv.add_argument("--degrees", type=_int_list, required=True)
    ce = bs.add_parser("certificate")
    ce.add_argument("example", choices=["de-jong", "doubled-origin"])
    ce.add_argument("--n", type=int, default=2)
    b.set_defaults(func=cmd_build)

    cr = sub.add_parser("canonical-report", help="bigness and tensor-ampleness of the canonical class")
    cr.add_argument("model")
    cr.set_defaults(func=cmd_canonical_report)

    co = sub.add_parser("cones", help="2D slice of the tensor-ample cone pieces")
    co.add_argument("model")
    co.add_argument("--slice", help="two class expressions separated by ';' spanning the plane")
    co.add_argument("--svg", help="write an SVG drawing here")
    co.add_argument("--csv", help="write exact piece rays here")
    co.set_defaults(func=cmd_cones)

    g = sub.add_parser("group", help="tensor-ampleness of the subgroup spanned by classes")
    g.add_argument("model")
    g.add_argument("--gen", action="append", required=True, help="generator class; repeat for several")
    g.set_defaults(func=cmd_group)

    n = sub.add_parser("nagata", help="integer form of the Nagata bound")
    n.add_argument("--r", type=int, required=True)
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--m", type=_int_list, required=True)
    n.set_defaults(func=cmd_nagata)

    e = sub.add_parser("edge3fold", help="edge criterion for a curve blown up in a threefold")
    e.add_argument("--deg", type=int)
    e.add_argument("--e", type=int)
    e.add_argument("--d", type=int)
    e.add_argument("--semistable", action="store_true")
    e.add_argument("--hypersurface", type=int, nargs=2, metavar=("R", "B"),
                   help="special line on a degree-R hypersurface with normal bundle splitting type B")
    e.set_defaults(func=cmd_edge3fold)

    cm = sub.add_parser("compose", help="combine component verdicts of a scheme model")
    cm.add_argument("model")
    cm.set_defaults(func=cmd_compose)

    ct = sub.add_parser("certify", help="validate a stratification certificate")
    ct.add_argument("model")
    ct.set_defaults(func=cmd_certify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModelFormatError, UsageError) as err:
        print(f"tensamp: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionError, CapacityError, ValueError) as err:
        print(f"tensamp: {err}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
