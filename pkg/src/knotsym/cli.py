"""Command-line interface.

Exit codes: 0 success, 2 argument errors, 3 classification errors
(including representations that are not knot actions), 4 numeric
resolution errors.  --json switches every subcommand to a
machine-readable object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ArgumentError, ClassificationError, InadmissiblePair, KnotSymError,
    NotAKnotAction, ResolutionError,
)
from . import constructions, geometry, symtypes
from .circlemaps import CircleMapLift, rotation_number
from .geometry import KnotCurve, MatrixAction, gauss_linking
from .orthrep import rep_from_string
from .symtypes import SnappyProfile, snappy_decide, type_from_string
from .zmod import parse_group

EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_CLASSIFICATION = 3
EXIT_RESOLUTION = 4


def _emit(args, payload, text):
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def _type_payload(t):
    payload = {
        "type": str(t),
        "name": t.name,
        "params": list(t.params),
        "group": str(t.group),
        "prime_admissible": t.prime_admissible,
        "good_diagram": t.good_diagram,
    }
    if t.is_order2:
        knot_dim, sphere_dim = t.fixed_dims()
        payload["fixed_dims"] = {"knot": knot_dim, "sphere": sphere_dim}
    elif t.name in symtypes.DIHEDRAL_NAMES:
        sig, rho_sig = t.reflection_action_names()
        payload["rho_type"] = t.rho_action_name()
        payload["sigma_type"] = sig
        payload["rho_sigma_type"] = rho_sig
        payload["order2_name"] = t.order2_name()
    else:
        payload["order2_name"] = t.order2_name()
    return payload


_FIX_NAMES = {-1: "empty", 0: "S0", 1: "S1", 2: "S2"}


def _cmd_enumerate(args):
    group = parse_group(args.group)
    types = symtypes.admissible_types(group)
    rows = [_type_payload(t) for t in types]
    if args.json:
        return _emit(args, {"group": str(group), "types": rows}, "")

    def yn(flag):
        return "yes" if flag else "no"

    lines = [f"admissible symmetry types for {group}"]
    if types and types[0].is_order2:
        header = (f"{'type':<10} {'fix(knot)':<10} {'fix(sphere)':<12} "
                  f"{'prime':<6} {'good diagram':<13}")
        lines += [header, "-" * len(header)]
        for t in types:
            k, s = t.fixed_dims()
            lines.append(f"{str(t):<10} {_FIX_NAMES[k]:<10} "
                         f"{_FIX_NAMES[s]:<12} {yn(t.prime_admissible):<6} "
                         f"{yn(t.good_diagram):<13}")
    elif group.is_cyclic:
        header = (f"{'type':<16} {'order-2 name':<13} {'prime':<6} "
                  f"{'good diagram':<13}")
        lines += [header, "-" * len(header)]
        for t in types:
            lines.append(f"{str(t):<16} {t.order2_name():<13} "
                         f"{yn(t.prime_admissible):<6} {yn(t.good_diagram):<13}")
    else:
        header = (f"{'type':<16} {'rho':<6} {'sigma':<6} {'rho*sigma':<10} "
                  f"{'prime':<6} {'good diagram':<13}")
        lines += [header, "-" * len(header)]
        for t in types:
            sig, rho_sig = t.reflection_action_names()
            lines.append(f"{str(t):<16} {t.rho_action_name():<6} {sig:<6} "
                         f"{rho_sig:<10} {yn(t.prime_admissible):<6} "
                         f"{yn(t.good_diagram):<13}")
    lines.append(f"total: {len(types)}")
    return _emit(args, None, "\n".join(lines))


def _cmd_classify(args):
    r = rep_from_string(args.rep)
    t = symtypes.classify(r)
    return _emit(
        args,
        {"rep": r.text(), **_type_payload(t)},
        f"{r.text()} -> {t}",
    )


def _cmd_restrict(args):
    t = type_from_string(args.type)
    if t.group.is_cyclic and t.group.n > 2:
        if args.r is not None:
            raise ArgumentError("--r applies only to dihedral restrictions")
        out = symtypes.restrict_cyclic(t, args.d)
    elif t.group.is_dihedral or t.name in symtypes.DIHEDRAL_NAMES:
        if args.r is None:
            raise ArgumentError("dihedral restriction needs --r")
        out = symtypes.restrict_dihedral(t, args.d, args.r)
    else:
        raise ArgumentError(f"{t} has no proper restrictions")
    return _emit(
        args,
        {"input": str(t), "d": args.d, "r": args.r, **_type_payload(out)},
        f"{t} restricted (d={args.d}"
        + (f", r={args.r}" if args.r is not None else "")
        + f") -> {out}",
    )


def _cmd_detect(args):
    action = MatrixAction.load(args.action)
    curve = KnotCurve.load(args.curve)
    report = geometry.detect_report(action, curve, samples=args.samples)
    meas = {k: v for k, v in report.measurements.items()}
    meas_text = ", ".join(f"{k}={v}" for k, v in sorted(meas.items()))
    return _emit(
        args,
        {**_type_payload(report.type), "measurements":
         {k: (list(v) if isinstance(v, tuple) else v) for k, v in meas.items()}},
        f"detected {report.type} ({meas_text})",
    )


def _cmd_link(args):
    c1 = KnotCurve.load(args.curve_a)
    c2 = KnotCurve.load(args.curve_b)
    result = gauss_linking(c1, c2, samples=args.samples)
    return _emit(
        args,
        {"linking": result.value, "residual": result.residual,
         "samples": result.samples},
        f"{result.value} (residual {result.residual:.2e} "
        f"at {result.samples} samples)",
    )


def _cmd_torus(args):
    curve = geometry.torus_knot(args.p, args.q)
    payload = {"p": args.p, "q": args.q}
    text = [f"torus knot ({args.p}, {args.q})"]
    if args.out:
        curve.save(args.out, count=args.samples or 1024)
        payload["curve_file"] = args.out
        text.append(f"curve written to {args.out}")
    if args.n:
        t = constructions.torus_symmetry_structure(args.p, args.q, args.n)
        payload.update(_type_payload(t))
        text.append(f"declared D{args.n} structure: {t}")
    return _emit(args, payload, "\n".join(text))


def _cmd_snasi(args):
    single = constructions.snasi_single_component(args.n, args.a)
    payload = {"n": args.n, "a": args.a, "single_component": single}
    if single:
        t = constructions.snasi_declared_type(args.n, args.a)
        payload.update(_type_payload(t))
        payload["axis_linking"] = constructions.snasi_axis_linking(args.n, args.a)
        text = (f"single component: yes; declared type {t} "
                f"(axis linking {args.a})")
    else:
        text = "single component: no"
    return _emit(args, payload, text)


def _cmd_rotnum(args):
    f = CircleMapLift.load(args.map)
    result = rotation_number(f, iterations=args.iters)
    snapped = str(result.snapped) if result.snapped is not None else None
    return _emit(
        args,
        {"value": result.value, "error_bound": result.error_bound,
         "snapped": snapped},
        f"rotation number {result.value:.12f} "
        f"(error bound {result.error_bound:.2e}, snapped: {snapped})",
    )


def _cmd_snappy_decide(args):
    cusp = None
    if args.cusp is not None:
        parts = args.cusp.split(",")
        if len(parts) != 2:
            raise ArgumentError(f"--cusp expects 'x,y', got {args.cusp!r}")
        cusp = (int(parts[0]), int(parts[1]))
    profile = SnappyProfile(
        group_shape=args.shape,
        order=args.order,
        invertible=args.invertible,
        amphichiral=args.amphichiral,
        cusp_action=cusp,
    )
    names = sorted(snappy_decide(profile))
    return _emit(
        args,
        {"types": names},
        "possible types: " + (", ".join(names) if names else "(none)"),
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="knotsym",
        description="Classify, detect and construct finite cyclic and "
        "dihedral knot symmetries.",
    )
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list admissible types for a group")
    p.add_argument("--group", required=True, help="C<n> or D<n>")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="classify a representation string")
    p.add_argument("--rep", required=True,
                   help="e.g. 'C6: w[1]+w[sign]+1'")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("restrict", help="restrict a type to a subgroup")
    p.add_argument("--type", required=True, help="e.g. 'Per(1)/C6'")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("detect", help="detect the type of an invariant curve")
    p.add_argument("--action", required=True, help="matrix action file")
    p.add_argument("--curve", required=True, help="curve file")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("link", help="Gauss linking number of two curves")
    p.add_argument("--curve-a", required=True)
    p.add_argument("--curve-b", required=True)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=_cmd_link)

    p = sub.add_parser("torus", help="torus knot curve and its structure")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None, help="write the curve file here")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=_cmd_torus)

    p = sub.add_parser("snasi", help="strand-closure verdict and type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=_cmd_snasi)

    p = sub.add_parser("rotnum", help="rotation number of a circle map file")
    p.add_argument("--map", required=True)
    p.add_argument("--iters", type=int, default=1024)
    p.set_defaults(func=_cmd_rotnum)

    p = sub.add_parser("snappy-decide",
                       help="type families from symmetry-group data")
    p.add_argument("--shape", required=True,
                   choices=["trivial", "cyclic", "dihedral"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--invertible", action="store_true")
    p.add_argument("--amphichiral", action="store_true")
    p.add_argument("--cusp", default=None, help="x,y in {-1,1}")
    p.set_defaults(func=_cmd_snappy_decide)

    return parser


def _error_payload(kind, exc):
    payload = {"error": kind, "message": str(exc)}
    if isinstance(exc, NotAKnotAction):
        payload["family"] = exc.family
        payload["rule"] = exc.rule
    if isinstance(exc, InadmissiblePair):
        payload["rule"] = exc.rule
    return payload


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotAKnotAction, InadmissiblePair, ClassificationError) as exc:
        payload = _error_payload("classification", exc)
        if args.json:
            json.dump(payload, sys.stdout, indent=2, sort_keys=True)
            sys.stdout.write("\n")
        else:
            sys.stderr.write(f"classification error: {exc}\n")
        return EXIT_CLASSIFICATION
    except ResolutionError as exc:
        payload = _error_payload("resolution", exc)
        if args.json:
            json.dump(payload, sys.stdout, indent=2, sort_keys=True)
            sys.stdout.write("\n")
        else:
            sys.stderr.write(f"resolution error: {exc}\n")
        return EXIT_RESOLUTION
    except (ArgumentError, OSError, KnotSymError) as exc:
        payload = _error_payload("argument", exc)
        if args.json:
            json.dump(payload, sys.stdout, indent=2, sort_keys=True)
            sys.stdout.write("\n")
        else:
            sys.stderr.write(f"argument error: {exc}\n")
        return EXIT_ARGUMENT


if __name__ == "__main__":
    sys.exit(main())
