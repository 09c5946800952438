"""Command-line entry point.

Subcommands: sample, invariants, loci, similarity, circles, moses, svg.
Exit codes: 0 pass, 1 invariant failure, 2 invalid input, 3 degenerate or
internal geometry failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys

from .centers import CenterId, brocard_angle, brocard_circle, circumradius, cot_omega, triangle_center
from .circles import (
    BROCARD_CIRCLE_ERRATUM,
    brocard_circle_radius,
    brocard_circle_radius_table,
    brocard_radius_routes,
    verify_stationarity,
)
from .errors import GeometryError, InvalidAxes, InvalidLambda
from .families import FamilyKind, FamilySpec
from .geometry import DEFAULT_TOL, Point, distance
from .invariants import family_reports, sample_family, scalar_report
from .loci import fit_axis_aligned_ellipse, fit_circle, x2_locus_brocard, x39_locus_closed_form
from .moses import moses_construct
from .similarity import brocard_to_homothetic, homothetic_to_brocard, pair_condition_residual
from .svg import DEFAULT_MARKS, family_svg, similarity_svg

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _num(v: float) -> str:
    # shortest string that round-trips
    return repr(float(v))


def _centers(spec: str | None) -> list[CenterId]:
    if not spec:
        return []
    try:
        return [CenterId(s.strip().upper()) for s in spec.split(",") if s.strip()]
    except ValueError as e:
        raise InputError(f"unknown center in --centers: {e}") from None


def _family(args) -> FamilySpec:
    try:
        spec = FamilySpec(FamilyKind(args.family), args.a, args.b, args.lam)
    except (InvalidAxes, InvalidLambda, ValueError) as e:
        raise InputError(f"infeasible family: {e}") from None
    if not spec.feasible():
        raise InputError("infeasible family: requires R >= 2c (circumradius at least the inellipse focal distance)")
    return spec


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _check_n(n: int, minimum: int = 2) -> int:
    if n < minimum:
        raise InputError(f"--n must be at least {minimum}")
    return n


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=True) + "\n"


# sample


def cmd_sample(args) -> int:
    spec = _family(args)
    centers = _centers(args.centers)
    samples, _ = sample_family(spec, _check_n(args.n))
    if args.format == "json":
        rows = []
        for t, tri in samples:
            row = {"t": t, "vertices": [[p.x, p.y] for p in tri.vertices]}
            for cid in centers:
                p = triangle_center(tri, cid)
                row[cid.value] = [p.x, p.y]
            rows.append(row)
        _emit(_json(rows), args.out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["t", "x1", "y1", "x2", "y2", "x3", "y3"]
    for cid in centers:
        header += [f"{cid.value}_x", f"{cid.value}_y"]
    w.writerow(header)
    for t, tri in samples:
        row = [_num(t)] + [_num(v) for p in tri.vertices for v in p]
        for cid in centers:
            row += [_num(v) for v in triangle_center(tri, cid)]
        w.writerow(row)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


# invariants


def _brocard_circle_report(spec: FamilySpec, n: int):
    samples, bad = sample_family(spec, n)
    radii = [brocard_circle(tri)[1] for _, tri in samples]
    p = spec.params()
    return scalar_report(
        "brocard_circle_radius",
        radii,
        brocard_circle_radius(spec.a, spec.b),
        scale=p.R,
        excluded=bad,
        note=BROCARD_CIRCLE_ERRATUM,
        extra={"table_value": brocard_circle_radius_table(p.R, p.omega)},
    )


def cmd_invariants(args) -> int:
    spec = _family(args)
    tol = args.tol
    reports = family_reports(spec, _check_n(args.n))
    if spec.kind is FamilyKind.BROCARD and spec.a > spec.b:
        reports.append(_brocard_circle_report(spec, args.n))
    _emit(_json([r.to_dict(tol) for r in reports]), args.out)
    failed = [r for r in reports if not r.passed(tol)]
    for r in failed:
        err = "" if r.closed_form_error is None else f", closed-form error {r.closed_form_error:.3e}"
        print(f"FAIL {r.name}: rel_dev {r.rel_dev:.3e}{err} > tol {tol:.1e}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# loci


def cmd_loci(args) -> int:
    spec = _family(args)
    centers = _centers(args.centers) or [CenterId.X39 if spec.kind is FamilyKind.HOMOTHETIC else CenterId.X2]
    samples, _ = sample_family(spec, _check_n(args.n, 5))
    tracks = {cid: [triangle_center(tri, cid) for _, tri in samples] for cid in centers}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t"] + [f"{cid.value}_{ax}" for cid in centers for ax in "xy"])
        for i, (t, _) in enumerate(samples):
            w.writerow([_num(t)] + [_num(v) for cid in centers for v in tracks[cid][i]])
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    out = []
    for cid in centers:
        entry = {"center": cid.value, "samples": len(samples)}
        for label, fit in (("circle_fit", fit_circle), ("ellipse_fit", fit_axis_aligned_ellipse)):
            try:
                f = fit(tracks[cid], scale=spec.a)
                entry[label] = {
                    "kind": f.kind.value,
                    "center": list(f.center),
                    "semi_axes": list(f.semi_axes),
                    "rms_residual": f.rms_residual,
                }
            except GeometryError as e:
                entry[label] = {"error": str(e)}
        if cid is CenterId.X39 and spec.kind is FamilyKind.HOMOTHETIC:
            entry["closed_form"] = {"center": [0.0, 0.0], "semi_axes": list(x39_locus_closed_form(spec.a, spec.b))}
        if cid is CenterId.X2 and spec.kind is FamilyKind.BROCARD and spec.a > spec.b:
            c, r = x2_locus_brocard(spec.a, spec.b)
            entry["closed_form"] = {"center": list(c), "radius": r}
        out.append(entry)
    _emit(_json(out), args.out)
    return EXIT_OK


# similarity


def cmd_similarity(args) -> int:
    a, b, k = args.a, args.b, args.k
    if not k > 0:
        raise InputError("--k must be positive")
    if not (b > 0 and a > b):
        raise InputError(f"similarity maps need a > b > 0, got a={a}, b={b}")
    n = _check_n(args.n)
    if args.format == "svg":
        _emit(similarity_svg(a, b, k, args.snapshots), args.out)
        return EXIT_OK
    ts = [2 * math.pi * i / n for i in range(n)]
    if args.reverse:
        frames = [brocard_to_homothetic(a, b, k, t) for t in ts]
    else:
        frames = [homothetic_to_brocard(a, b, k, t) for t in ts]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "theta", "x1", "y1", "x2", "y2", "x3", "y3"])
        for f in frames:
            w.writerow([_num(f.t), _num(f.theta)] + [_num(v) for p in f.image_tri.vertices for v in p])
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    omega_err = max(abs(brocard_angle(f.image_tri) - brocard_angle(f.source_tri)) for f in frames)
    x3s = [triangle_center(f.image_tri, CenterId.X3) for f in frames]
    radii = [circumradius(f.image_tri) for f in frames]
    summary = {
        "direction": "reverse" if args.reverse else "forward",
        "a": a,
        "b": b,
        "k": k,
        "samples": n,
        "omega_preservation_max_error": omega_err,
        "image_circumcenter_drift": max(distance(p, x3s[0]) for p in x3s),
        "image_circumradius_drift": max(radii) - min(radii),
        "image_circumcenter": list(x3s[0]),
        "image_circumradius": radii[0],
    }
    if args.reverse:
        summary["pair_condition_max_residual"] = max(pair_condition_residual(f) for f in frames)
    _emit(_json(summary), args.out)
    return EXIT_OK


# circles


def cmd_circles(args) -> int:
    a, b = args.a, args.b
    if not (b > 0 and a > b):
        raise InputError(f"circle registry sweep needs a > b > 0, got a={a}, b={b}")
    tol = args.tol
    reports = verify_stationarity(a, b, _check_n(args.n))
    routes = brocard_radius_routes(a, b)
    doc = {
        "circles": [r.to_dict(tol) for r in reports],
        "brocard_radius_routes": {
            "closed_form": routes.closed_form,
            "angular_form": routes.angular_form,
            "midpoint_route": routes.midpoint_route,
            "concyclic_route": routes.concyclic_route,
            "x6_residual": routes.x6_residual,
            "table_value": routes.table_value,
            "spread": routes.spread(),
            "note": BROCARD_CIRCLE_ERRATUM,
        },
    }
    _emit(_json(doc), args.out)
    return EXIT_OK if all(r.passed(tol) for r in reports) else EXIT_FAIL


# moses


def _point_arg(text: str) -> Point:
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"expected x,y, got {text!r}") from None
    return Point(x, y)


def cmd_moses(args) -> int:
    o1, o2 = _point_arg(args.omega1), _point_arg(args.omega2)
    seeds = []
    if args.vertex:
        seeds.append(_point_arg(args.vertex))
    else:
        rng = random.Random(args.seed)
        mid = (o1 + o2) / 2
        sep = distance(o1, o2)
        for _ in range(args.n):
            r = rng.uniform(0.3, 4.0) * sep
            ang = rng.uniform(0.05, math.pi - 0.05) * rng.choice((1, -1))
            seeds.append(mid + Point(math.cos(ang), math.sin(ang)) * r)
    rows, failures = [], 0
    for A in seeds:
        row = {"A": list(A)}
        try:
            res = moses_construct(o1, o2, A, tol=1e-7)
            row.update(
                {
                    "ok": True,
                    "vertices": [list(p) for p in res.triangle.vertices],
                    "residual": res.residual,
                    "swapped": res.swapped,
                    "candidates": list(res.candidates),
                    "cot_omega": cot_omega(res.triangle),
                }
            )
        except GeometryError as e:
            failures += 1
            row.update({"ok": False, "error": f"{type(e).__name__}: {e}"})
        rows.append(row)
    _emit(_json({"omega1": list(o1), "omega2": list(o2), "results": rows, "failures": failures}), args.out)
    if failures and args.vertex:
        return EXIT_DEGENERATE
    return EXIT_FAIL if failures else EXIT_OK


# svg


def cmd_svg(args) -> int:
    spec = _family(args)
    if args.snapshots < 1:
        raise InputError("--snapshots must be positive")
    marks = [c.value for c in _centers(args.centers)] or list(DEFAULT_MARKS)
    _emit(family_svg(spec, args.snapshots, marks), args.out)
    return EXIT_OK


def _family_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[k.value for k in FamilyKind], default="brocard")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=0.8)
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brocard-porism", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="output path, - for stdout")
    common.add_argument("--n", type=int, default=1000)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sample", parents=[common], help="vertices (and centers) over a family")
    _family_opts(p)
    p.add_argument("--centers", help="comma list, e.g. X2,X39")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("invariants", parents=[common], help="JSON invariant report; exit 1 on failure")
    _family_opts(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("loci", parents=[common], help="center loci samples (csv) or fits (json)")
    _family_opts(p)
    p.add_argument("--centers")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_loci)

    p = sub.add_parser("similarity", parents=[common], help="homothetic <-> Brocard-porism similarity maps")
    p.add_argument("--a", type=float, default=2.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--reverse", action="store_true", help="map the Brocard porism to the homothetic family")
    p.add_argument("--snapshots", type=int, default=9)
    p.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("circles", parents=[common], help="stationary-circle registry sweep")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=0.8)
    p.set_defaults(func=cmd_circles, n=360)

    p = sub.add_parser("moses", parents=[common], help="triangle from two Brocard points and a vertex")
    p.add_argument("--omega1", default="-0.6,0")
    p.add_argument("--omega2", default="0.6,0")
    p.add_argument("--vertex", help="x,y of A; omit to run --n random seeds")
    p.set_defaults(func=cmd_moses, n=100)

    p = sub.add_parser("svg", parents=[common], help="static figure of a family")
    _family_opts(p)
    p.add_argument("--snapshots", type=int, default=9)
    p.add_argument("--centers", help="centers to mark, e.g. X39")
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.tol > 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidAxes, InvalidLambda) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GeometryError as e:
        print(f"degenerate: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
