"""Command-line interface.

Exit codes: 0 success / all suites pass, 1 a suite failed or a file could not
be written, 2 usage error. Points, foliations, vectors and complex numbers are
given as ``"x,y"`` decimal pairs; write ``--tau=-1,1`` when the first number
is negative.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import verify
from .deformation import fn_from_point, orbit_sample
from .foliation import Foliation, flat_length
from .halfplane import HalfPlanePoint, TangentVec, hyperbolic_distance
from .norms import NormKind, legendre_numeric, norm
from .quad import QuadDiff, infinitesimal_teich

SVG_WIDTH, SVG_HEIGHT = 800, 600
SVG_U_RANGE = (-3.0, 3.0)
SVG_V_MAX = 4.0


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    try:
        x, y = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number in {text!r}") from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise argparse.ArgumentTypeError(f"non-finite value in {text!r}")
    return x, y


def _point(text: str) -> HalfPlanePoint:
    u, v = _pair(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"need Im tau > 0, got {text!r}")
    return HalfPlanePoint(u, v)


def _foliation(text: str) -> Foliation:
    _pair(text)
    try:
        return Foliation.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _complex(text: str) -> complex:
    x, y = _pair(text)
    return complex(x, y)


def _fmt(x: float) -> str:
    return format(x + 0.0, ".17g")


def write_orbit_csv(path: str, f: Foliation, samples) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("t,u,v,ell\n")
        for t, p in samples:
            fh.write(",".join(_fmt(x) for x in (t, p.u, p.v, flat_length(f, p))) + "\n")


def orbit_svg(samples) -> str:
    u0, u1 = SVG_U_RANGE

    def xy(p):
        x = (p.u - u0) / (u1 - u0) * SVG_WIDTH
        y = SVG_HEIGHT - p.v / SVG_V_MAX * SVG_HEIGHT
        return f"{x:.4f},{y:.4f}"

    points = " ".join(xy(p) for _, p in samples)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">\n'
        f'  <line x1="0" y1="{SVG_HEIGHT}" x2="{SVG_WIDTH}" y2="{SVG_HEIGHT}" stroke="black" stroke-width="2"/>\n'
        f'  <polyline points="{points}" fill="none" stroke="blue" stroke-width="1"/>\n'
        "</svg>\n"
    )


def cmd_verify(args) -> int:
    tol = verify.Tolerances(closed=args.tol_closed, fd=args.tol_fd)
    extras: dict = {}
    reports = verify.run([args.suite], args.samples, args.seed, tol, extras)
    text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if args.report:
        try:
            with open(args.report, "w") as fh:
                fh.write(text)
        except OSError as e:
            print(f"error: cannot write report: {e}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}: abs {r.max_abs_err:.3e} rel {r.max_rel_err:.3e} "
              f"tol {r.tolerance:.0e}", file=sys.stderr)
    if "measured_ratio" in extras:
        print(f"horocyclic/teichmuller constant: stated {extras['stated_ratio']}, "
              f"measured {extras['measured_ratio']:.12g}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def cmd_flow(args, parser) -> int:
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    if not args.t_min < args.t_max:
        parser.error("--t-min must be smaller than --t-max")
    samples = orbit_sample(args.foliation, args.tau, args.t_min, args.t_max, args.steps)
    try:
        write_orbit_csv(args.out_csv, args.foliation, samples)
        if args.out_svg:
            with open(args.out_svg, "w") as fh:
                fh.write(orbit_svg(samples))
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def cmd_norms(args) -> int:
    w = TangentVec(args.tau, complex(*args.vec))
    values = {kind.value: norm(kind, w) for kind in NormKind}
    for name, value in values.items():
        print(f"{name:<16}{value:.12g}")
    k = values["teichmuller"]
    ratio = values["horocyclic"] / k if k > 0 else math.nan
    print(f"{'ratio':<16}{ratio:.12g}")
    return 0


def cmd_dist(args) -> int:
    print(f"{hyperbolic_distance(args.src, args.dst):.12f}")
    return 0


def cmd_fn(args) -> int:
    c = fn_from_point(args.tau)
    print(f"ell {c.ell:.12g}")
    print(f"theta {c.theta:.12g}")
    print(f"twist {c.twist:.12g}")
    return 0


def cmd_legendre(args) -> int:
    q = QuadDiff(args.tau, args.zeta)
    numeric = legendre_numeric(q).c
    closed = infinitesimal_teich(q).c
    print(f"numeric     {numeric.real:.12g},{numeric.imag:.12g}")
    print(f"closed_form {closed.real:.12g},{closed.imag:.12g}")
    print(f"difference  {abs(numeric - closed):.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="horotorus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run seeded identity checks, JSON report")
    v.add_argument("--suite", default="all", choices=[*verify.SUITES, "all"])
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol-closed", type=float, default=verify.TOL_CLOSED)
    v.add_argument("--tol-fd", type=float, default=verify.TOL_FD)
    v.add_argument("--report", help="write the JSON report here instead of stdout")

    f = sub.add_parser("flow", help="export a horocyclic orbit as CSV (and SVG)")
    f.add_argument("--tau", type=_point, required=True)
    f.add_argument("--foliation", type=_foliation, required=True)
    f.add_argument("--t-min", type=float, required=True)
    f.add_argument("--t-max", type=float, required=True)
    f.add_argument("--steps", type=int, required=True)
    f.add_argument("--out-csv", required=True)
    f.add_argument("--out-svg")

    n = sub.add_parser("norms", help="the four norms of a tangent vector")
    n.add_argument("--tau", type=_point, required=True)
    n.add_argument("--vec", type=_pair, required=True)

    d = sub.add_parser("dist", help="Teichmüller (curvature -4) distance")
    d.add_argument("--from", dest="src", type=_point, required=True)
    d.add_argument("--to", dest="dst", type=_point, required=True)

    c = sub.add_parser("fn", help="Fenchel-Nielsen coordinates")
    c.add_argument("--tau", type=_point, required=True)

    lg = sub.add_parser("legendre", help="Legendre transform of zeta dz^2, numeric vs closed form")
    lg.add_argument("--tau", type=_point, required=True)
    lg.add_argument("--zeta", type=_complex, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.samples < 1:
            parser.error("--samples must be at least 1")
        return cmd_verify(args)
    if args.command == "flow":
        return cmd_flow(args, parser)
    handlers = {"norms": cmd_norms, "dist": cmd_dist, "fn": cmd_fn, "legendre": cmd_legendre}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
