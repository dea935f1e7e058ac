"""Draw horocyclic orbits of several foliations through one point into a single SVG.

    python scripts/plot_orbits.py --tau 0.2,1.3 --out orbits.svg
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from horotorus import Foliation, HalfPlanePoint, orbit_sample

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


@dataclass
class OrbitPlotConfig:
    tau: tuple[float, float] = (0.0, 1.0)
    foliations: list[tuple[float, float]] = field(
        default_factory=lambda: [(1, 0), (0, 1), (1, 1), (-1, 1), (1, 2), (-2, 1)]
    )
    t_range: tuple[float, float] = (-6.0, 6.0)
    steps: int = 400
    width: int = 800
    height: int = 600
    u_range: tuple[float, float] = (-3.0, 3.0)
    v_max: float = 4.0


def render(cfg: OrbitPlotConfig) -> str:
    tau = HalfPlanePoint(*cfg.tau)
    u0, u1 = cfg.u_range

    def xy(p):
        return f"{(p.u - u0) / (u1 - u0) * cfg.width:.3f},{cfg.height - p.v / cfg.v_max * cfg.height:.3f}"

    body = []
    for k, (a, b) in enumerate(cfg.foliations):
        f = Foliation.parse(f"{a},{b}")
        pts = " ".join(xy(p) for _, p in orbit_sample(f, tau, *cfg.t_range, cfg.steps))
        color = PALETTE[k % len(PALETTE)]
        body.append(f'  <polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1"/>')
        body.append(f'  <text x="10" y="{20 + 16 * k}" fill="{color}" font-size="13">[{a:g}, {b:g}]</text>')
    x0 = xy(tau).split(",")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{cfg.width}" height="{cfg.height}">\n'
        f'  <line x1="0" y1="{cfg.height}" x2="{cfg.width}" y2="{cfg.height}" stroke="black" stroke-width="2"/>\n'
        + "\n".join(body)
        + f'\n  <circle cx="{x0[0]}" cy="{x0[1]}" r="3" fill="black"/>\n</svg>\n'
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tau", default="0,1")
    ap.add_argument("--steps", type=int, default=400)
    ap.add_argument("--out", default="orbits.svg")
    args = ap.parse_args()
    u, v = (float(x) for x in args.tau.split(","))
    cfg = OrbitPlotConfig(tau=(u, v), steps=args.steps)
    with open(args.out, "w") as fh:
        fh.write(render(cfg))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
