"""Compare the horocyclic norm with the Teichmüller norm and the two hyperbolic conventions.

Prints, for random tangent vectors, the ratios

    horocyclic / teichmuller,   horocyclic / element(curvature -4),
    horocyclic / element(curvature -1),   thurston / teichmuller

together with the constant 1/2 that one might expect in the first ratio.

    python scripts/norm_constant_report.py --samples 2000 --seed 1
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from horotorus import HalfPlanePoint, NormKind, TangentVec, hyperbolic_element, norm
from horotorus.verify import STATED_HORO_TEICH_RATIO


@dataclass
class ReportConfig:
    samples: int = 1000
    seed: int = 0
    thurston_samples: int = 200  # the numeric sup is the slow part


def collect(cfg: ReportConfig) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(cfg.seed)
    out = {"horo/teich": [], "horo/elem-4": [], "horo/elem-1": [], "thurston/teich": []}
    for k in range(cfg.samples):
        tau = HalfPlanePoint(rng.uniform(-2, 2), rng.uniform(0.2, 5))
        w = TangentVec(tau, complex(*rng.uniform(-2, 2, 2)))
        h, t = norm(NormKind.HOROCYCLIC, w), norm(NormKind.TEICHMULLER, w)
        out["horo/teich"].append(h / t)
        out["horo/elem-4"].append(h / hyperbolic_element(w, -4))
        out["horo/elem-1"].append(h / hyperbolic_element(w, -1))
        if k < cfg.thurston_samples:
            out["thurston/teich"].append(norm(NormKind.THURSTON, w) / t)
    return {k: np.asarray(v) for k, v in out.items()}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    stats = collect(ReportConfig(args.samples, args.seed))
    print(f"{'ratio':<16}{'min':>20}{'max':>20}")
    for name, r in stats.items():
        print(f"{name:<16}{r.min():>20.15f}{r.max():>20.15f}")
    print(f"\nstated horocyclic/teichmuller constant: {STATED_HORO_TEICH_RATIO}")
    print(f"measured:                               {stats['horo/teich'].mean():.15g}")


if __name__ == "__main__":
    main()
