"""Fenchel-Nielsen coordinates and the horocyclic (earthquake) flow.

The flow along ``lambda = [a, b]`` is the parabolic one-parameter group

    E_t = [[1 - t a b / l,   -t a^2 / l],
           [  t b^2 / l,   1 + t a b / l]],   l = flat_length(lambda, tau),

with ``l`` frozen at the starting point. Because ``l`` is constant along the
orbit, ``E_s(E_t(tau)) = E_{s+t}(tau)``. Orbits are horocycles based at
``-a/b``; at ``t = l`` a simple curve ``[p, q]`` gives its Dehn twist.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidCoordinatesError, InvalidRangeError, ZeroVectorError
from .foliation import Foliation, as_simple_curve, canonicalize, flat_length
from .halfplane import HalfPlanePoint, MoebiusMap, TangentVec, mobius_apply


@dataclass(frozen=True)
class FNCoords:
    ell: float
    theta: float

    def __post_init__(self):
        if not self.ell > 0:
            raise InvalidCoordinatesError(f"length must be positive, got {self.ell}")

    @property
    def twist(self) -> float:
        """Unit-speed twist ``t = theta * ell / (2 pi)``."""
        return self.theta * self.ell / (2.0 * math.pi)


def fn_from_point(tau: HalfPlanePoint) -> FNCoords:
    return FNCoords(1.0 / math.sqrt(tau.v), -2.0 * math.pi * tau.u + 0.0)


def fn_to_point(c: FNCoords) -> HalfPlanePoint:
    if not c.ell > 0:
        raise InvalidCoordinatesError(f"length must be positive, got {c.ell}")
    return HalfPlanePoint(-c.theta / (2.0 * math.pi) + 0.0, 1.0 / (c.ell * c.ell))


def earthquake_map(f: Foliation, t: float, tau: HalfPlanePoint) -> MoebiusMap:
    if not math.isfinite(t):
        raise ValueError(f"flow time must be finite, got {t}")
    s = t / flat_length(f, tau)
    ab = s * f.a * f.b
    return MoebiusMap(1.0 - ab, -s * f.a * f.a, s * f.b * f.b, 1.0 + ab)


def earthquake_apply(f: Foliation, t: float, tau: HalfPlanePoint) -> HalfPlanePoint:
    return mobius_apply(earthquake_map(f, t, tau), tau)


def dehn_twist_point(f: Foliation, tau: HalfPlanePoint) -> HalfPlanePoint:
    """Image of ``tau`` under the Dehn twist about the simple curve ``f``."""
    as_simple_curve(f)
    return earthquake_apply(f, flat_length(f, tau), tau)


def horocyclic_vector(f: Foliation, tau: HalfPlanePoint) -> TangentVec:
    z = complex(f.a, 0.0) + f.b * tau.tau
    return TangentVec(tau, -(z * z) / flat_length(f, tau))


def foliation_from_vector(w: TangentVec) -> Foliation:
    """The unique foliation whose horocyclic vector at ``w.base`` is ``w``."""
    c = w.c
    if c == 0:
        raise ZeroVectorError("the zero vector is not a horocyclic vector")
    tau = w.base
    # |a + b tau|^2 = |c| sqrt(v) * ell and ell = |c| / v, so (a + b tau)^2 = -c |c| / v;
    # factor out |c| so tiny vectors do not underflow
    r = abs(c)
    z = r * cmath.sqrt(-(c / r) / tau.v)
    b = z.imag / tau.v
    a = z.real - b * tau.u
    return canonicalize(a, b)


def orbit_sample(
    f: Foliation, tau: HalfPlanePoint, t_min: float, t_max: float, steps: int
) -> list[tuple[float, HalfPlanePoint]]:
    if steps < 2:
        raise InvalidRangeError(f"need at least 2 steps, got {steps}")
    if not t_min < t_max:
        raise InvalidRangeError(f"need t_min < t_max, got [{t_min}, {t_max}]")
    return [(float(t), earthquake_apply(f, float(t), tau)) for t in np.linspace(t_min, t_max, steps)]
