"""Upper half-plane model of the Teichmüller space of the torus.

A point is the period ``tau = u + iv`` of the marked lattice ``Z + tau Z``.
Tangent vectors are stored by their complex component ``c = xi + i eta`` in
the ``d/dtau`` frame, so ``c`` is what you get by differentiating a path
``tau(t)`` in ordinary complex arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BaseMismatchError,
    InvalidMapError,
    InvalidPointError,
    NumericalSingularityError,
    UnsupportedConventionError,
)

POLE_THRESHOLD = 1e-300
SUPPORTED_CURVATURES = (-1.0, -4.0)


@dataclass(frozen=True)
class HalfPlanePoint:
    u: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.u) and math.isfinite(self.v)) or self.v <= 0:
            raise InvalidPointError(f"not a point of the upper half-plane: ({self.u}, {self.v})")

    @classmethod
    def from_complex(cls, tau: complex) -> HalfPlanePoint:
        return cls(float(tau.real), float(tau.imag))

    @property
    def tau(self) -> complex:
        return complex(self.u, self.v)


@dataclass(frozen=True)
class MoebiusMap:
    """Real 2x2 matrix ``[[m11, m12], [m21, m22]]`` with positive determinant.

    Entries are kept as given; use :meth:`normalized` for the det-1 representative.
    """

    m11: float
    m12: float
    m21: float
    m22: float

    def __post_init__(self):
        if not self.det > 0:
            raise InvalidMapError(f"determinant must be positive, got {self.det}")

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> float:
        return self.m11 + self.m22

    def normalized(self) -> MoebiusMap:
        s = math.sqrt(self.det)
        return MoebiusMap(self.m11 / s, self.m12 / s, self.m21 / s, self.m22 / s)

    def compose(self, other: MoebiusMap) -> MoebiusMap:
        """Matrix product ``self @ other`` (apply ``other`` first)."""
        return MoebiusMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def parabolic_fixed_point(self) -> float:
        """Fixed point of a parabolic map, ``(m11 - m22) / (2 m21)`` or ``inf``.

        Skips the square root of the (rounding-noise) discriminant, which would
        cost half the significant digits. The magnitude comes from the product
        of the (double) roots, ``-m12 / m21``, since ``m11 - m22`` cancels when
        the fixed point is far out; the difference only supplies the sign.
        """
        if self.m21 == 0:
            return math.inf
        linear = (self.m11 - self.m22) / (2.0 * self.m21)
        product = -self.m12 / self.m21
        if product < 0 or linear == 0:
            return linear
        return math.copysign(math.sqrt(product), linear)

    def fixed_points(self) -> tuple[complex | float, ...]:
        """Fixed points in the Riemann sphere; ``math.inf`` stands for infinity.

        A parabolic map returns its single fixed point once.
        """
        a, b, c, d = self.m11, self.m12, self.m21, self.m22
        if c == 0:
            if a == d:
                return (math.inf,)
            return (math.inf, b / (d - a))
        disc = complex((a - d) ** 2 + 4 * b * c)
        if disc == 0:
            return ((a - d) / (2 * c),)
        r = disc ** 0.5
        return ((a - d + r) / (2 * c), (a - d - r) / (2 * c))


@dataclass(frozen=True)
class TangentVec:
    base: HalfPlanePoint
    c: complex

    @property
    def xi(self) -> float:
        return self.c.real

    @property
    def eta(self) -> float:
        return self.c.imag

    def __add__(self, other: TangentVec) -> TangentVec:
        check_same_base(self.base, other.base)
        return TangentVec(self.base, self.c + other.c)

    def scale(self, s: float) -> TangentVec:
        return TangentVec(self.base, s * self.c)


@dataclass(frozen=True)
class RealOneForm:
    """Real cotangent vector ``p du + q dv``."""

    base: HalfPlanePoint
    p: float
    q: float

    def __call__(self, w: TangentVec) -> float:
        check_same_base(self.base, w.base)
        return self.p * w.xi + self.q * w.eta


def check_same_base(a: HalfPlanePoint, b: HalfPlanePoint) -> None:
    if a != b:
        raise BaseMismatchError(f"base points differ: {a} vs {b}")


def mobius_apply(m: MoebiusMap, tau: HalfPlanePoint) -> HalfPlanePoint:
    if not m.det > 0:
        raise InvalidMapError(f"determinant must be positive, got {m.det}")
    z = tau.tau
    den = m.m21 * z + m.m22
    if abs(den) < POLE_THRESHOLD:
        raise NumericalSingularityError(f"denominator {abs(den)} too close to zero")
    w = (m.m11 * z + m.m12) / den
    # Im w = det * v / |den|^2 exactly; use it to avoid cancellation in the division.
    return HalfPlanePoint(w.real, m.det * tau.v / abs(den) ** 2)


def _check_curvature(curvature: float) -> float:
    if curvature not in SUPPORTED_CURVATURES:
        raise UnsupportedConventionError(
            f"curvature must be one of {SUPPORTED_CURVATURES}, got {curvature}"
        )
    return float(curvature)


def hyperbolic_element(w: TangentVec, curvature: float = -4.0) -> float:
    """Length of ``w`` in the hyperbolic metric of the given curvature.

    Curvature -1 is ``|dtau|/v``; curvature -4 is ``|dtau|/(2v)``.
    """
    k = _check_curvature(curvature)
    scale = 1.0 if k == -1.0 else 2.0
    return abs(w.c) / (scale * w.base.v)


def hyperbolic_distance(t1: HalfPlanePoint, t2: HalfPlanePoint, curvature: float = -4.0) -> float:
    """Poincaré distance; with curvature -4 this is the Teichmüller distance.

    Uses ``arcsinh(|t1 - t2| / (2 sqrt(v1 v2)))``, which equals
    ``atanh(|t1 - t2| / |t1 - conj(t2)|)`` but keeps full precision far apart.
    """
    k = _check_curvature(curvature)
    d4 = math.asinh(abs(t1.tau - t2.tau) / (2.0 * math.sqrt(t1.v * t2.v)))
    return d4 if k == -4.0 else 2.0 * d4


def j0_apply(w: TangentVec) -> TangentVec:
    """Complex structure ``-dv (x) d/du + du (x) d/dv``: ``(xi, eta) -> (-eta, xi)``."""
    return TangentVec(w.base, complex(-w.eta, w.xi))
