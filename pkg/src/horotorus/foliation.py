"""Measured foliations on the torus, stored as classes ``[a, b]`` in R^2 / {+-1}.

``[p, q]`` with coprime integers is the simple closed curve in homology class
``pA + qB``; real multiples are weighted curves and everything else is the
continuous extension. Lengths are taken in the unit-area flat metric
``|dz| / sqrt(v)`` on ``C / (Z + tau Z)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotACurveError, ZeroFoliationError
from .halfplane import HalfPlanePoint, RealOneForm


@dataclass(frozen=True)
class Foliation:
    """Canonical representative: ``b > 0``, or ``b == 0`` and ``a > 0``.

    Build through :func:`canonicalize` unless the pair is already canonical.
    """

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(f"non-finite foliation ({self.a}, {self.b})")
        if self.a == 0 and self.b == 0:
            raise ZeroFoliationError("the zero foliation is not supported")
        if not (self.b > 0 or (self.b == 0 and self.a > 0)):
            raise ValueError(f"({self.a}, {self.b}) is not canonical; use canonicalize()")

    def scale(self, t: float) -> Foliation:
        return canonicalize(t * self.a, t * self.b)

    @classmethod
    def parse(cls, text: str) -> Foliation:
        """Parse ``"a,b"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return canonicalize(float(parts[0]), float(parts[1]))


@dataclass(frozen=True)
class WeightedCurve:
    """``weight * alpha_{p/q}`` with coprime ``p, q`` and ``q > 0`` (or ``1/0``)."""

    weight: float
    p: int
    q: int

    def __post_init__(self):
        if not self.weight > 0:
            raise ValueError(f"weight must be positive, got {self.weight}")
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")
        if not (self.q > 0 or (self.q == 0 and self.p == 1)):
            raise ValueError(f"{self.p}/{self.q}: need q > 0, or p/q = 1/0")


def canonicalize(a: float, b: float) -> Foliation:
    a, b = float(a), float(b)
    if a == 0 and b == 0:
        raise ZeroFoliationError("the zero foliation is not supported")
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    # normalise signed zeros so equality is componentwise
    return Foliation(a + 0.0, b + 0.0)


def from_weighted_curve(w: WeightedCurve) -> Foliation:
    return canonicalize(w.weight * w.p, w.weight * w.q)


def as_simple_curve(f: Foliation) -> tuple[int, int]:
    """Return ``(p, q)`` if ``f`` is exactly an unweighted simple closed curve."""
    if not (f.a.is_integer() and f.b.is_integer()):
        raise NotACurveError(f"[{f.a}, {f.b}] is not an integral class")
    p, q = int(f.a), int(f.b)
    if math.gcd(abs(p), abs(q)) != 1:
        raise NotACurveError(f"[{p}, {q}] is a multiple of a curve, not a simple curve")
    return p, q


def intersection(f1: Foliation, f2: Foliation) -> float:
    return abs(f1.a * f2.b - f2.a * f1.b)


def slope(f: Foliation) -> float:
    """Projective class ``a / b`` in RP^1; ``math.inf`` when ``b == 0``."""
    if f.b == 0:
        return math.inf
    return f.a / f.b


def flat_length(f: Foliation, tau: HalfPlanePoint) -> float:
    return abs(complex(f.a, 0.0) + f.b * tau.tau) / math.sqrt(tau.v)


def extremal_length(f: Foliation, tau: HalfPlanePoint) -> float:
    x = f.a + f.b * tau.u
    y = f.b * tau.v
    return (x * x + y * y) / tau.v


def d_length(f: Foliation, tau: HalfPlanePoint) -> RealOneForm:
    """Differential of ``tau -> flat_length(f, tau)`` as ``p du + q dv``."""
    u, v = tau.u, tau.v
    ell = flat_length(f, tau)
    x = f.a + f.b * u
    p = f.b * x / (v * ell)
    q = -(x * x - f.b * f.b * v * v) / (2.0 * v * v * ell)
    return RealOneForm(tau, p, q)
