"""Weil-Petersson structure on the torus Teichmüller space.

Metric ``|dtau|^2 / (2 v^2)`` and Kähler form ``du ^ dv / (2 v^2)``; the
Hermitian product is ``h = (g - i omega) / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .foliation import Foliation, flat_length
from .halfplane import HalfPlanePoint, RealOneForm, TangentVec, check_same_base


@dataclass(frozen=True)
class WpForm:
    """The Kähler form at ``base``, callable on pairs of tangent vectors."""

    base: HalfPlanePoint

    def __call__(self, w1: TangentVec, w2: TangentVec) -> float:
        check_same_base(self.base, w1.base)
        return wp_omega(w1, w2)


def wp_inner(w1: TangentVec, w2: TangentVec) -> float:
    check_same_base(w1.base, w2.base)
    v = w1.base.v
    return (w1.xi * w2.xi + w1.eta * w2.eta) / (2.0 * v * v)


def wp_omega(w1: TangentVec, w2: TangentVec) -> float:
    check_same_base(w1.base, w2.base)
    v = w1.base.v
    return (w1.xi * w2.eta - w1.eta * w2.xi) / (2.0 * v * v)


def wp_hermitian(w1: TangentVec, w2: TangentVec) -> complex:
    return complex(wp_inner(w1, w2), -wp_omega(w1, w2)) / 2.0


def contract_omega(w: TangentVec) -> RealOneForm:
    """``omega(w, .)`` as a one-form."""
    v = w.base.v
    k = 2.0 * v * v
    return RealOneForm(w.base, -w.eta / k, w.xi / k)


def wp_gradient_length(f: Foliation, tau: HalfPlanePoint) -> TangentVec:
    u, v = tau.u, tau.v
    ell = flat_length(f, tau)
    x = f.a + f.b * u
    xi = 2.0 * v * f.b * x / ell
    eta = -(x * x - f.b * f.b * v * v) / ell
    return TangentVec(tau, complex(xi, eta))
