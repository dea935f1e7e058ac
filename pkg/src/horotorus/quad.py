"""Quadratic differentials on flat tori, Teichmüller discs and extremal length.

On ``M_tau = C / (Z + tau Z)`` the holomorphic quadratic differentials are the
constants ``zeta dz^2`` and the Beltrami differentials that matter are the
constants ``mu dzbar/dz``. A tangent vector with component ``c`` corresponds
to ``mu = i c / (2 v)``, read off from the affine maps
``z -> (1 + t/(tau - conj tau)) z - t/(tau - conj tau) conj z``; equivalently
``c = -2 i v mu``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .deformation import horocyclic_vector
from .errors import NotQuasiconformalError, UndefinedDiscError
from .foliation import Foliation, flat_length
from .halfplane import HalfPlanePoint, TangentVec, check_same_base


@dataclass(frozen=True)
class QuadDiff:
    """``zeta dz^2`` on ``M_base``."""

    base: HalfPlanePoint
    zeta: complex

    @property
    def norm(self) -> float:
        """L^1 norm: ``|zeta|`` times the area ``v`` of a fundamental domain."""
        return abs(self.zeta) * self.base.v

    def scale(self, s: complex) -> QuadDiff:
        return QuadDiff(self.base, s * self.zeta)


@dataclass(frozen=True)
class BeltramiCoeff:
    base: HalfPlanePoint
    mu: complex

    def __post_init__(self):
        if not abs(self.mu) < 1:
            raise NotQuasiconformalError(f"|mu| must be < 1, got {abs(self.mu)}")


def beltrami_to_vector(mu: complex, base: HalfPlanePoint) -> TangentVec:
    return TangentVec(base, -2j * base.v * mu)


def vector_to_beltrami(w: TangentVec) -> complex:
    return 1j * w.c / (2.0 * w.base.v)


def pairing(w: TangentVec, q: QuadDiff) -> complex:
    """``<<mu, q>>``: integral of ``mu * zeta`` over a fundamental domain."""
    check_same_base(w.base, q.base)
    return 0.5j * w.c * q.zeta


def hubbard_masur(f: Foliation, tau: HalfPlanePoint) -> QuadDiff:
    """The quadratic differential whose vertical foliation is ``f``.

    ``sqrt(q) = w dz`` with ``Re(w) = -b`` and ``Re(w tau) = a`` so that
    ``|Re(w (p + q tau))| = |a q - b p|`` for every curve ``p/q``.
    """
    w = complex(-f.b, -(f.a + f.b * tau.u) / tau.v)
    return QuadDiff(tau, w * w)


def vertical_measure(q: QuadDiff, p: int, r: int) -> float:
    """Transverse measure ``|Re sqrt(q)|`` of the closed geodesic ``p + r tau``."""
    w = q.zeta ** 0.5
    return abs((w * (p + r * q.base.tau)).real)


def gardiner_differential(f: Foliation, tau: HalfPlanePoint, w: TangentVec) -> float:
    """``d Ext_f (w) = -2 Re <w, q_f>``."""
    check_same_base(tau, w.base)
    return -2.0 * pairing(w, hubbard_masur(f, tau)).real


def beltrami_to_period(mu: BeltramiCoeff) -> HalfPlanePoint:
    """Period of the torus obtained from ``z -> z + mu conj(z)``."""
    if not abs(mu.mu) < 1:
        raise NotQuasiconformalError(f"|mu| must be < 1, got {abs(mu.mu)}")
    tau = mu.base.tau
    m = mu.mu
    new = (tau + m * tau.conjugate()) / (1.0 + m)
    # Im of the image is v (1 - |mu|^2) / |1 + mu|^2; avoid cancellation near |mu| = 1
    v_new = mu.base.v * (1.0 - abs(m) ** 2) / abs(1.0 + m) ** 2
    return HalfPlanePoint(new.real, v_new)


def teich_disc(q: QuadDiff, zeta_disc: complex) -> HalfPlanePoint:
    """Point ``Phi_q(zeta_disc)`` of the Teichmüller disc of ``q``."""
    if q.zeta == 0:
        raise UndefinedDiscError("Teichmüller disc of the zero differential")
    if not zeta_disc.imag > 0:
        raise ValueError(f"disc parameter must lie in the upper half-plane, got {zeta_disc}")
    k = (zeta_disc - 1j) / (zeta_disc + 1j)
    mu = k * q.zeta.conjugate() / abs(q.zeta)
    return beltrami_to_period(BeltramiCoeff(q.base, mu))


def horo_deform_via_disc(f: Foliation, t: float, tau: HalfPlanePoint) -> HalfPlanePoint:
    ell = flat_length(f, tau)
    return teich_disc(hubbard_masur(f, tau), complex(-t * ell, 1.0))


def infinitesimal_teich(q: QuadDiff) -> TangentVec:
    """``q -> [ ||q|| conj(q) / |q| ]``, with ``0 -> 0``."""
    if q.zeta == 0:
        return TangentVec(q.base, 0j)
    mu = q.norm * q.zeta.conjugate() / abs(q.zeta)
    return beltrami_to_vector(mu, q.base)


def horocyclic_vector_via_disc(f: Foliation, tau: HalfPlanePoint) -> TangentVec:
    """``[ (i l / 2) conj(q_f) / |q_f| ]`` converted to the ``d/dtau`` frame."""
    zeta = hubbard_masur(f, tau).zeta
    ell = flat_length(f, tau)
    mu = 0.5j * ell * zeta.conjugate() / abs(zeta)
    return beltrami_to_vector(mu, tau)


def d_length_holomorphic(f: Foliation, tau: HalfPlanePoint) -> QuadDiff:
    """Holomorphic differential of the length: ``-q_f / (2 l)``."""
    q = hubbard_masur(f, tau)
    return q.scale(-1.0 / (2.0 * math.sqrt(q.norm)))


def duality_check(f: Foliation, tau: HalfPlanePoint) -> tuple[TangentVec, TangentVec]:
    """Return ``(J(d l_f), i * horocyclic vector)``; the two should coincide."""
    lhs = infinitesimal_teich(d_length_holomorphic(f, tau))
    h = horocyclic_vector(f, tau)
    return lhs, TangentVec(tau, 1j * h.c)
