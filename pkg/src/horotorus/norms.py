"""Four Finsler norms on the tangent planes of the torus Teichmüller space.

* ``teichmuller``: ``kappa(w) = sup Re<w, q>`` over ``||q|| = 1``, which on the
  torus is ``|c| / (2v)``.
* ``horocyclic``: write ``w`` as the horocyclic vector of a foliation and take
  that foliation's flat length.
* ``thurston``: sup over projective foliations of ``d(log l_f)(w)``, found
  numerically.
* ``weil_petersson``: ``sqrt(g_WP(w, w))``.

Conorms and the Legendre transform are computed numerically with the
grid + golden-section optimiser so they can be compared against closed forms.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .deformation import foliation_from_vector
from .foliation import Foliation, d_length, flat_length
from .halfplane import HalfPlanePoint, RealOneForm, TangentVec
from .optimize import GOLDEN_TOL, GRID_SIZE, golden_max, golden_max_scalar, grid_argmax, parabolic_polish
from .quad import QuadDiff, pairing
from .wp import wp_inner

# inner grid used when the Thurston norm is evaluated on a whole circle of
# directions at once (conorm bracketing); golden refinement follows regardless
COARSE_GRID = 256
COARSE_TOL = 1e-6


class NormKind(str, enum.Enum):
    TEICHMULLER = "teichmuller"
    HOROCYCLIC = "horocyclic"
    THURSTON = "thurston"
    WEIL_PETERSSON = "weil_petersson"


class ThurstonFamily:
    """The linear forms ``d(log l_f)`` at ``tau``, for ``f = [cos phi, sin phi]``.

    Each form is ``P(phi) du + Q(phi) dv``; the Thurston norm of ``w`` is the
    sup over ``phi in [0, pi)`` of ``P xi + Q eta``. Coefficients on the grid
    are computed once per base point.
    """

    def __init__(self, tau: HalfPlanePoint, n_grid: int = GRID_SIZE):
        self.tau = tau
        self.h = math.pi / n_grid
        self.grid = self.h * np.arange(n_grid)
        self.P, self.Q = self.coefficients(self.grid)

    def coefficients(self, phi):
        u, v = self.tau.u, self.tau.v
        a, b = np.cos(phi), np.sin(phi)
        x = a + b * u
        y = b * v
        ell2 = (x * x + y * y) / v
        # d_length / l, using l^2 = ell2
        return b * x / (v * ell2), -(x * x - y * y) / (2.0 * v * v * ell2)

    def _coefficients_scalar(self, phi: float):
        u, v = self.tau.u, self.tau.v
        a, b = math.cos(phi), math.sin(phi)
        x = a + b * u
        y = b * v
        ell2 = (x * x + y * y) / v
        return b * x / (v * ell2), -(x * x - y * y) / (2.0 * v * v * ell2)

    def norm_batch(self, c: np.ndarray, tol: float = GOLDEN_TOL) -> np.ndarray:
        c = np.asarray(c, dtype=complex).reshape(-1)
        xi = c.real.reshape(-1, 1)
        eta = c.imag.reshape(-1, 1)
        values = self.P[None, :] * xi + self.Q[None, :] * eta
        j = np.argmax(values, axis=1)
        best = values[np.arange(c.size), j]

        def f(phi):
            p, q = self.coefficients(phi)
            return p * xi + q * eta

        _, refined = golden_max(f, self.grid[j] - self.h, self.grid[j] + self.h, tol)
        # the family is symmetric (phi -> phi + pi/2 negates the form), so the sup is >= 0
        return np.maximum(np.maximum(refined, best), 0.0)

    def norm_scalar(self, c: complex) -> float:
        xi, eta = c.real, c.imag
        values = self.P * xi + self.Q * eta
        j = int(np.argmax(values))

        def f(phi):
            p, q = self._coefficients_scalar(phi)
            return p * xi + q * eta

        _, refined = golden_max_scalar(f, self.grid[j] - self.h, self.grid[j] + self.h)
        return max(refined, float(values[j]), 0.0)


def thurston_norm_batch(tau: HalfPlanePoint, c: np.ndarray, n_grid: int = GRID_SIZE) -> np.ndarray:
    return ThurstonFamily(tau, n_grid).norm_batch(c)


def horocyclic_norm_batch(tau: HalfPlanePoint, c: np.ndarray) -> np.ndarray:
    """Vectorised version of ``flat_length(foliation_from_vector(w))``."""
    c = np.asarray(c, dtype=complex)
    r = np.abs(c)
    unit = np.divide(c, r, out=np.zeros_like(c), where=r > 0)
    z = r * np.sqrt(-unit / tau.v)
    b = z.imag / tau.v
    a = z.real - b * tau.u
    return np.abs(a + b * tau.tau) / math.sqrt(tau.v)


def norm_batch(kind: NormKind, tau: HalfPlanePoint, c: np.ndarray, n_grid: int = GRID_SIZE) -> np.ndarray:
    kind = NormKind(kind)
    c = np.asarray(c, dtype=complex)
    if kind is NormKind.TEICHMULLER:
        return np.abs(c) / (2.0 * tau.v)
    if kind is NormKind.HOROCYCLIC:
        return horocyclic_norm_batch(tau, c)
    if kind is NormKind.THURSTON:
        return thurston_norm_batch(tau, c, n_grid).reshape(c.shape)
    return np.abs(c) / (math.sqrt(2.0) * tau.v)


def norm(kind: NormKind, w: TangentVec) -> float:
    kind = NormKind(kind)
    if kind is NormKind.TEICHMULLER:
        return abs(w.c) / (2.0 * w.base.v)
    if kind is NormKind.HOROCYCLIC:
        if w.c == 0:
            return 0.0
        return flat_length(foliation_from_vector(w), w.base)
    if kind is NormKind.THURSTON:
        return ThurstonFamily(w.base).norm_scalar(w.c)
    return math.sqrt(wp_inner(w, w))


def thurston_norm_via_foliation(w: TangentVec, f: Foliation) -> float:
    """One term of the Thurston sup: ``d(log l_f)(w)``."""
    return d_length(f, w.base)(w) / flat_length(f, w.base)


def _unit_circle_sup(pair, tau: HalfPlanePoint, kind: NormKind,
                     n_grid: int = GRID_SIZE, tol: float = GOLDEN_TOL):
    """Maximise ``pair(e^{i theta}) / norm(e^{i theta})`` over theta.

    ``pair`` maps unit complex directions (arrays or scalars) to reals.
    Returns ``(theta, ratio)``.
    """
    kind = NormKind(kind)
    if n_grid % 2:
        raise ValueError("direction grid size must be even")
    if kind is NormKind.THURSTON:
        coarse = ThurstonFamily(tau, COARSE_GRID)
        fine = ThurstonFamily(tau)

        def ratio_grid(theta):
            d = np.exp(1j * theta)
            # grid of even size over a full turn: second half is the antipodes, same norm
            half = d.size // 2
            n = coarse.norm_batch(d.reshape(-1)[:half], COARSE_TOL)
            return pair(d) / np.concatenate([n, n]).reshape(d.shape)

        def ratio(theta):
            d = complex(math.cos(theta), math.sin(theta))
            return pair(d) / fine.norm_scalar(d)
    else:
        def ratio_grid(theta):
            d = np.exp(1j * theta)
            return pair(d) / norm_batch(kind, tau, d)

        def ratio(theta):
            d = complex(math.cos(theta), math.sin(theta))
            return pair(d) / norm(kind, TangentVec(tau, d))

    theta0, best, h = grid_argmax(ratio_grid, 0.0, 2.0 * math.pi, n_grid=n_grid)
    theta, val = golden_max_scalar(ratio, float(theta0[0]) - h, float(theta0[0]) + h, tol)
    theta = parabolic_polish(ratio, theta)
    return theta, max(val, ratio(theta))


def conorm(kind: NormKind, alpha: RealOneForm) -> float:
    """``sup { alpha(w) : norm(w) <= 1 }``."""
    if alpha.p == 0 and alpha.q == 0:
        return 0.0
    _, val = _unit_circle_sup(lambda d: alpha.p * d.real + alpha.q * d.imag, alpha.base, kind)
    return max(val, 0.0)


def conorm_closed_form(kind: NormKind, alpha: RealOneForm) -> float:
    """Dual of a norm of the form ``|c| / (k v)`` is ``k v |(p, q)|``.

    Thurston's norm coincides with the Teichmüller norm on the torus, so it
    shares the same dual.
    """
    kind = NormKind(kind)
    v = alpha.base.v
    k = {
        NormKind.TEICHMULLER: 2.0,
        NormKind.THURSTON: 2.0,
        NormKind.HOROCYCLIC: 1.0,
        NormKind.WEIL_PETERSSON: math.sqrt(2.0),
    }[kind]
    return k * v * math.hypot(alpha.p, alpha.q)


def quad_conorm_teich(q: QuadDiff) -> float:
    """Dual Teichmüller norm of a holomorphic cotangent vector: its L^1 norm."""
    return q.norm


def quad_conorm(kind: NormKind, q: QuadDiff) -> float:
    """``sup { Re<w, q> : norm(w) <= 1 }`` computed numerically."""
    if q.zeta == 0:
        return 0.0
    _, val = _unit_circle_sup(lambda d: (0.5j * d * q.zeta).real, q.base, kind)
    return max(val, 0.0)


def legendre_functional(q: QuadDiff, w: TangentVec, kind: NormKind = NormKind.TEICHMULLER) -> float:
    """``Re<w, q> - F(w)^2 / 2 - F*(q)^2 / 2``; never positive."""
    kind = NormKind(kind)
    dual = quad_conorm_teich(q) if kind is NormKind.TEICHMULLER else quad_conorm(kind, q)
    return pairing(w, q).real - 0.5 * norm(kind, w) ** 2 - 0.5 * dual ** 2


def legendre_numeric(q: QuadDiff, kind: NormKind = NormKind.TEICHMULLER) -> TangentVec:
    """Maximiser of :func:`legendre_functional` over the tangent plane.

    For a fixed direction ``d`` the functional is ``r s - r^2 F(d)^2 / 2 + const``
    with ``s = Re<d, q>``, maximised at ``r = s / F(d)^2``; the best direction
    maximises ``s / F(d)``.
    """
    if q.zeta == 0:
        return TangentVec(q.base, 0j)
    theta, ratio = _unit_circle_sup(lambda d: (0.5j * d * q.zeta).real, q.base, kind)
    d = complex(math.cos(theta), math.sin(theta))
    f_d = norm(kind, TangentVec(q.base, d))
    r = max(ratio, 0.0) / f_d
    return TangentVec(q.base, r * d)
