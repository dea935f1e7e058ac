"""Independent reference computations used by the tests.

Nothing here calls the closed forms it is used to check.
"""
import math

import numpy as np

from horotorus import HalfPlanePoint


def central_diff(fn, tau: HalfPlanePoint, direction: complex, h: float = 1e-6) -> float:
    h = h * max(1.0, abs(tau.u), tau.v)
    p = HalfPlanePoint.from_complex(tau.tau + h * direction)
    m = HalfPlanePoint.from_complex(tau.tau - h * direction)
    return (fn(p) - fn(m)) / (2.0 * h)


def time_derivative(path, t0: float = 0.0, h: float = 1e-6) -> complex:
    """Central difference of a complex-valued path ``t -> path(t)``."""
    return (path(t0 + h) - path(t0 - h)) / (2.0 * h)


def parallelogram_midpoint(integrand, tau: complex, n: int = 64) -> complex:
    """Midpoint rule for ``integral integrand(z) dx dy`` over the cell spanned by 1 and tau."""
    s = (np.arange(n) + 0.5) / n
    ss, tt = np.meshgrid(s, s, indexing="ij")
    z = ss + tt * tau
    jac = tau.imag
    return complex(np.sum(integrand(z)) * jac / (n * n))


def affine_beltrami_rate(tau: complex, direction: complex, h: float = 1e-6) -> complex:
    """d/dt of the Beltrami coefficient of the affine map taking M_tau to M_{tau + t direction}.

    The map is ``z -> alpha z + beta conj(z)`` with ``1 -> 1`` and ``tau -> tau + t d``.
    """

    def mu(t):
        new = tau + t * direction
        # alpha + beta = 1, alpha tau + beta conj(tau) = new
        beta = (new - tau) / (tau.conjugate() - tau)
        alpha = 1.0 - beta
        return beta / alpha

    return (mu(h) - mu(-h)) / (2.0 * h)


def segment_integral_abs_re(w: complex, end: complex, n: int = 2000) -> float:
    """``integral |Re(w dz)|`` along the straight segment 0 -> end (midpoint rule)."""
    # w is constant, so every subinterval contributes the same amount
    dz = end / n
    return float(np.sum(np.full(n, abs((w * dz).real))))


def brute_force_sup(values_fn, n: int = 200_000, period: float = 2 * math.pi):
    theta = np.linspace(0.0, period, n, endpoint=False)
    vals = values_fn(theta)
    j = int(np.argmax(vals))
    return float(theta[j]), float(vals[j])
