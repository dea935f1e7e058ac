"""Derivative-free 1-D maximisation: dense grid, then golden-section refinement.

Everything is batched: ``f`` receives an array of shape ``(m, k)`` of
abscissae (one row per independent problem) and returns values of the same
shape. Objectives here are smooth with at most a couple of well separated
maxima per period, so one grid cell on each side of the best grid point is a
valid bracket.
"""
from __future__ import annotations

import math

import numpy as np

GRID_SIZE = 4096
GOLDEN_TOL = 1e-8
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo: np.ndarray, hi: np.ndarray, tol: float = GOLDEN_TOL):
    """Maximise ``f`` on ``[lo, hi]`` row-wise. Returns ``(x, f(x))`` of shape ``(m,)``."""
    a = np.asarray(lo, dtype=float).reshape(-1, 1).copy()
    b = np.asarray(hi, dtype=float).reshape(-1, 1).copy()
    width = float(np.max(b - a)) if a.size else 0.0
    n_iter = max(0, math.ceil(math.log(tol / width) / math.log(_INVPHI))) if width > tol else 0
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(n_iter):
        left = fc > fd
        a = np.where(left, a, c)
        b = np.where(left, d, b)
        x_new = np.where(left, b - _INVPHI * (b - a), a + _INVPHI * (b - a))
        f_new = f(x_new)
        c, d, fc, fd = (
            np.where(left, x_new, d),
            np.where(left, c, x_new),
            np.where(left, f_new, fd),
            np.where(left, fc, f_new),
        )
    x = 0.5 * (a + b)
    return x[:, 0], f(x)[:, 0]


def golden_max_scalar(f, lo: float, hi: float, tol: float = GOLDEN_TOL):
    """Scalar golden-section search; ``f`` takes and returns plain floats."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def parabolic_polish(f, x: float, delta: float = 1e-4, rounds: int = 2) -> float:
    """Refine a maximiser with three-point parabolic steps.

    Value comparisons cannot place an argmax closer than about sqrt(machine
    epsilon); the vertex of the interpolating parabola can. Steps that leave
    ``[x - delta, x + delta]`` or see no curvature are rejected.
    """
    for _ in range(rounds):
        fm, f0, fp = f(x - delta), f(x), f(x + delta)
        curv = fp - 2.0 * f0 + fm
        if not curv < 0:
            break
        step = -delta * (fp - fm) / (2.0 * curv)
        if abs(step) > delta:
            break
        x += step
        delta = max(abs(step) * 10.0, 1e-6)
    return x


def grid_argmax(f, start: float, period: float, m: int = 1, n_grid: int = GRID_SIZE):
    """Best point of a uniform grid over one period, row-wise.

    ``f`` is called once with a ``(1, n_grid)`` array and may broadcast it
    against per-row parameters. Returns ``(x, fx, h)`` with ``h`` the spacing.
    """
    h = period / n_grid
    grid = start + h * np.arange(n_grid)
    values = np.broadcast_to(f(grid[None, :]), (m, n_grid))
    j = np.argmax(values, axis=1)
    return grid[j], values[np.arange(m), j], h


def grid_golden_max(f, start: float, period: float, m: int = 1,
                    n_grid: int = GRID_SIZE, tol: float = GOLDEN_TOL):
    """Maximise a ``period``-periodic batched objective over one period.

    Returns ``(x, fx)`` arrays of shape ``(m,)``.
    """
    best_x, best_f, h = grid_argmax(f, start, period, m, n_grid)
    x, fx = golden_max(f, best_x - h, best_x + h, tol)
    # never return worse than the grid (guards against a flat/degenerate bracket)
    keep = fx >= best_f
    return np.where(keep, x, best_x), np.where(keep, fx, best_f)
