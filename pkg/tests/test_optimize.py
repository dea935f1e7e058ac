import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from horotorus import MoebiusMap
from horotorus.optimize import (
    golden_max,
    golden_max_scalar,
    grid_argmax,
    grid_golden_max,
    parabolic_polish,
)


@given(st.floats(-1.0, 1.0))
def test_golden_scalar_finds_peak(x0):
    x, fx = golden_max_scalar(lambda x: -(x - x0) ** 2, -2.0, 2.0)
    assert abs(x - x0) <= 1e-8
    assert fx <= 0.0


def test_golden_batched_rows_independent():
    centres = np.array([-0.5, 0.1, 0.7]).reshape(-1, 1)
    x, fx = golden_max(lambda x: np.cos(x - centres), -np.ones(3), np.ones(3))
    assert x == pytest.approx(centres[:, 0], abs=1e-8)
    assert fx == pytest.approx(1.0, abs=1e-15)


def test_grid_argmax_spacing():
    x, fx, h = grid_argmax(lambda t: np.sin(t), 0.0, 2 * math.pi, n_grid=64)
    assert h == pytest.approx(2 * math.pi / 64)
    assert abs(x[0] - math.pi / 2) <= h


@given(st.floats(0.0, 2 * math.pi))
def test_grid_golden_periodic(phase):
    x, fx = grid_golden_max(lambda t: np.cos(t - phase), 0.0, 2 * math.pi)
    assert fx[0] == pytest.approx(1.0, abs=1e-15)
    d = (x[0] - phase + math.pi) % (2 * math.pi) - math.pi
    assert abs(d) <= 1e-7


def test_parabolic_polish_beats_value_comparison():
    # value comparisons stall near sqrt(eps); the parabola vertex does not
    x0 = 0.123456789012
    f = lambda x: 1.0 - (x - x0) ** 2
    x, _ = golden_max_scalar(f, 0.0, 1.0)
    assert abs(parabolic_polish(f, x) - x0) <= 1e-12


def test_parabolic_polish_rejects_minimum():
    assert parabolic_polish(lambda x: x * x, 0.3) == 0.3


def test_parabolic_fixed_point_far_out():
    # flow matrix with fixed point 1e15, where m11 - m22 cancels
    a, b, s = -1.0, 1e-15, 1.0
    m = MoebiusMap(1 - s * a * b, -s * a * a, s * b * b, 1 + s * a * b)
    assert m.parabolic_fixed_point() == pytest.approx(-a / b, rel=1e-12)
    assert MoebiusMap(1, 5, 0, 1).parabolic_fixed_point() == math.inf
