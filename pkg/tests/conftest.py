import math

import hypothesis.strategies as st
import numpy as np
import pytest

from horotorus import HalfPlanePoint, TangentVec, canonicalize


def close(a, b, tol):
    return abs(a - b) <= tol


coords_u = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
coords_v = st.floats(min_value=0.2, max_value=5.0, allow_nan=False)
points = st.builds(HalfPlanePoint, coords_u, coords_v)


@st.composite
def foliations(draw):
    # exact b = 0, or angles bounded away from it: below ~1e-9 the rounded
    # flow matrix no longer encodes the sign of its fixed point
    phi = draw(st.just(0.0) | st.floats(min_value=1e-9, max_value=math.pi - 1e-9))
    weight = draw(st.floats(min_value=0.5, max_value=2.0))
    return canonicalize(weight * math.cos(phi), weight * math.sin(phi))


components = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_subnormal=False)
complexes = st.builds(complex, components, components)


@st.composite
def vectors(draw, base=None, nonzero=False):
    tau = base if base is not None else draw(points)
    c = draw(complexes)
    if nonzero:
        c = c if abs(c) > 1e-3 else complex(1.0, c.imag)
    return TangentVec(tau, c)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def i_point():
    return HalfPlanePoint(0.0, 1.0)
