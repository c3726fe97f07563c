import cmath
import math

import numpy as np
import pytest
from hypothesis import strategies as st

SEED = 20260814


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def finite_floats(lo, hi):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


def disk_points(max_r=0.9):
    """Points strictly inside the unit disk, bounded away from the absolute."""
    return st.builds(cmath.rect, finite_floats(0.0, max_r), finite_floats(0.0, 2.0 * math.pi))


def plane_points(box=10.0):
    return st.builds(complex, finite_floats(-box, box), finite_floats(-box, box))


def unit_vectors():
    """Unit 3-vectors, reasonably spread over the sphere."""

    def mk(t, z):
        s = math.sqrt(max(0.0, 1.0 - z * z))
        return np.array([s * math.cos(t), s * math.sin(t), z])

    return st.builds(mk, finite_floats(0.0, 2.0 * math.pi), finite_floats(-1.0, 1.0))


def random_disk_point(gen, max_r=0.9):
    r = max_r * math.sqrt(gen.uniform())
    t = gen.uniform(0.0, 2.0 * math.pi)
    return cmath.rect(r, t)


def random_plane_point(gen, box=10.0):
    return complex(gen.uniform(-box, box), gen.uniform(-box, box))
