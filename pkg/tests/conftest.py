import math

import numpy as np
import pytest


def trapezoid_grid(half_width, points):
    x = np.linspace(-half_width, half_width, points)
    w = np.full(points, x[1] - x[0])
    w[[0, -1]] *= 0.5
    return x, w


@pytest.fixture
def line():
    """Wide trapezoid grid for unit-frequency Gaussians (tails below 1e-20)."""
    return trapezoid_grid(10.0, 801)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rel(x, y):
    x, y = np.asarray(x, float), np.asarray(y, float)
    return float(np.max(np.abs(x - y) / np.abs(y)))


SQRT3 = math.sqrt(3.0)
