import numpy as np
import pytest

from g2theta import make_period_matrix
from g2theta.harness import sample_moduli, sample_point


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def omega():
    return make_period_matrix(0.2 + 1.2j, -0.3 + 1.6j, 0.15 + 0.45j)


def random_omega(rng):
    return sample_moduli(rng)


def random_point(rng, omega):
    return sample_point(rng, omega)
