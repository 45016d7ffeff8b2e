import numpy as np
import pytest

from lfunk.verify import random_points


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


def pairs_in_disk(rng, n, radius):
    return random_points(rng, n, radius), random_points(rng, n, radius)
