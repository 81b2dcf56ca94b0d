import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240614)


def random_gray(rng, height, width, high=256):
    return rng.integers(0, high, size=(height, width), dtype=np.uint8)
