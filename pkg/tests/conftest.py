import numpy as np
import pytest

from hadwalk import hadamard, identity_coin


@pytest.fixture(scope="session")
def H():
    return hadamard()


@pytest.fixture(scope="session")
def I2():
    return identity_coin()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240613)
