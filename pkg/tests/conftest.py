import math

import numpy as np
import pytest

from uncertainty_relations import (derive_seeds, random_hermitian, random_unit_vector,
                                   random_witness)

TEST_SEED = 20240229


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long randomized campaign (deselect with -m 'not slow')"
    )


@pytest.fixture
def spin1_thetas():
    """The 181-point θ grid over [0, π]."""
    return np.linspace(0.0, math.pi, 181)


@pytest.fixture
def make_instance():
    """Factory of reproducible random ``(A, B, ψ, ψ⊥)`` instances."""
    def make(dim, index, seed=TEST_SEED):
        seed_a, seed_b, seed_psi, seed_witness = derive_seeds(seed, index, 4)
        psi = random_unit_vector(dim, seed_psi)
        return (random_hermitian(dim, seed_a), random_hermitian(dim, seed_b), psi,
                random_witness(psi, seed_witness))
    return make


@pytest.fixture
def rng():
    return np.random.default_rng(TEST_SEED)
