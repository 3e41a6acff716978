# tests/conftest.py
import numpy as np
import pytest

from spinorlab.algebra.clifford import ComplexMultivector, Multivector


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def random_multivector(rng):
    def build(complex_valued=False):
        coefficients = rng.normal(size=16)
        if complex_valued:
            return ComplexMultivector(coefficients + 1j * rng.normal(size=16))
        return Multivector(coefficients)
    return build


@pytest.fixture
def random_vector(rng):
    return lambda: Multivector.vector(rng.normal(size=4))
