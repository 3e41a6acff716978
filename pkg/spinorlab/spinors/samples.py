# spinors/samples.py
"""Seeded spinor generators and one fixed witness per Lounesto class."""
import numpy as np

from ..algebra.clifford import ONE
from ..algebra.gamma import CHIRAL
from .elko import ANTI, SELF, WeylC2, charge_conjugation, elko_rest, elko_spinor
from .flag_dipole import DirectionElement, operator_spinor_projection
from .representations import operator_spinor
from .spinor import SpinorC4

FAMILIES = ('regular', 'elko', 'majorana', 'weyl', 'flagdipole')


def random_spinor(rng, rep=CHIRAL):
    return SpinorC4.random(rng, rep)


def random_weyl(rng):
    return WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2))


def random_elko(rng):
    if rng.random() < 0.5:
        conjugacy = SELF if rng.random() < 0.5 else ANTI
        return elko_rest(random_weyl(rng), conjugacy).spinor
    momentum = rng.normal(size=3)
    lower = '+' if rng.random() < 0.5 else '-'
    conjugacy = SELF if rng.random() < 0.5 else ANTI
    return elko_spinor(lower, conjugacy, momentum, 1.0 + rng.random()).spinor


def random_single_handed(rng):
    phi = random_weyl(rng).components
    zeros = np.zeros(2, dtype=complex)
    blocks = [zeros, phi] if rng.random() < 0.5 else [phi, zeros]
    return SpinorC4(np.concatenate(blocks), CHIRAL)


def random_majorana(rng):
    xi = random_single_handed(rng)
    return xi.with_components(0.5 * (xi.components + charge_conjugation(xi).components))


def random_direction(rng, margin=0.05):
    """Unit spatial direction that is neither along e3 nor in the e1-e2 plane."""
    while True:
        vector = rng.normal(size=3)
        vector /= np.linalg.norm(vector)
        if margin < abs(vector[2]) < 1.0 - margin:
            return vector


def random_even(rng):
    return operator_spinor(*rng.normal(size=8))


def random_flag_dipole(rng, Psi=None):
    Psi = random_even(rng) if Psi is None else Psi
    return operator_spinor_projection(Psi, DirectionElement.spatial(random_direction(rng)))


GENERATORS = {
    'regular': random_spinor,
    'elko': random_elko,
    'majorana': random_majorana,
    'weyl': random_single_handed,
    'flagdipole': random_flag_dipole,
}


def class_witness(label, rep=CHIRAL):
    """A fixed spinor of the given class, expressed in rep."""
    if label in (1, 2, 3):
        phase = {1: np.pi / 4, 2: 0.0, 3: np.pi / 2}[label]
        psi = SpinorC4(np.array([1.0, 0.0, np.exp(1j * phase), 0.0]) / np.sqrt(2.0), CHIRAL)
    elif label == 4:
        psi = operator_spinor_projection(ONE, DirectionElement.spatial([1.0, 0.0, 1.0]))
    elif label == 5:
        psi = elko_rest(WeylC2([1.0, 0.0]), SELF).spinor
    elif label == 6:
        psi = SpinorC4([1.0, 0.0, 0.0, 0.0], CHIRAL)
    else:
        raise ValueError(f"Lounesto classes are labelled 1 to 6, got {label}")
    return psi.to_rep(rep)
