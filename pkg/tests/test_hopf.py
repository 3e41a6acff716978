# tests/test_hopf.py
import numpy as np
from numpy.testing import assert_allclose
from pytest import fixture, raises

from spinorlab.algebra.gamma import STANDARD
from spinorlab.algebra.quaternion import Quaternion
from spinorlab.lib.errors import NonUnitError, NullSpinorError
from spinorlab.spinors.elko import WeylC2, elko_rest
from spinorlab.spinors.hopf import (
    component_fiber_action,
    component_sigma,
    direct_discrepancy,
    hopf_from_components,
    hopf_map,
    hopf_via_quaternions,
    instanton_obstruction,
    j_structure,
    minimum_current_norm,
)
from spinorlab.spinors.representations import QuaternionPair, c4_to_quaternion_pair
from spinorlab.spinors.samples import random_elko
from spinorlab.spinors.spinor import SpinorC4


@fixture
def unit_spinors(rng):
    spinors = []
    for _ in range(50):
        psi = SpinorC4.random(rng, STANDARD)
        spinors.append(psi.scaled(1.0 / np.sqrt(psi.norm2())))
    return spinors


def test_north_pole():
    point = hopf_map(QuaternionPair(Quaternion(1.0), Quaternion()))
    assert_allclose(point.as_array(), [1, 0, 0, 0, 0])


def test_hopf_map_needs_unit_input():
    with raises(NonUnitError):
        hopf_map(QuaternionPair(Quaternion(1.0), Quaternion(1.0)))


def test_image_lies_on_s4(unit_spinors):
    for psi in unit_spinors:
        assert abs(hopf_via_quaternions(psi).norm() - 1.0) < 1e-10
        assert abs(hopf_from_components(psi).norm() - 1.0) < 1e-10


def test_component_and_quaternion_routes_agree(unit_spinors):
    for psi in unit_spinors:
        assert_allclose(hopf_via_quaternions(psi).as_array(), hopf_from_components(psi).as_array(), atol=1e-12)


def test_right_multiplication_fiber(unit_spinors, rng):
    for psi in unit_spinors:
        pair = c4_to_quaternion_pair(psi)
        moved = pair.right_multiply(Quaternion.random_unit(rng))
        assert_allclose(hopf_map(moved).as_array(), hopf_map(pair).as_array(), atol=1e-12)


def test_component_fiber(unit_spinors, rng):
    for psi in unit_spinors:
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        scale = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
        moved = component_fiber_action(psi, a / scale, b / scale)
        assert_allclose(hopf_from_components(moved).as_array(), hopf_from_components(psi).as_array(), atol=1e-12)


def test_j_structure_squares_to_minus_one(rng):
    psi = SpinorC4.random(rng, STANDARD)
    assert_allclose(j_structure(j_structure(psi)).components, -psi.components)


def test_direct_bilinears_swap_sigma_and_j0(rng):
    psi = SpinorC4.random(rng)
    report = direct_discrepancy(psi)
    assert report['swapped']
    assert_allclose(report['component_sigma'], psi.norm2())
    assert_allclose(component_sigma(psi), report['direct_J0'])


def test_elko_cannot_reach_s7():
    report = instanton_obstruction(elko_rest(WeylC2([1.0, 0.0])).spinor)
    assert_allclose(report.current_norm, 2.0 * np.sqrt(2.0))
    assert_allclose(report.J0, 2.0)
    assert not report.on_s7
    assert report.singular


def test_random_elkos_are_off_s7(rng):
    assert not any(instanton_obstruction(random_elko(rng)).on_s7 for _ in range(50))


def test_current_never_vanishes(rng):
    spinors = [SpinorC4.random(rng) for _ in range(100)] + [random_elko(rng) for _ in range(100)]
    assert minimum_current_norm(spinors) >= 1.0 - 1e-12


def test_zero_spinor_has_no_image():
    with raises(NullSpinorError):
        instanton_obstruction(SpinorC4.zero())
