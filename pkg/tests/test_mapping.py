# tests/test_mapping.py
import numpy as np
from numpy.testing import assert_allclose
from pytest import mark, raises

from spinorlab.algebra.gamma import STANDARD
from spinorlab.lib.errors import SingularSpinorError
from spinorlab.spinors.bilinears import bilinears
from spinorlab.spinors.mapping import elko_map_conditions, mappability
from spinorlab.spinors.samples import class_witness
from spinorlab.spinors.spinor import SpinorC4


@mark.parametrize('components,label', [([1, 0, 0, 0], 2), ([1, 0, 1j, 0], 3)])
def test_constructed_spinors_are_mappable(components, label):
    psi = SpinorC4(np.array(components) * 0.8 * np.exp(0.4j), STANDARD)
    verdict = mappability(psi)
    assert verdict.actual_class == label
    assert verdict.mappable
    assert verdict.class1


def test_class2_condition_can_fail_alone():
    psi = SpinorC4([1, 1, 1j, 1j], STANDARD)
    report = elko_map_conditions(psi)
    assert_allclose(report.common, np.zeros(4), atol=1e-15)
    assert_allclose(report.class2, 1.0)
    assert_allclose(report.class3, 0.0, atol=1e-15)
    verdict = mappability(psi)
    assert verdict.actual_class == 3
    assert not verdict.class2
    assert verdict.class3
    assert not verdict.class1
    assert verdict.mappable


def test_common_and_class2_imply_class3(rng):
    for _ in range(20):
        c = rng.normal() + 1j * rng.normal()
        report = elko_map_conditions(SpinorC4([c, 0, 0, 0], STANDARD))
        assert max(abs(value) for value in report.common) < 1e-12
        assert abs(report.class2) < 1e-12
        assert abs(report.class3) < 1e-12


def test_component_forms_match(rng):
    for _ in range(50):
        report = elko_map_conditions(SpinorC4.random(rng, STANDARD))
        assert report.component_gap() < 1e-12
        assert_allclose(report.common_13, report.component_13, atol=1e-12)
        assert_allclose(report.common_24, report.component_24, atol=1e-12)


def test_chiral_common_conditions_measure_sigma(rng):
    psi = SpinorC4.random(rng)
    report = elko_map_conditions(psi)
    assert_allclose(report.common_13 + report.common_24, bilinears(psi).sigma / 2.0, atol=1e-12)
    assert not mappability(class_witness(2)).mappable


def test_random_spinors_fail(rng):
    passed = sum(mappability(SpinorC4.random(rng, STANDARD)).mappable for _ in range(200))
    assert passed / 200 < 0.01


def test_report_dictionary(rng):
    psi = SpinorC4.random(rng, STANDARD)
    report = elko_map_conditions(psi)
    record = report.as_dict()
    assert list(record) == ['common', 'class2', 'class3', 'components', 'table', 'third_line_minus_class3']
    z = psi.components
    assert_allclose(record['third_line_minus_class3'], -2.0 * np.imag(np.conj(z[2]) * z[3]), atol=1e-12)


def test_singular_spinors_are_rejected():
    with raises(SingularSpinorError):
        mappability(class_witness(5))
