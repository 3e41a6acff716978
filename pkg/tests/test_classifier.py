# tests/test_classifier.py
import numpy as np
from pytest import mark, raises

from spinorlab.algebra.gamma import REPRESENTATIONS
from spinorlab.lib.errors import ClassInconsistencyError, NullSpinorError
from spinorlab.spinors.bilinears import BilinearSet, bilinears
from spinorlab.spinors.classifier import CLASS_NAMES, classify, is_singular, verify_class_relations
from spinorlab.spinors.samples import GENERATORS, class_witness
from spinorlab.spinors.spinor import SpinorC4


@mark.parametrize('rep', REPRESENTATIONS)
@mark.parametrize('label', range(1, 7))
def test_class_witnesses(label, rep):
    lounesto = classify(bilinears(class_witness(label, rep)))
    assert lounesto.label == label
    assert lounesto.regular == (label <= 3)
    assert lounesto.name == CLASS_NAMES[label]
    assert not lounesto.is_marginal


def test_witness_label_out_of_range():
    with raises(ValueError):
        class_witness(7)


@mark.parametrize('family,label', [('elko', 5), ('majorana', 5), ('weyl', 6), ('flagdipole', 4), ('regular', 1)])
def test_family_classes(family, label, rng):
    for _ in range(20):
        assert classify(bilinears(GENERATORS[family](rng))).label == label


def test_label_is_phase_and_scale_invariant(rng):
    for family in GENERATORS:
        psi = GENERATORS[family](rng)
        label = classify(bilinears(psi)).label
        factor = rng.uniform(0.1, 10.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        assert classify(bilinears(psi.scaled(factor))).label == label


def test_null_spinor():
    with raises(NullSpinorError):
        classify(bilinears(SpinorC4.zero()))


def test_inconsistent_bilinears():
    b = BilinearSet(0.0, 0.0, [1.0, 0.0, 0.0, 1.0], np.zeros(4), np.zeros(6))
    with raises(ClassInconsistencyError):
        classify(b)


def test_marginal_quantities_are_flagged():
    b = BilinearSet(5e-11, 0.0, [1.0, 0.0, 0.0, 1.0], np.zeros(4), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    lounesto = classify(b)
    assert lounesto.label == 5
    assert lounesto.marginal == ('sigma',)
    assert lounesto.is_marginal


def test_tolerance_scales_with_current():
    b = BilinearSet(5e-9, 0.0, [100.0, 0.0, 0.0, 100.0], np.zeros(4), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    # threshold is tol * J0 = 1e-8 by default
    assert classify(b).label == 5
    assert classify(b).marginal == ('sigma',)
    assert classify(b, tol=1e-12).label == 2


def test_is_singular():
    assert is_singular(bilinears(class_witness(5)))
    assert not is_singular(bilinears(class_witness(1)))


@mark.parametrize('label', [1, 2, 3])
def test_regular_class_relations(label):
    b = bilinears(class_witness(label))
    report = verify_class_relations(b, classify(b))
    assert report.residuals
    assert max(report.residuals.values()) < 1e-12


def test_printed_type3_relation_is_only_reported():
    b = bilinears(class_witness(3))
    report = verify_class_relations(b, classify(b))
    assert 'printed_type3_relation' in report.reported
    assert 'printed_type3_relation' not in report.residuals


@mark.parametrize('label', [4, 5, 6])
def test_singular_class_relations(label):
    b = bilinears(class_witness(label))
    report = verify_class_relations(b, classify(b))
    assert max(report.residuals.values()) < 1e-12
