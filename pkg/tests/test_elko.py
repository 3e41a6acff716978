# tests/test_elko.py
import numpy as np
from numpy.testing import assert_allclose
from pytest import mark, raises

from spinorlab.algebra.gamma import STANDARD
from spinorlab.lib.errors import HelicityError, NullSpinorError, RepresentationError
from spinorlab.spinors.bilinears import bilinears
from spinorlab.spinors.classifier import classify
from spinorlab.spinors.elko import (
    ANTI,
    SELF,
    WeylC2,
    boost_factor,
    charge_conjugation,
    charge_eigenvalue,
    dirac_from_left,
    dual_product,
    elko_basis,
    elko_boost,
    elko_dual,
    elko_rest,
    elko_rest_closed_form,
    elko_spinor,
    helicity_eigenspinor,
    majorana_from_weyl,
    penrose_flag,
    penrose_pole,
    weyl_spinor,
)
from spinorlab.spinors.spinor import SpinorC4


def test_rest_elko_components():
    phi = WeylC2([1.0, 0.0])
    assert_allclose(elko_rest(phi, SELF).components, [0, 1j, 1, 0])
    assert_allclose(elko_rest(phi, ANTI).components, [0, -1j, 1, 0])


def test_rest_elko_needs_nonzero_weyl_spinor():
    with raises(NullSpinorError):
        elko_rest(WeylC2([0.0, 0.0]))
    with raises(ValueError):
        elko_rest(WeylC2([1.0, 0.0]), 'both')


def test_helicity_labels_are_opposite():
    lam = elko_rest(helicity_eigenspinor([0, 0, 1], '+'))
    assert lam.helicity == ('-', '+')


@mark.parametrize('sign', ['+', '-'])
def test_helicity_eigenspinors(sign, rng):
    phi = helicity_eigenspinor(rng.normal(size=3), sign)
    assert phi.helicity_residual() < 1e-14
    assert_allclose(np.linalg.norm(phi.components), 1.0)


def test_helicity_sign_is_validated():
    with raises(ValueError):
        helicity_eigenspinor([0, 0, 1], 'up')
    with raises(ValueError):
        WeylC2([1.0, 0.0, 0.0])


def test_elko_basis_is_class_5(rng):
    for p in [np.zeros(3)] + [rng.normal(size=3) for _ in range(5)]:
        basis = elko_basis(p, 1.5)
        assert len(basis) == 4
        for lam in basis.values():
            b = bilinears(lam.spinor)
            assert classify(b).label == 5
            assert max(abs(b.sigma), abs(b.omega), np.linalg.norm(b.K)) < 1e-10 * b.J[0]


def test_boost_factor():
    assert boost_factor(('-', '+'), np.zeros(3), 1.0) == 1.0
    p = np.array([0.0, 0.0, 0.75])
    energy = 1.25
    expected = np.sqrt((energy + 1.0) / 2.0) * (1.0 + 0.75 / (energy + 1.0))
    assert_allclose(boost_factor(('+', '-'), p, 1.0), expected)
    expected = np.sqrt((energy + 1.0) / 2.0) * (1.0 - 0.75 / (energy + 1.0))
    assert_allclose(boost_factor(('-', '+'), p, 1.0), expected)
    with raises(ValueError):
        boost_factor(('+', '-'), p, 0.0)
    with raises(HelicityError):
        boost_factor(None, p, 1.0)


def test_boost_must_follow_helicity_axis():
    lam = elko_rest(helicity_eigenspinor([0, 0, 1], '+'))
    boosted = elko_boost(lam, [0.0, 0.0, 2.0], 1.0)
    assert_allclose(boosted.components, boost_factor(lam.helicity, [0, 0, 2.0], 1.0) * lam.components)
    with raises(ValueError):
        elko_boost(lam, [1.0, 0.0, 0.0], 1.0)


@mark.parametrize('conjugacy,eigenvalue', [(SELF, 1), (ANTI, -1)])
def test_elkos_are_charge_eigenspinors(conjugacy, eigenvalue, rng):
    for lower in ('+', '-'):
        lam = elko_spinor(lower, conjugacy, rng.normal(size=3), 2.0)
        assert_allclose(charge_conjugation(lam.spinor).components, eigenvalue * lam.components, atol=1e-12)
        assert charge_eigenvalue(lam.spinor) == eigenvalue


def test_charge_conjugation_is_an_involution(rng):
    for _ in range(20):
        psi = SpinorC4.random(rng)
        assert_allclose(charge_conjugation(charge_conjugation(psi)).components, psi.components, atol=1e-12)
    assert charge_eigenvalue(SpinorC4([1.0, 0.0, 1.0, 0.0])) is None


def test_charge_conjugation_needs_chiral_representation(rng):
    with raises(RepresentationError):
        charge_conjugation(SpinorC4.random(rng, STANDARD))


def test_dual_products_at_rest():
    basis = elko_basis()
    for (helicity, conjugacy), left in basis.items():
        for (other_helicity, other_conjugacy), right in basis.items():
            product = dual_product(left, right)
            if (helicity, conjugacy) == (other_helicity, other_conjugacy):
                assert_allclose(product, -2.0 if conjugacy == SELF else 2.0, atol=1e-12)
            else:
                assert_allclose(product, 0.0, atol=1e-12)


def test_dual_is_antilinear():
    lam = elko_spinor('+', SELF)
    assert_allclose(dual_product(lam.scaled(2j), lam.scaled(2j)), -8.0, atol=1e-12)
    assert_allclose(elko_dual(lam.scaled(2j)), -2j * elko_dual(lam), atol=1e-12)


def test_dual_needs_helicity_label():
    with raises(HelicityError):
        elko_dual(elko_rest(WeylC2([1.0, 1.0])))


@mark.parametrize('epsilon', [1, -1])
def test_dirac_from_left_is_type2(epsilon, rng):
    phi = WeylC2([1.0, 0.0])
    rest = dirac_from_left(phi, np.zeros(3), 1.0, epsilon)
    assert_allclose(rest.components, [epsilon, 0, 1, 0])
    moving = dirac_from_left(WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2)), rng.normal(size=3), 0.7, epsilon)
    assert classify(bilinears(moving)).label == 2
    with raises(ValueError):
        dirac_from_left(phi, np.zeros(3), -1.0)


@mark.parametrize('handedness', ['left', 'right'])
def test_weyl_spinors_are_class_6(handedness):
    psi = weyl_spinor(WeylC2([0.3, 1j]), handedness)
    assert classify(bilinears(psi)).label == 6


def test_majorana_from_weyl(rng):
    xi = weyl_spinor(WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2)))
    plus, minus = majorana_from_weyl(xi)
    assert charge_eigenvalue(plus) == 1
    assert charge_eigenvalue(minus) == -1
    assert_allclose((plus + minus).components, xi.components)
    assert classify(bilinears(plus)).label == 5
    assert classify(bilinears(minus)).label == 5


def test_penrose_pole_and_flag(rng):
    lam = elko_spinor('-', ANTI, rng.normal(size=3), 1.0)
    b = bilinears(lam.spinor)
    assert_allclose(penrose_pole(lam).vector_part, b.J / 8.0, atol=1e-12)
    assert_allclose(penrose_flag(lam).bivector_part, b.S / 8.0, atol=1e-12)


@mark.parametrize('conjugacy', [SELF, ANTI])
def test_rest_bilinears_match_closed_form(conjugacy, rng):
    for _ in range(50):
        phi = WeylC2(rng.normal(size=2) + 1j * rng.normal(size=2))
        b = bilinears(elko_rest(phi, conjugacy).spinor)
        J, S = elko_rest_closed_form(phi, conjugacy)
        assert_allclose(b.J, J, atol=1e-12 * b.J[0])
        assert_allclose(b.S, S, atol=1e-12 * b.J[0])


def test_closed_form_current_components():
    phi = WeylC2([0.3 + 0.7j, -0.4 + 0.2j])
    for conjugacy in (SELF, ANTI):
        J, _ = elko_rest_closed_form(phi, conjugacy)
        assert_allclose(J, [1.56, -0.08, -1.36, -0.76], atol=1e-12)
        assert_allclose(bilinears(elko_rest(phi, conjugacy).spinor).J, J, atol=1e-12)


def test_closed_form_spin_flips_with_conjugacy():
    phi = WeylC2([1.0, 0.0])
    _, S = elko_rest_closed_form(phi, SELF)
    assert_allclose(S, [-2.0, 0.0, 0.0, 0.0, -2.0, 0.0])
    _, S_anti = elko_rest_closed_form(phi, ANTI)
    assert_allclose(S_anti, -S)
    with raises(ValueError):
        elko_rest_closed_form(phi, 'both')
