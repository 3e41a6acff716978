# tests/test_quaternion.py
from numpy.testing import assert_allclose
from pytest import raises

from spinorlab.algebra import quaternion as quat
from spinorlab.algebra.clifford import Multivector
from spinorlab.algebra.quaternion import Quaternion


def test_hamilton_rules():
    assert quat.I * quat.J == quat.K
    assert quat.J * quat.K == quat.I
    assert quat.K * quat.I == quat.J
    assert quat.I * quat.I == Quaternion(-1.0)


def test_embedding_is_a_homomorphism(rng):
    p = Quaternion.from_array(rng.normal(size=4))
    q = Quaternion.from_array(rng.normal(size=4))
    assert_allclose((p * q).embed().coefficients, (p.embed() * q.embed()).coefficients, atol=1e-12)


def test_norm_is_multiplicative(rng):
    p = Quaternion.from_array(rng.normal(size=4))
    q = Quaternion.from_array(rng.normal(size=4))
    assert_allclose((p * q).norm2(), p.norm2() * q.norm2())
    assert_allclose((p * p.conjugate()).as_array(), [p.norm2(), 0, 0, 0], atol=1e-12)


def test_dot_is_real_part_of_conjugate_product(rng):
    p = Quaternion.from_array(rng.normal(size=4))
    q = Quaternion.from_array(rng.normal(size=4))
    assert_allclose(p.dot(q), (p.conjugate() * q).w)


def test_random_unit(rng):
    assert_allclose(Quaternion.random_unit(rng).norm2(), 1.0)


def test_multivector_round_trip(rng):
    q = Quaternion.from_array(rng.normal(size=4))
    assert_allclose(Quaternion.from_multivector(q.embed()).as_array(), q.as_array())
    with raises(ValueError):
        Quaternion.from_multivector(Multivector.blade('e1'))


def test_conjugate_reverses_products(rng):
    p = Quaternion.from_array(rng.normal(size=4))
    q = Quaternion.from_array(rng.normal(size=4))
    assert_allclose(quat.quaternion_conjugate(p).as_array(), p.as_array() * [1, -1, -1, -1])
    assert_allclose(quat.quaternion_conjugate(quat.quaternion_product(p, q)).as_array(),
                    (quat.quaternion_conjugate(q) * quat.quaternion_conjugate(p)).as_array(), atol=1e-12)
