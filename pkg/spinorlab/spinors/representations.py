# spinors/representations.py
"""
Classical, operator, ideal and quaternionic forms of a Dirac spinor.

The ideal picture uses the standard representation and the primitive
idempotent f = 1/4 (1 + e0)(1 + i e12), whose matrix is the unit E_11, so
an ideal element is a matrix with only its first column filled. The unit
imaginary of the complexified algebra plays the role of e5 = i e0123 here
and nowhere else.

Even element (operator spinor) coefficients and column components are tied by

    phi1 = c - i c12          phi2 = -c13 - i c23
    phi3 = -c03 + i c0123     phi4 = -c01 - i c02
"""
from dataclasses import dataclass
import numpy as np

from ..algebra.clifford import INDEX_OF_NAME, ComplexMultivector, Multivector
from ..algebra.gamma import STANDARD, gamma_matrices, matrix_of, multivector_of
from ..algebra.quaternion import Quaternion
from ..lib.bootstrap import logger
from ..lib.errors import RepresentationError
from .spinor import SpinorC4

EVEN_BLADES = ('1', 'e01', 'e02', 'e03', 'e12', 'e13', 'e23', 'e0123')

PRIMITIVE_IDEMPOTENT = ComplexMultivector(
    (0.25 * (1.0 + Multivector.blade('e0')) * (1.0 + Multivector.blade('e12', 1j))).coefficients
)


def operator_spinor(c=0.0, c01=0.0, c02=0.0, c03=0.0, c12=0.0, c13=0.0, c23=0.0, c0123=0.0):
    coefficients = np.zeros(16)
    for name, value in zip(EVEN_BLADES, (c, c01, c02, c03, c12, c13, c23, c0123)):
        coefficients[INDEX_OF_NAME[name]] = value
    return Multivector(coefficients)


def even_coefficients(Psi):
    return {name: float(np.real(Psi.coefficients[INDEX_OF_NAME[name]])) for name in EVEN_BLADES}


def _require_even(Psi, tol):
    if not Psi.is_even(tol):
        raise RepresentationError("(representations) operator spinor has odd-grade components")
    if np.any(np.abs(np.imag(Psi.coefficients)) > tol):
        raise RepresentationError("(representations) operator spinor must be real")


def even_to_ideal(Psi, tol=1e-12):
    """Psi f, an element of the minimal left ideal."""
    _require_even(Psi, tol)
    return ComplexMultivector((Psi * PRIMITIVE_IDEMPOTENT).coefficients)


def ideal_to_c4(ideal):
    """First column of the standard-representation matrix of an ideal element."""
    return SpinorC4(matrix_of(ideal, STANDARD)[:, 0], STANDARD)


def c4_to_even(psi):
    phi = psi.to_rep(STANDARD).components
    return operator_spinor(
        c=phi[0].real,
        c12=-phi[0].imag,
        c13=-phi[1].real,
        c23=-phi[1].imag,
        c03=-phi[2].real,
        c0123=phi[2].imag,
        c01=-phi[3].real,
        c02=-phi[3].imag,
    )


def ideal_to_even(ideal):
    return c4_to_even(ideal_to_c4(ideal))


def even_to_c4(Psi, tol=1e-12):
    return ideal_to_c4(even_to_ideal(Psi, tol))


def dirac_conjugate(a):
    """The element whose matrix is gamma_0 M^dagger gamma_0."""
    gamma0 = gamma_matrices(STANDARD).gammas[0]
    matrix = matrix_of(a, STANDARD)
    return multivector_of(gamma0 @ matrix.conj().T @ gamma0, STANDARD)


def hermitian_square(ideal):
    """Phi Phi^dagger-bar; for an ideal spinor this is psi psibar = Z / 4."""
    return ComplexMultivector((ideal * dirac_conjugate(ideal)).coefficients)


@dataclass(frozen=True)
class QuaternionPair:
    q1: Quaternion
    q2: Quaternion

    def norm2(self):
        return self.q1.norm2() + self.q2.norm2()

    def right_multiply(self, u):
        return QuaternionPair(self.q1 * u, self.q2 * u)

    def as_array(self):
        return np.concatenate([self.q1.as_array(), self.q2.as_array()])


def c4_to_quaternion_pair(psi):
    """q1 = c + c23 i - c13 j + c12 k,  q2 = c0123 - c01 i - c02 j - c03 k."""
    if psi.rep != STANDARD:
        logger.debug(f"(representations.c4_to_quaternion_pair) converting spinor from {psi.rep} to {STANDARD}")
    phi = psi.to_rep(STANDARD).components
    q1 = Quaternion(phi[0].real, -phi[1].imag, phi[1].real, -phi[0].imag)
    q2 = Quaternion(phi[2].imag, phi[3].real, phi[3].imag, phi[2].real)
    return QuaternionPair(q1, q2)


def quaternion_pair_to_c4(pair):
    q1, q2 = pair.q1, pair.q2
    return SpinorC4(
        [
            q1.w - 1j * q1.z,
            q1.y - 1j * q1.x,
            q2.z + 1j * q2.w,
            q2.x + 1j * q2.y,
        ],
        STANDARD,
    )
