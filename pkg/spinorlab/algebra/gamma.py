# algebra/gamma.py
"""
4x4 complex matrix representations of Cl(1,3).

The abstract basis vector e_mu maps to the lower-index matrix gamma_mu and
each blade maps to the ordered product of its factors. gamma_5 is
i gamma^0 gamma^1 gamma^2 gamma^3 = -i gamma_0123.
"""
from dataclasses import dataclass, field
from functools import lru_cache
import numpy as np

from .clifford import BLADE_MASKS, METRIC, ComplexMultivector, from_coefficients
from ..lib.errors import RepresentationError

CHIRAL = 'chiral'
STANDARD = 'standard'
REPRESENTATIONS = (CHIRAL, STANDARD)

I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# chiral <-> standard; the matrix is its own inverse
SIMILARITY = np.block([[I2, I2], [I2, -I2]]) / np.sqrt(2.0)


def _chiral_gammas():
    gammas = [np.block([[Z2, I2], [I2, Z2]])]
    for sigma in PAULI:
        gammas.append(np.block([[Z2, sigma], [-sigma, Z2]]))
    return np.array(gammas)


def _standard_gammas():
    gammas = [np.block([[I2, Z2], [Z2, -I2]])]
    for sigma in PAULI:
        gammas.append(np.block([[Z2, -sigma], [sigma, Z2]]))
    return np.array(gammas)


@dataclass(frozen=True, eq=False)
class GammaRep:
    tag: str
    gammas: np.ndarray
    blades: np.ndarray = field(init=False)
    inverse_blades: np.ndarray = field(init=False)

    def __post_init__(self):
        blades = []
        for mask in BLADE_MASKS:
            matrix = np.eye(4, dtype=complex)
            for i in range(4):
                if mask & (1 << i):
                    matrix = matrix @ self.gammas[i]
            blades.append(matrix)
        blades = np.array(blades)
        object.__setattr__(self, 'blades', blades)
        object.__setattr__(self, 'inverse_blades', np.linalg.inv(blades))

    def upper(self, mu):
        """gamma^mu = eta^{mu mu} gamma_mu."""
        return METRIC[mu] * self.gammas[mu]

    @property
    def pseudoscalar(self):
        return self.blades[-1]

    @property
    def gamma5(self):
        return -1j * self.pseudoscalar

    def anticommutator_residual(self):
        worst = 0.0
        for mu in range(4):
            for nu in range(4):
                anti = self.gammas[mu] @ self.gammas[nu] + self.gammas[nu] @ self.gammas[mu]
                target = 2.0 * (METRIC[mu] if mu == nu else 0.0) * np.eye(4)
                worst = max(worst, float(np.max(np.abs(anti - target))))
        return worst


@lru_cache(maxsize=None)
def gamma_matrices(tag):
    if tag == CHIRAL:
        return GammaRep(CHIRAL, _chiral_gammas())
    if tag == STANDARD:
        return GammaRep(STANDARD, _standard_gammas())
    raise RepresentationError(f"unknown gamma representation '{tag}', expected one of {', '.join(REPRESENTATIONS)}")


def change_of_basis(source, target):
    """Matrix T with psi_target = T psi_source and gamma(target) = T gamma(source) T^-1."""
    gamma_matrices(source)
    gamma_matrices(target)
    if source == target:
        return np.eye(4, dtype=complex)
    return SIMILARITY


def matrix_of(a, tag):
    """Matrix image of a (complex) multivector."""
    rep = gamma_matrices(tag)
    return np.einsum('k,kij->ij', np.asarray(a.coefficients, dtype=complex), rep.blades)


def multivector_of(matrix, tag):
    """Inverse of matrix_of: coefficient on blade A is tr(M Gamma_A^-1) / 4."""
    rep = gamma_matrices(tag)
    coefficients = np.einsum('ij,kji->k', np.asarray(matrix, dtype=complex), rep.inverse_blades) / 4.0
    result = from_coefficients(coefficients)
    return result if isinstance(result, ComplexMultivector) else ComplexMultivector(result.coefficients)
