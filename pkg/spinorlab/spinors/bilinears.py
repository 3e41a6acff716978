# spinors/bilinears.py
"""
Bilinear covariants of a Dirac spinor and the Fierz aggregate built from them.

Components are stored as the coefficients of the multivectors they form,
so J, K carry upper indices (J = J^mu e_mu) and S carries the six
coefficients S^{mu nu} on e_mu e_nu for mu < nu:

    sigma    = psibar psi
    J^mu     = psibar gamma^mu psi
    S^{mu nu} = psibar i gamma^mu gamma^nu psi
    K^mu     = psibar i gamma_0123 gamma^mu psi
    omega    = -psibar gamma_0123 psi

With this normalization Z = 4 psi psibar = sigma + J + iS + iK e0123 + omega e0123.
"""
from collections import namedtuple
from dataclasses import dataclass
import numpy as np

from ..algebra.clifford import (
    BIVECTOR_PAIRS,
    PSEUDOSCALAR,
    ComplexMultivector,
    Multivector,
    minkowski_dot,
    minkowski_square,
)
from ..algebra.gamma import CHIRAL, gamma_matrices, matrix_of
from ..lib.bootstrap import logger
from ..lib.errors import DegenerateProbeError, RepresentationError
from .spinor import SpinorC4

DEFAULT_TOLERANCE = 1e-10

FierzResiduals = namedtuple('FierzResiduals', ['norm', 'dual_norm', 'orthogonality', 'wedge'])
GeneralizedResiduals = namedtuple('GeneralizedResiduals', ['square', 'current', 'spin', 'axial', 'pseudoscalar'])


@dataclass(frozen=True, eq=False)
class BilinearSet:
    sigma: float
    omega: float
    J: np.ndarray
    K: np.ndarray
    S: np.ndarray
    residual: float = 0.0

    def __post_init__(self):
        for name, size in (('J', 4), ('K', 4), ('S', 6)):
            value = np.array(getattr(self, name), dtype=float).reshape(-1)
            if value.shape != (size,):
                raise ValueError(f"{name} needs {size} components, got {value.shape[0]}")
            value.flags.writeable = False
            object.__setattr__(self, name, value)
        object.__setattr__(self, 'sigma', float(self.sigma))
        object.__setattr__(self, 'omega', float(self.omega))

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, np.zeros(4), np.zeros(4), np.zeros(6))

    @property
    def current(self):
        return Multivector.vector(self.J)

    @property
    def axial(self):
        return Multivector.vector(self.K)

    @property
    def spin(self):
        return Multivector.bivector(self.S)

    @property
    def scale(self):
        """Reference magnitude for zero tests; J^0 is positive for every nonzero spinor."""
        return max(1.0, abs(self.J[0]))

    def scaled(self, factor):
        return BilinearSet(factor * self.sigma, factor * self.omega, factor * self.J,
                           factor * self.K, factor * self.S, factor * self.residual)

    def as_dict(self):
        return {
            'sigma': self.sigma,
            'omega': self.omega,
            'J': self.J.tolist(),
            'K': self.K.tolist(),
            'S': self.S.tolist(),
        }


@dataclass(frozen=True, eq=False)
class FierzAggregate:
    Z: ComplexMultivector

    def matrix(self, rep=CHIRAL):
        return matrix_of(self.Z, rep)

    def norm(self):
        return self.Z.norm()


Reconstruction = namedtuple('Reconstruction', ['spinor', 'raw', 'phase'])


def bilinears(psi, tol=DEFAULT_TOLERANCE):
    rep = gamma_matrices(psi.rep)
    row = psi.bar()
    column = psi.components
    upper = [rep.upper(mu) for mu in range(4)]

    def form(matrix):
        return row @ matrix @ column

    raw_sigma = form(np.eye(4))
    raw_J = np.array([form(g) for g in upper])
    raw_S = np.array([form(1j * upper[mu] @ upper[nu]) for mu, nu in BIVECTOR_PAIRS])
    raw_K = np.array([form(1j * rep.pseudoscalar @ g) for g in upper])
    raw_omega = -form(rep.pseudoscalar)

    imaginary = np.concatenate([[raw_sigma, raw_omega], raw_J, raw_K, raw_S]).imag
    residual = float(np.max(np.abs(imaginary)))
    if residual > tol * max(1.0, psi.norm2()):
        raise RepresentationError(
            f"(bilinears.bilinears) covariants have imaginary residue {residual:.3e}, gamma set is broken"
        )
    logger.debug(f"(bilinears.bilinears) sigma={raw_sigma.real:.6g} omega={raw_omega.real:.6g} residual={residual:.2e}")
    return BilinearSet(raw_sigma.real, raw_omega.real, raw_J.real, raw_K.real, raw_S.real, residual)


def fierz_residuals(b):
    """|J^2 - w^2 - s^2|, |K^2 + J^2|, |J.K| and ||J^K + (w + s e0123) S||."""
    norm = abs(minkowski_square(b.J) - b.omega ** 2 - b.sigma ** 2)
    dual_norm = abs(minkowski_square(b.K) + minkowski_square(b.J))
    orthogonality = abs(minkowski_dot(b.J, b.K))
    duality = b.omega + b.sigma * PSEUDOSCALAR
    wedge = ((b.current ^ b.axial) + duality * b.spin).norm()
    return FierzResiduals(norm, dual_norm, orthogonality, wedge)


def aggregate(b):
    Z = (b.sigma + b.current + 1j * b.spin + 1j * (b.axial * PSEUDOSCALAR) + b.omega * PSEUDOSCALAR)
    return FierzAggregate(ComplexMultivector(Z.coefficients))


def aggregate_matrix(psi):
    """4 psi psibar, the matrix image of the aggregate."""
    return 4.0 * np.outer(psi.components, psi.bar())


def dirac_adjoint_matrix(matrix, rep=CHIRAL):
    gamma0 = gamma_matrices(rep).gammas[0]
    return gamma0 @ matrix.conj().T @ gamma0


def is_boomerang(Z, tol=DEFAULT_TOLERANCE, rep=CHIRAL):
    matrix = Z.matrix(rep)
    residual = np.linalg.norm(dirac_adjoint_matrix(matrix, rep) - matrix)
    return bool(residual < tol * max(1.0, np.linalg.norm(matrix)))


def generalized_fierz_residuals(Z, b, rep=CHIRAL):
    """Z^2 = 4 sigma Z, Z g^mu Z = 4 J^mu Z, Z i g^mu g^nu Z = 4 S^{mu nu} Z, ... measured in the matrix image."""
    gammas = gamma_matrices(rep)
    upper = [gammas.upper(mu) for mu in range(4)]
    pseudoscalar = gammas.pseudoscalar
    matrix = Z.matrix(rep)

    def gap(inner, value):
        return float(np.linalg.norm(matrix @ inner @ matrix - 4.0 * value * matrix))

    square = gap(np.eye(4), b.sigma)
    current = max(gap(upper[mu], b.J[mu]) for mu in range(4))
    spin = max(gap(1j * upper[mu] @ upper[nu], b.S[n]) for n, (mu, nu) in enumerate(BIVECTOR_PAIRS))
    axial = max(gap(1j * pseudoscalar @ upper[mu], b.K[mu]) for mu in range(4))
    pseudo = gap(pseudoscalar, -b.omega)
    return GeneralizedResiduals(square, current, spin, axial, pseudo)


def canonical_phase(components, tol=DEFAULT_TOLERANCE):
    """Unit phase of the first component above tolerance (1 for a null vector)."""
    magnitudes = np.abs(components)
    peak = magnitudes.max()
    if peak == 0.0:
        return 1.0 + 0.0j
    index = int(np.argmax(magnitudes > tol * peak))
    return components[index] / magnitudes[index]


def reconstruct(Z, xi, tol=DEFAULT_TOLERANCE, reference=None):
    """
    Recover the spinor behind an aggregate from a probe xi, up to a phase.

    Returns (spinor, raw, phase) with raw = Z xi / 4N and raw = phase * spinor.
    The spinor is the canonical representative (first significant component
    real positive) unless a reference spinor is given, in which case its
    phase is aligned with the reference.
    """
    matrix = Z.matrix(xi.rep)
    overlap = float(np.real(xi.bar() @ matrix @ xi.components))
    scale = max(np.linalg.norm(matrix) * xi.norm2(), np.finfo(float).tiny)
    if overlap <= tol * scale:
        raise DegenerateProbeError(
            f"(bilinears.reconstruct) probe has vanishing overlap {overlap:.3e} with the aggregate"
        )
    N = 0.5 * np.sqrt(overlap)
    raw = matrix @ xi.components / (4.0 * N)
    if reference is not None:
        overlap_ref = np.vdot(reference.to_rep(xi.rep).components, raw)
        phase = overlap_ref / abs(overlap_ref) if abs(overlap_ref) > 0 else canonical_phase(raw, tol)
    else:
        phase = canonical_phase(raw, tol)
    logger.debug(f"(bilinears.reconstruct) N={N:.6g}, phase={phase:.6g}")
    return Reconstruction(SpinorC4(raw / phase, xi.rep), SpinorC4(raw, xi.rep), complex(phase))


#
# P and Q class diagnostics
#

def pq_operators(b):
    P = b.sigma + b.current + b.omega * PSEUDOSCALAR
    Q = b.spin + b.axial * PSEUDOSCALAR
    return Multivector(np.real(P.coefficients)), ComplexMultivector(Q.coefficients)


def _duality_inverse(b):
    """(omega + sigma e0123)^-1 = (omega - sigma e0123) / (omega^2 + sigma^2)."""
    return (b.omega - b.sigma * PSEUDOSCALAR) / (b.omega ** 2 + b.sigma ** 2)


def type1_relation_residual(b):
    """||P + (omega + sigma e0123)^-1 K Q||, zero for every regular spinor."""
    P, Q = pq_operators(b)
    return (P + _duality_inverse(b) * b.axial * Q).norm()


def type2_relation_residual(b):
    """||P - e0123 K Q / sigma|| for omega = 0."""
    P, Q = pq_operators(b)
    return (P - PSEUDOSCALAR * b.axial * Q / b.sigma).norm()


def type3_printed_residual(b):
    """||P - K Q / omega||; reported only, the relation holds with the opposite sign."""
    P, Q = pq_operators(b)
    return (P - b.axial * Q / b.omega).norm()


def energy_projector_residual(b):
    """||(P/2 sigma)^2 - P/2 sigma||."""
    P, _ = pq_operators(b)
    E = P / (2.0 * b.sigma)
    return (E * E - E).norm()


def spin_projector(b):
    """1/2 (1 - i e0123 K / sigma)."""
    return ComplexMultivector((0.5 - 0.5j * (PSEUDOSCALAR * b.axial) / b.sigma).coefficients)


def spin_projector_residuals(b):
    """(idempotency, commutator with P) for the spin projector."""
    Pi = spin_projector(b)
    P, _ = pq_operators(b)
    return (Pi * Pi - Pi).norm(), (Pi * P - P * Pi).norm()
