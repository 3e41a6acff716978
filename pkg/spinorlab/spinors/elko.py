# spinors/elko.py
"""
ELKO, Majorana, Weyl and Dirac constructions in the chiral representation.

An ELKO is built from a Weyl spinor phi as (+/- sigma2 phi*, phi). When phi
is a helicity eigenstate along p_hat, sigma2 phi* has the opposite helicity,
so the upper and lower blocks carry opposite helicities. The helicity pair
label is written (upper, lower).
"""
from dataclasses import dataclass, field, replace
import numpy as np

from ..algebra.gamma import CHIRAL, PAULI, gamma_matrices
from ..lib.bootstrap import logger
from ..lib.errors import HelicityError, NullSpinorError, RepresentationError
from .bilinears import DEFAULT_TOLERANCE, bilinears
from .classifier import classify
from .representations import c4_to_even, even_to_ideal, hermitian_square
from .spinor import SpinorC4

SELF = 'self'
ANTI = 'anti'
CONJUGACIES = (SELF, ANTI)
PLUS = '+'
MINUS = '-'
Z_HAT = np.array([0.0, 0.0, 1.0])

SIGMA2 = PAULI[1]


def _flip(sign):
    return MINUS if sign == PLUS else PLUS


def _unit(vector, what='direction'):
    vector = np.asarray(vector, dtype=float).reshape(3)
    norm = np.linalg.norm(vector)
    if norm == 0.0:
        raise ValueError(f"{what} must be a nonzero 3-vector")
    return vector / norm


def helicity_operator(p_hat):
    return sum(component * sigma for component, sigma in zip(p_hat, PAULI))


@dataclass(frozen=True, eq=False)
class WeylC2:
    components: np.ndarray
    helicity: str = None
    direction: np.ndarray = None

    def __post_init__(self):
        components = np.array(self.components, dtype=complex).reshape(-1)
        if components.shape != (2,):
            raise ValueError(f"a Weyl spinor needs 2 components, got {components.shape[0]}")
        components.flags.writeable = False
        object.__setattr__(self, 'components', components)
        if self.helicity not in (None, PLUS, MINUS):
            raise ValueError(f"helicity must be '+', '-' or None, got {self.helicity!r}")
        if self.helicity is not None:
            direction = Z_HAT if self.direction is None else _unit(self.direction)
            object.__setattr__(self, 'direction', direction)

    @property
    def alpha(self):
        return self.components[0]

    @property
    def beta(self):
        return self.components[1]

    def helicity_residual(self):
        if self.helicity is None:
            return 0.0
        eigenvalue = 1.0 if self.helicity == PLUS else -1.0
        operator = helicity_operator(self.direction)
        return float(np.linalg.norm(operator @ self.components - eigenvalue * self.components))


@dataclass(frozen=True, eq=False)
class ElkoSpinor:
    spinor: SpinorC4
    conjugacy: str
    helicity: tuple = None
    direction: np.ndarray = field(default_factory=lambda: Z_HAT.copy())
    momentum: np.ndarray = field(default_factory=lambda: np.zeros(3))
    mass: float = 1.0

    @property
    def components(self):
        return self.spinor.components

    @property
    def upper(self):
        return self.spinor.components[:2]

    @property
    def lower(self):
        return self.spinor.components[2:]

    def scaled(self, factor):
        return replace(self, spinor=self.spinor.scaled(factor))


def helicity_eigenspinor(p_hat, sign):
    """Unit eigenvector of sigma.p_hat with eigenvalue +/-1 in the phase convention (cos, sin) e^{-/+ i phi/2}."""
    if sign not in (PLUS, MINUS):
        raise ValueError(f"helicity sign must be '+' or '-', got {sign!r}")
    direction = _unit(p_hat)
    theta = np.arccos(np.clip(direction[2], -1.0, 1.0))
    phi = np.arctan2(direction[1], direction[0])
    up, down = np.exp(-0.5j * phi), np.exp(0.5j * phi)
    if sign == PLUS:
        components = [np.cos(theta / 2) * up, np.sin(theta / 2) * down]
    else:
        components = [-np.sin(theta / 2) * up, np.cos(theta / 2) * down]
    return WeylC2(components, sign, direction)


def elko_rest(phi, conjugacy=SELF):
    if conjugacy not in CONJUGACIES:
        raise ValueError(f"conjugacy must be one of {CONJUGACIES}, got {conjugacy!r}")
    if np.linalg.norm(phi.components) == 0.0:
        raise NullSpinorError("(elko.elko_rest) cannot build an ELKO from a zero Weyl spinor")
    sign = 1.0 if conjugacy == SELF else -1.0
    upper = sign * SIGMA2 @ phi.components.conj()
    helicity = None if phi.helicity is None else (_flip(phi.helicity), phi.helicity)
    direction = Z_HAT if phi.direction is None else phi.direction
    logger.debug(f"(elko.elko_rest) built {conjugacy}-conjugate ELKO with helicity {helicity}")
    return ElkoSpinor(SpinorC4(np.concatenate([upper, phi.components]), CHIRAL), conjugacy, helicity, direction)


def boost_factor(helicity, momentum, mass):
    """sqrt((E+m)/2m) (1 -/+ |p|/(E+m)); the sign follows the first helicity label."""
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    p = float(np.linalg.norm(momentum))
    energy = np.sqrt(mass ** 2 + p ** 2)
    if p == 0.0:
        return 1.0
    if helicity is None:
        raise HelicityError("(elko.boost_factor) boosting needs the helicity pair label")
    sign = 1.0 if helicity[0] == PLUS else -1.0
    return np.sqrt((energy + mass) / (2.0 * mass)) * (1.0 + sign * p / (energy + mass))


def elko_boost(lambda0, p, m):
    momentum = np.asarray(p, dtype=float).reshape(3)
    factor = boost_factor(lambda0.helicity, momentum, m)
    if np.linalg.norm(momentum) > 0.0:
        p_hat = _unit(momentum, 'momentum')
        if np.linalg.norm(np.cross(p_hat, lambda0.direction)) > 1e-9 or np.dot(p_hat, lambda0.direction) < 0:
            raise ValueError("(elko.elko_boost) the rest spinor must be built from helicity states along the momentum")
    return replace(lambda0, spinor=lambda0.spinor.scaled(factor), momentum=momentum, mass=float(m))


def elko_spinor(lower_helicity, conjugacy=SELF, p=(0.0, 0.0, 0.0), m=1.0, direction=None):
    """One of the four ELKOs for a momentum, built from the helicity eigenspinor of its lower block."""
    momentum = np.asarray(p, dtype=float).reshape(3)
    if direction is None:
        direction = _unit(momentum) if np.linalg.norm(momentum) > 0 else Z_HAT
    phi = helicity_eigenspinor(direction, lower_helicity)
    return elko_boost(elko_rest(phi, conjugacy), momentum, m)


def elko_basis(p=(0.0, 0.0, 0.0), m=1.0, direction=None):
    """The four ELKOs keyed by (helicity pair, conjugacy)."""
    basis = {}
    for conjugacy in CONJUGACIES:
        for lower in (PLUS, MINUS):
            spinor = elko_spinor(lower, conjugacy, p, m, direction)
            basis[(spinor.helicity, conjugacy)] = spinor
    return basis


def charge_conjugation(psi):
    """C psi = -gamma^2 psi*; antilinear and involutive."""
    if psi.rep != CHIRAL:
        raise RepresentationError(f"(elko.charge_conjugation) defined in the chiral representation, got {psi.rep}")
    gamma_upper_2 = gamma_matrices(CHIRAL).upper(2)
    return psi.with_components(-gamma_upper_2 @ psi.components.conj())


def charge_eigenvalue(psi, tol=DEFAULT_TOLERANCE):
    """+1 or -1 if psi is a charge-conjugation eigenspinor, otherwise None."""
    conjugate = charge_conjugation(psi).components
    scale = max(1.0, psi.norm2())
    for eigenvalue in (1, -1):
        if np.linalg.norm(conjugate - eigenvalue * psi.components) <= tol * scale:
            return eigenvalue
    return None


def elko_dual(lam):
    """
    Dual row of an ELKO: +/- i [partner]^dagger gamma^0 for the (-,+) / (+,-) labels.

    The partner carries the opposite helicity label with the same conjugacy,
    momentum and mass, scaled by the coefficient of lam along its canonical
    basis spinor, which makes the dual antilinear.
    """
    if lam.helicity is None:
        raise HelicityError("(elko.elko_dual) the ELKO dual needs the helicity pair label")
    lower = lam.helicity[1]
    canonical = elko_spinor(lower, lam.conjugacy, lam.momentum, lam.mass, lam.direction)
    partner = elko_spinor(_flip(lower), lam.conjugacy, lam.momentum, lam.mass, lam.direction)
    coefficient = np.vdot(canonical.components, lam.components) / np.vdot(canonical.components, canonical.components)
    sign = 1.0 if lower == PLUS else -1.0
    gamma0 = gamma_matrices(CHIRAL).gammas[0]
    return sign * 1j * np.conj(coefficient) * (partner.components.conj() @ gamma0)


def elko_rest_closed_form(phi, conjugacy=SELF):
    """
    J^mu and S^{mu nu} of elko_rest(phi, conjugacy) from the Weyl components alone.

    With phi = (a, b):

        J = 2 (|a|^2 + |b|^2, -(a b* + a* b), i (a* b - a b*), |b|^2 - |a|^2)
        S = 2 s (-Re(a^2 - b^2), Im(a^2 + b^2), 2 Re(a b), -2 Im(a b), -Re(a^2 + b^2), Im(a^2 - b^2))

    where s = +1 (self) or -1 (anti). J is quadratic in the upper block, so it
    does not depend on the conjugacy.
    """
    if conjugacy not in CONJUGACIES:
        raise ValueError(f"conjugacy must be one of {CONJUGACIES}, got {conjugacy!r}")
    a, b = phi.components
    s = 1.0 if conjugacy == SELF else -1.0
    J = 2.0 * np.array([
        abs(a) ** 2 + abs(b) ** 2,
        -2.0 * np.real(a * np.conj(b)),
        np.real(1j * (np.conj(a) * b - a * np.conj(b))),
        abs(b) ** 2 - abs(a) ** 2,
    ])
    S = 2.0 * s * np.array([
        -np.real(a ** 2 - b ** 2),
        np.imag(a ** 2 + b ** 2),
        2.0 * np.real(a * b),
        -2.0 * np.imag(a * b),
        -np.real(a ** 2 + b ** 2),
        np.imag(a ** 2 - b ** 2),
    ])
    return J, S


def dual_product(left, right):
    return complex(elko_dual(left) @ right.components)


def dirac_from_left(phi_L, p, m, epsilon=1):
    """(epsilon chi phi_L, phi_L) with chi = (E + sigma.p) / m; epsilon picks the sign of the right-handed block."""
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m}")
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon}")
    momentum = np.asarray(p, dtype=float).reshape(3)
    energy = np.sqrt(m ** 2 + momentum @ momentum)
    chi = (energy * np.eye(2) + helicity_operator(momentum)) / m
    right = epsilon * chi @ phi_L.components
    return SpinorC4(np.concatenate([right, phi_L.components]), CHIRAL)


def weyl_spinor(phi, handedness='left'):
    """A single-handed Dirac spinor: phi in the lower (left) or upper (right) block."""
    zeros = np.zeros(2, dtype=complex)
    blocks = [zeros, phi.components] if handedness == 'left' else [phi.components, zeros]
    return SpinorC4(np.concatenate(blocks), CHIRAL)


def majorana_from_weyl(xi, tol=DEFAULT_TOLERANCE):
    """psi_+/- = 1/2 (xi +/- C xi); each is a charge-conjugation eigenspinor."""
    if xi.norm2() > 0:
        label = classify(bilinears(xi), tol).label
        if label != 6:
            logger.warning(f"(elko.majorana_from_weyl) input spinor is class {label}, expected a Weyl spinor")
    conjugate = charge_conjugation(xi)
    plus = xi.with_components(0.5 * (xi.components + conjugate.components))
    minus = xi.with_components(0.5 * (xi.components - conjugate.components))
    return plus, minus


#
# Penrose pole and flag
#

def _penrose_square(lam):
    spinor = lam.spinor if isinstance(lam, ElkoSpinor) else lam
    return hermitian_square(even_to_ideal(c4_to_even(spinor)))


def penrose_pole(lam):
    """Half the vector part of the Hermitian square of the ideal spinor; J/8 for a flagpole."""
    return 0.5 * _penrose_square(lam).real.grade(1)


def penrose_flag(lam):
    """Half the imaginary bivector part of the Hermitian square; S/8 for a flagpole."""
    return 0.5 * _penrose_square(lam).imag.grade(2)
