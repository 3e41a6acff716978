# spinors/hopf.py
"""
Quaternionic Hopf fibration S^7 -> S^4 realized through spinor bilinears.

Two routes are provided. The quaternion route maps a pair (q1, q2) with
|q1|^2 + |q2|^2 = 1 to

    J0 = |q1|^2 - |q2|^2,  omega = 2 Re(q1* q2),  Jk = 2 Re(q1* u_k q2)

with u_k = i, j, k; its fibers are the orbits of right multiplication by a
unit quaternion. The component route evaluates the same kind of point
directly from the column components. The two agree once the column is
multiplied by diag(1, 1, i, i) and the J1 axis is flipped.
"""
from collections import namedtuple
from dataclasses import dataclass
import numpy as np

from ..algebra import quaternion as quat
from ..algebra.gamma import STANDARD
from ..lib.bootstrap import logger
from ..lib.errors import NonUnitError, NullSpinorError
from .bilinears import DEFAULT_TOLERANCE, bilinears
from .representations import c4_to_quaternion_pair

# per-axis signs (J0, J1, J2, J3, omega) taking the quaternion route onto the component route
DICTIONARY_SIGNS = np.array([1.0, -1.0, 1.0, 1.0, 1.0])
DICTIONARY_PHASES = np.array([1.0, 1.0, 1j, 1j])


@dataclass(frozen=True)
class HopfPoint:
    J0: float
    J1: float
    J2: float
    J3: float
    omega: float

    @classmethod
    def from_array(cls, values):
        return cls(*(float(v) for v in values))

    def as_array(self):
        return np.array([self.J0, self.J1, self.J2, self.J3, self.omega])

    def norm(self):
        """Euclidean norm; 1 on S^4."""
        return float(np.linalg.norm(self.as_array()))

    def as_dict(self):
        return {'J0': self.J0, 'J1': self.J1, 'J2': self.J2, 'J3': self.J3, 'omega': self.omega}


def hopf_map(pair, tol=DEFAULT_TOLERANCE):
    q1, q2 = pair.q1, pair.q2
    sigma = pair.norm2()
    if abs(sigma - 1.0) > tol:
        raise NonUnitError(f"(hopf.hopf_map) |q1|^2 + |q2|^2 = {sigma:.12g}, expected a point of S^7")
    return HopfPoint(
        q1.norm2() - q2.norm2(),
        2.0 * q1.dot(quat.I * q2),
        2.0 * q1.dot(quat.J * q2),
        2.0 * q1.dot(quat.K * q2),
        2.0 * q1.dot(q2),
    )


def component_sigma(psi):
    return psi.to_rep(STANDARD).norm2()


def hopf_from_components(psi):
    """(J0, J1, J2, J3, omega) evaluated from the standard-representation column."""
    p1, p2, p3, p4 = psi.to_rep(STANDARD).components
    sigma = component_sigma(psi)
    if abs(sigma - 1.0) > 1e-8:
        logger.debug(f"(hopf.hopf_from_components) input is not normalized, sigma={sigma:.6g}")
    return HopfPoint(
        abs(p1) ** 2 + abs(p2) ** 2 - abs(p3) ** 2 - abs(p4) ** 2,
        2.0 * (p1 * p4.conjugate()).imag + 2.0 * (p2 * p3.conjugate()).imag,
        2.0 * (p2 * p3.conjugate()).real - 2.0 * (p1 * p4.conjugate()).real,
        2.0 * (p3 * p1.conjugate()).imag + 2.0 * (p2 * p4.conjugate()).imag,
        2.0 * (p1 * p3.conjugate()).real + 2.0 * (p2 * p4.conjugate()).real,
    )


def hopf_via_quaternions(psi, tol=DEFAULT_TOLERANCE):
    """The component-route point computed through the quaternion route and the fixed dictionary."""
    standard = psi.to_rep(STANDARD)
    shifted = standard.with_components(DICTIONARY_PHASES * standard.components)
    point = hopf_map(c4_to_quaternion_pair(shifted), tol)
    return HopfPoint.from_array(DICTIONARY_SIGNS * point.as_array())


def j_structure(psi):
    """T psi = (-psi2*, psi1*, -psi4*, psi3*)."""
    standard = psi.to_rep(STANDARD)
    p = standard.components.conj()
    return standard.with_components([-p[1], p[0], -p[3], p[2]])


def component_fiber_action(psi, a, b):
    """a psi + b T psi; leaves the component-route point fixed when |a|^2 + |b|^2 = 1."""
    standard = psi.to_rep(STANDARD)
    return standard.with_components(a * standard.components + b * j_structure(standard).components)


def direct_discrepancy(psi):
    """sigma and J0 from the component formulas next to the direct standard-representation bilinears."""
    sigma = component_sigma(psi)
    point = hopf_from_components(psi)
    direct = bilinears(psi.to_rep(STANDARD))
    return {
        'component_sigma': sigma,
        'component_J0': point.J0,
        'direct_sigma': direct.sigma,
        'direct_J0': float(direct.J[0]),
        'swapped': bool(np.isclose(sigma, direct.J[0]) and np.isclose(point.J0, direct.sigma)),
    }


InstantonReport = namedtuple('InstantonReport', ['current_norm', 'J0', 'sigma', 'omega', 'on_s7', 'singular'])


def instanton_obstruction(psi, tol=DEFAULT_TOLERANCE):
    """
    Report why a spinor can or cannot sit on S^7 above an instanton point.

    The current never vanishes for a nonzero spinor, and a singular spinor
    has sigma = 0, so it cannot be scaled onto sigma = 1.
    """
    if psi.norm2() == 0.0:
        raise NullSpinorError("(hopf.instanton_obstruction) the zero spinor has no Hopf image")
    b = bilinears(psi)
    current_norm = float(np.linalg.norm(b.J))
    threshold = tol * b.scale
    singular = abs(b.sigma) <= threshold and abs(b.omega) <= threshold
    return InstantonReport(current_norm, float(b.J[0]), b.sigma, b.omega, b.sigma > threshold, singular)


def minimum_current_norm(spinors):
    """Smallest Euclidean |(J0..J3)| relative to |psi|^2 over a sample."""
    return min(instanton_obstruction(psi).current_norm / psi.norm2() for psi in spinors)
