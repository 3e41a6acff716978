# spinors/flag_dipole.py
"""
Flag-dipole (class 4) spinors and their limits.

A spinor is built from an even element Psi and a direction element u as the
ideal spinor Psi 1/2 (1 + e0 u) f. For such spinors K = h J with h fixed by
u, and the aggregate takes the form Z = J (1 + i s + i h e0123) with s
orthogonal to the null current J. That form is annihilated by
(1 + i s + i h e0123) exactly when h^2 = 1 + s^2.

Under the standard-representation idempotent the e3 axis is the Weyl axis:
u = +/-e3 gives class 6, u in the e1-e2 plane gives class 5, and any other
unit spatial direction gives class 4. The Weyl axis follows the idempotent:
stating u = e2 as the Weyl direction presumes an idempotent built on e2, not
the e3 one used here.
"""
from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
import numpy as np

from ..algebra.clifford import (
    BIVECTOR_PAIRS,
    METRIC,
    ONE,
    PSEUDOSCALAR,
    ComplexMultivector,
    Multivector,
    minkowski_dot,
    minkowski_square,
)
from ..algebra.gamma import STANDARD, matrix_of
from ..lib.bootstrap import logger
from ..lib.errors import FrameError, RepresentationError
from .bilinears import DEFAULT_TOLERANCE, FierzAggregate, bilinears, reconstruct
from .classifier import classify
from .representations import PRIMITIVE_IDEMPOTENT, ideal_to_c4
from .spinor import SpinorC4

E0 = Multivector.blade('e0')
E3 = Multivector.blade('e3')

BoomerangResiduals = namedtuple('BoomerangResiduals', ['square', 'annihilator', 'hs'])
LimitStep = namedtuple('LimitStep', ['t', 'frame', 'spinor', 'lounesto'])


@dataclass(frozen=True)
class DirectionElement:
    u: Multivector

    def __post_init__(self):
        square = self.u * self.u
        gap = (square + 1.0).norm()
        if gap > 1e-9:
            raise FrameError(f"(flag_dipole.DirectionElement) u^2 must be -1, off by {gap:.3e}")

    @classmethod
    def spatial(cls, vector):
        vector = np.asarray(vector, dtype=float).reshape(3)
        norm = np.linalg.norm(vector)
        if norm == 0.0:
            raise FrameError("(flag_dipole.DirectionElement) direction must be nonzero")
        return cls(Multivector.vector(np.concatenate([[0.0], vector / norm])))

    @classmethod
    def elko_mixture(cls, phi):
        """e1 cos(phi) + (-e2 e3) e3 sin(phi)."""
        e1, e2 = Multivector.blade('e1'), Multivector.blade('e2')
        return cls(np.cos(phi) * e1 + np.sin(phi) * ((-(e2 * E3)) * E3))

    @property
    def is_vector(self):
        return bool(np.allclose(self.u.coefficients, self.u.grade(1).coefficients, atol=1e-12))

    @property
    def spatial_part(self):
        return np.real(self.u.vector_part[1:])


def operator_spinor_projection(Psi, u, tol=1e-12):
    """Column of the ideal spinor Psi 1/2 (1 + e0 u) f, in the standard representation."""
    if not isinstance(u, DirectionElement):
        u = DirectionElement(u)
    if not Psi.is_even(tol):
        raise RepresentationError("(flag_dipole.operator_spinor_projection) Psi has odd-grade contamination")
    ideal = Psi * (0.5 * (1.0 + E0 * u.u)) * PRIMITIVE_IDEMPOTENT
    return ideal_to_c4(ComplexMultivector(ideal.coefficients))


@lru_cache(maxsize=None)
def doran_sign():
    """Sign relating u.e3 to the measured K^0/J^0, calibrated once on u = (e1 + e3)/sqrt(2)."""
    reference = DirectionElement.spatial([1.0, 0.0, 1.0])
    b = bilinears(operator_spinor_projection(ONE, reference))
    raw = (reference.u << E3).scalar_part
    sign = float(np.sign(b.K[0] / b.J[0] / raw))
    logger.debug(f"(flag_dipole.doran_sign) calibrated sign {sign:+.0f}")
    return sign


def doran_h(u):
    if not isinstance(u, DirectionElement):
        u = DirectionElement(u)
    if not u.is_vector:
        raise FrameError("(flag_dipole.doran_h) h is defined for 1-vector directions")
    return doran_sign() * float((u.u << E3).scalar_part)


@dataclass(frozen=True, eq=False)
class FlagDipoleFrame:
    J: np.ndarray
    s: np.ndarray
    h: float

    def __post_init__(self):
        object.__setattr__(self, 'J', np.asarray(self.J, dtype=float).reshape(4))
        object.__setattr__(self, 's', np.asarray(self.s, dtype=float).reshape(4))
        object.__setattr__(self, 'h', float(self.h))

    @property
    def current(self):
        return Multivector.vector(self.J)

    @property
    def axis(self):
        return Multivector.vector(self.s)

    @property
    def K(self):
        return self.h * self.J

    @property
    def S(self):
        return np.array([self.J[mu] * self.s[nu] - self.J[nu] * self.s[mu] for mu, nu in BIVECTOR_PAIRS])

    def hs_residual(self):
        return abs(self.h ** 2 - 1.0 - minkowski_square(self.s))

    def validate(self, tol=DEFAULT_TOLERANCE):
        scale = max(1.0, abs(self.J[0])) ** 2
        if self.J[0] <= 0:
            raise FrameError("(flag_dipole.FlagDipoleFrame) J must be future pointing")
        if abs(minkowski_square(self.J)) > tol * scale:
            raise FrameError(f"(flag_dipole.FlagDipoleFrame) J must be null, J^2 = {minkowski_square(self.J):.3e}")
        if abs(minkowski_dot(self.J, self.s)) > tol * scale * max(1.0, np.linalg.norm(self.s)):
            raise FrameError("(flag_dipole.FlagDipoleFrame) s must be orthogonal to J")
        return self


def _annihilator(frame):
    return 1.0 + 1j * frame.axis + 1j * frame.h * PSEUDOSCALAR


def type4_boomerang(frame, tol=DEFAULT_TOLERANCE):
    """Z = J (1 + i s + i h e0123)."""
    frame.validate(tol)
    if frame.hs_residual() > 1e-9:
        logger.warning(f"(flag_dipole.type4_boomerang) h^2 = 1 + s^2 is violated by {frame.hs_residual():.3e}")
    Z = frame.current * _annihilator(frame)
    return FierzAggregate(ComplexMultivector(Z.coefficients))


def boomerang_residuals(frame, Z=None):
    """||Z^2|| / ||Z||^2, ||(1 + i s + i h e0123) Z|| / ||Z|| and |h^2 - 1 - s^2|."""
    Z = type4_boomerang(frame) if Z is None else Z
    norm = Z.norm()
    square = (Z.Z * Z.Z).norm() / norm ** 2
    annihilator = (_annihilator(frame) * Z.Z).norm() / norm
    return BoomerangResiduals(square, annihilator, frame.hs_residual())


def extract_frame(b):
    """(J, s, h) of a class-4 spinor: h from K = h J, s as the minimum-norm solution of J^s = S, J.s = 0."""
    J = np.asarray(b.J, dtype=float)
    h = float(np.dot(b.K, J) / np.dot(J, J))
    rows = []
    for mu, nu in BIVECTOR_PAIRS:
        row = np.zeros(4)
        row[nu] += J[mu]
        row[mu] -= J[nu]
        rows.append(row)
    rows.append(METRIC * J)
    system = np.array(rows)
    rhs = np.concatenate([b.S, [0.0]])
    s, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    return FlagDipoleFrame(J, s, h)


def frame_spinor(frame, tol=DEFAULT_TOLERANCE):
    """A standard-representation spinor whose aggregate is the frame boomerang."""
    Z = type4_boomerang(frame, tol)
    matrix = Z.matrix(STANDARD)
    probes = [SpinorC4(np.eye(4)[i], STANDARD) for i in range(4)]
    best = max(probes, key=lambda xi: float(np.real(xi.bar() @ matrix @ xi.components)))
    return reconstruct(Z, best, tol).spinor


def sigma_projector(psi, s, h, sign=1):
    """
    Sigma_+/-(Psi) = 1/2 (Psi +/- (s + h e0123) Psi e12) acting on an ideal spinor.

    On standard-representation columns Psi e12 becomes -i psi.
    """
    if sign in ('+', '-'):
        sign = 1 if sign == '+' else -1
    standard = psi.to_rep(STANDARD)
    X = matrix_of(Multivector.vector(s) + h * PSEUDOSCALAR, STANDARD)
    projected = 0.5 * (standard.components - sign * 1j * (X @ standard.components))
    return standard.with_components(projected).to_rep(psi.rep)


def sigma_idempotency_residual(s, h):
    """||(s + h e0123)^2 + 1||; the projectors are idempotent when this vanishes."""
    X = Multivector.vector(s) + h * PSEUDOSCALAR
    return (X * X + 1.0).norm()


def class_limit(frame, which, steps=(1.0, 0.1, 0.01, 0.0), tol=DEFAULT_TOLERANCE):
    """
    Follow a family of frames towards h = 0 (flagpole) or s = 0 (Weyl).

    The h path scales h by t and rescales s to keep h^2 = 1 + s^2; the s path
    scales s by t and sets h = sign(h0) sqrt(1 + t^2 s0^2).
    """
    frame.validate(tol)
    s2 = minkowski_square(frame.s)
    if which == 'h':
        if frame.h ** 2 >= 1.0:
            raise FrameError("(flag_dipole.class_limit) the h path needs h^2 < 1")
    elif which != 's':
        raise ValueError(f"limit must be 'h' or 's', got {which!r}")

    path = []
    for t in steps:
        if which == 'h':
            h = t * frame.h
            s = frame.s * np.sqrt((1.0 - h ** 2) / (1.0 - frame.h ** 2))
        else:
            s = t * frame.s
            h = np.copysign(np.sqrt(1.0 + t ** 2 * s2), frame.h)
        step = FlagDipoleFrame(frame.J, s, h)
        spinor = frame_spinor(step, tol)
        lounesto = classify(bilinears(spinor), tol)
        logger.debug(f"(flag_dipole.class_limit) {which}-path t={t:g}: class {lounesto.label}")
        path.append(LimitStep(t, step, spinor, lounesto))
    return path
