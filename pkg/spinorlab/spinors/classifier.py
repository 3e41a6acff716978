# spinors/classifier.py
from collections import namedtuple
from dataclasses import dataclass
import numpy as np

from ..algebra.clifford import minkowski_square
from ..lib.bootstrap import logger
from ..lib.errors import ClassInconsistencyError, NullSpinorError
from .bilinears import (
    DEFAULT_TOLERANCE,
    energy_projector_residual,
    pq_operators,
    spin_projector_residuals,
    type1_relation_residual,
    type2_relation_residual,
    type3_printed_residual,
)

DEFAULT_MARGINAL_FACTOR = 10.0

CLASS_NAMES = {
    1: 'Dirac (type 1)',
    2: 'Dirac (type 2)',
    3: 'Dirac (type 3)',
    4: 'flag-dipole',
    5: 'flagpole',
    6: 'dipole (Weyl)',
}


RelationReport = namedtuple('RelationReport', ['residuals', 'reported'])


@dataclass(frozen=True)
class LounestoClass:
    label: int
    regular: bool
    witness: dict
    marginal: tuple = ()

    @property
    def name(self):
        return CLASS_NAMES[self.label]

    @property
    def is_marginal(self):
        return bool(self.marginal)


def _zero_threshold(b, tol):
    return tol * b.scale


def _quantities(b):
    return {
        'sigma': abs(b.sigma),
        'omega': abs(b.omega),
        'K': float(np.linalg.norm(b.K)),
        'S': float(np.linalg.norm(b.S)),
    }


def classify(b, tol=DEFAULT_TOLERANCE, marginal_factor=DEFAULT_MARGINAL_FACTOR):
    if np.linalg.norm(b.J) == 0.0:
        raise NullSpinorError("(classifier.classify) all bilinears vanish, the spinor is null")

    threshold = _zero_threshold(b, tol)
    quantities = _quantities(b)
    witness = {name: value > threshold for name, value in quantities.items()}
    marginal = tuple(
        name for name, value in quantities.items()
        if threshold / marginal_factor < value < threshold * marginal_factor
    )

    if witness['sigma'] or witness['omega']:
        if witness['sigma'] and witness['omega']:
            label = 1
        elif witness['sigma']:
            label = 2
        else:
            label = 3
    elif witness['K'] and witness['S']:
        label = 4
    elif witness['S']:
        label = 5
    elif witness['K']:
        label = 6
    else:
        raise ClassInconsistencyError(
            "(classifier.classify) sigma, omega, K and S all vanish while J does not"
        )

    if marginal:
        logger.debug(f"(classifier.classify) class {label} is marginal in {', '.join(marginal)}")
    return LounestoClass(label, label <= 3, witness, marginal)


def is_singular(b, tol=DEFAULT_TOLERANCE):
    threshold = _zero_threshold(b, tol)
    return abs(b.sigma) <= threshold and abs(b.omega) <= threshold


def verify_class_relations(b, c):
    """
    Residuals of the identities specific to class c.

    Entries of `residuals` vanish for a correctly classified spinor; entries
    of `reported` are printed forms that do not hold as stated and are
    carried for comparison only.
    """
    report = {}
    reported = {}
    if c.label == 1:
        report['type1_relation'] = type1_relation_residual(b)
    elif c.label == 2:
        report['type1_relation'] = type1_relation_residual(b)
        report['type2_relation'] = type2_relation_residual(b)
        report['energy_projector'] = energy_projector_residual(b)
        idempotency, commutator = spin_projector_residuals(b)
        report['spin_projector'] = idempotency
        report['spin_projector_commutator'] = commutator
    elif c.label == 3:
        P, _ = pq_operators(b)
        report['type1_relation'] = type1_relation_residual(b)
        report['P_squared'] = (P * P).norm()
        reported['printed_type3_relation'] = type3_printed_residual(b)
    else:
        report['J_squared'] = abs(minkowski_square(b.J))
        report['K_squared'] = abs(minkowski_square(b.K))
        if c.label == 5:
            report['K_norm'] = float(np.linalg.norm(b.K))
        if c.label == 6:
            report['S_norm'] = float(np.linalg.norm(b.S))
    return RelationReport(report, reported)
