# spinors/mapping.py
"""
Conditions a Dirac spinor must satisfy to be carried to an ELKO.

Every condition is evaluated literally on the components of the spinor in
the representation it is tagged with. In the chiral representation the
first condition pair forces sigma = 2 Re(psi1* psi3 + psi2* psi4) = 0, so
regular spinors can only pass in the standard representation.

The conditions are not independent: the common conditions together with
the class-2 condition imply the class-3 condition.
"""
from collections import namedtuple
from dataclasses import dataclass, field
import numpy as np

from ..lib.bootstrap import logger
from ..lib.errors import SingularSpinorError
from .bilinears import DEFAULT_TOLERANCE, bilinears
from .classifier import classify


def _re(psi, i, j):
    return float(np.real(np.conj(psi[i - 1]) * psi[j - 1]))


def _im(psi, i, j):
    return float(np.imag(np.conj(psi[i - 1]) * psi[j - 1]))


def _parts(psi, j):
    return float(np.real(psi[j - 1])), float(np.imag(psi[j - 1]))


@dataclass(frozen=True)
class ConditionReport:
    common_13: float
    common_24: float
    common_cross: float
    common_imaginary: float
    class2: float
    class3: float
    component_13: float
    component_24: float
    table: dict = field(default_factory=dict)

    @property
    def common(self):
        return (self.common_13, self.common_24, self.common_cross, self.common_imaginary)

    def component_gap(self):
        """Largest difference between the complex forms and their component re-expressions."""
        pairs = [
            (self.common_13, self.component_13),
            (self.common_24, self.component_24),
            (self.common_cross, self.table['class2_second']),
            (self.common_imaginary, self.table['class3_long']),
        ]
        return max(abs(a - b) for a, b in pairs)

    def as_dict(self):
        return {
            'common': list(self.common),
            'class2': self.class2,
            'class3': self.class3,
            'components': [self.component_13, self.component_24],
            'table': dict(self.table),
            'third_line_minus_class3': self.common_imaginary - self.class3,
        }


def elko_map_conditions(psi):
    """Residuals of the common, class-2 and class-3 conditions, with their component forms."""
    z = psi.components
    common_13 = _re(z, 1, 3)
    common_24 = _re(z, 2, 4)
    common_cross = _re(z, 2, 3) + _re(z, 1, 4)
    common_imaginary = _im(z, 1, 4) - _im(z, 2, 3) - 2.0 * _im(z, 3, 4) - 2.0 * _im(z, 1, 2)
    class2 = _re(z, 1, 4) + _im(z, 2, 3)
    class3 = _im(z, 1, 4) - _im(z, 2, 3) - 2.0 * _im(z, 1, 2)

    (a1, b1), (a2, b2), (a3, b3), (a4, b4) = (_parts(z, j) for j in range(1, 5))
    component_13 = a1 * a3 + b1 * b3
    component_24 = a2 * a4 + b2 * b4
    mixed_23 = a2 * (a3 - b3) + b2 * (a3 + b3)
    im_34 = a3 * b4 - b3 * a4
    table = {
        'class1_first': mixed_23,
        'class1_second': im_34,
        'class2_first': im_34,
        'class2_second': a2 * a3 + b2 * b3 + a1 * a4 + b1 * b4,
        'class3_first': mixed_23,
        'class3_long': (a1 * b4 - b1 * a4) - (a2 * b3 - b2 * a3) - 2.0 * im_34 - 2.0 * (a1 * b2 - b1 * a2),
    }
    return ConditionReport(common_13, common_24, common_cross, common_imaginary, class2, class3,
                           component_13, component_24, table)


Mappability = namedtuple('Mappability', ['class1', 'class2', 'class3', 'actual_class', 'mappable'])


def mappability(psi, tol=DEFAULT_TOLERANCE):
    b = bilinears(psi, tol)
    actual = classify(b, tol).label
    if actual > 3:
        raise SingularSpinorError(f"(mapping.mappability) mapping conditions apply to Dirac spinors, got class {actual}")
    report = elko_map_conditions(psi)
    threshold = tol * max(1.0, psi.norm2())
    common = all(abs(value) <= threshold for value in report.common)
    class2 = common and abs(report.class2) <= threshold
    class3 = common and abs(report.class3) <= threshold
    class1 = class2 and class3
    verdicts = {1: class1, 2: class2, 3: class3}
    logger.debug(f"(mapping.mappability) class {actual}: common={common}, class2={class2}, class3={class3}")
    return Mappability(class1, class2, class3, actual, verdicts[actual])
