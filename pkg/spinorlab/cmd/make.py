# cmd/make.py
import numpy as np

from ..algebra.clifford import ONE
from ..lib.documents import SpinorDocument
from ..lib.errors import ClassInconsistencyError, HelicityError
from ..spinors.bilinears import bilinears
from ..spinors.classifier import classify
from ..spinors.elko import (
    SELF,
    WeylC2,
    dirac_from_left,
    elko_rest,
    elko_spinor,
    majorana_from_weyl,
    weyl_spinor,
)
from ..spinors.flag_dipole import DirectionElement, operator_spinor_projection
from ..spinors.representations import operator_spinor
from ..spinors.samples import GENERATORS
from .base import SpinorlabBase

FAMILIES = ('elko', 'majorana', 'weyl', 'dirac', 'flagdipole')

# family name -> sample generator used by --random
RANDOM_FAMILIES = {
    'elko': 'elko',
    'majorana': 'majorana',
    'weyl': 'weyl',
    'dirac': 'regular',
    'flagdipole': 'flagdipole',
}


def expected_flag_dipole_class(u, tol=1e-9):
    """6 along e3, 5 in the e1-e2 plane, 4 otherwise."""
    direction = np.asarray(u, dtype=float) / np.linalg.norm(u)
    if abs(abs(direction[2]) - 1.0) <= tol:
        return 6
    if abs(direction[2]) <= tol:
        return 5
    return 4


class SpinorFactory(SpinorlabBase):
    table_title = 'spinor documents'
    table_columns = ('label', 'rep', 'components', 'class')

    def build(self, family, alpha=1.0, beta=0.0, conjugacy=SELF, helicity=None, p=(0.0, 0.0, 0.0), m=1.0,
              u=(0.0, 0.0, 1.0), epsilon=1, handedness='left', psi_even=None):
        """Documents for one family with the given parameters, plus the class each should land in."""
        momentum = np.asarray(p, dtype=float)
        phi = WeylC2([alpha, beta])

        if family == 'elko':
            if helicity is not None:
                lam = elko_spinor(helicity, conjugacy, momentum, m)
                label = f"elko/{conjugacy}/({lam.helicity[0]},{lam.helicity[1]})"
            elif np.linalg.norm(momentum) > 0:
                raise HelicityError("(make.build) a boosted ELKO needs --helicity")
            else:
                lam = elko_rest(phi, conjugacy)
                label = f"elko/{conjugacy}"
            return [SpinorDocument(lam.spinor, label, momentum, float(m))], 5

        if family == 'majorana':
            plus, minus = majorana_from_weyl(weyl_spinor(phi, handedness), self.tolerance)
            return [SpinorDocument(plus, 'majorana/+'), SpinorDocument(minus, 'majorana/-')], 5

        if family == 'weyl':
            return [SpinorDocument(weyl_spinor(phi, handedness), f"weyl/{handedness}")], 6

        if family == 'dirac':
            psi = dirac_from_left(phi, momentum, m, epsilon)
            return [SpinorDocument(psi, f"dirac/{epsilon:+d}", momentum, float(m))], 2

        if family == 'flagdipole':
            Psi = ONE if psi_even is None else operator_spinor(*psi_even)
            psi = operator_spinor_projection(Psi, DirectionElement.spatial(u))
            label = 'flagdipole/' + ','.join(f"{x:g}" for x in np.asarray(u, dtype=float))
            return [SpinorDocument(psi, label)], expected_flag_dipole_class(u)

        raise ValueError(f"unknown family '{family}', expected one of {FAMILIES}")

    def sample(self, family, count):
        rng = self.rng()
        generator = GENERATORS[RANDOM_FAMILIES[family]]
        documents = [SpinorDocument(generator(rng), f"{family}/random/{i}") for i in range(count)]
        expected = {'elko': 5, 'majorana': 5, 'weyl': 6, 'flagdipole': 4}.get(family)
        return documents, expected

    def run(self, family, output=None, as_table=False, random=None, **parameters):
        if random:
            documents, expected = self.sample(family, random)
            self.logger.info(f"🎲 drawing {random} random {family} spinors (seed {self.settings.seed})")
        else:
            documents, expected = self.build(family, **parameters)
            self.logger.info(f"🧪 built {len(documents)} {family} spinor(s)")

        documents = [
            SpinorDocument(d.spinor.to_rep(self.settings.rep), d.label, d.momentum, d.mass)
            for d in documents
        ]
        records = []
        for document in documents:
            record = document.as_record()
            label = classify(bilinears(document.spinor, self.tolerance), self.tolerance).label
            if expected is not None and label != expected:
                self.flag(record, ClassInconsistencyError(
                    f"(make.run) {document.label} classifies as {label}, expected {expected}"
                ))
            records.append((record, label))

        if as_table:
            rows = [dict(record, **{'class': label}) for record, label in records]
            self.emit(rows, output, as_table=True)
        else:
            self.emit([record for record, _ in records], output)
        return documents
