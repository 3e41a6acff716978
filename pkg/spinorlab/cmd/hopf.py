# cmd/hopf.py
import numpy as np

from ..lib.errors import NullSpinorError
from ..spinors.hopf import (
    component_sigma,
    direct_discrepancy,
    hopf_from_components,
    hopf_via_quaternions,
    instanton_obstruction,
)
from .base import SpinorlabBase


class HopfProjector(SpinorlabBase):
    table_title = 'Hopf projection S7 -> S4'
    table_columns = ('line', 'label', 'sigma', 'J0', 'J1', 'J2', 'J3', 'omega', 'norm', 'swapped', 'on_s7', 'error')

    def point(self, document):
        psi = document.spinor
        sigma = component_sigma(psi)
        if sigma == 0.0:
            raise NullSpinorError("(hopf.point) the zero spinor has no Hopf image")
        unit = psi.scaled(1.0 / np.sqrt(sigma))
        components = hopf_from_components(unit)
        quaternions = hopf_via_quaternions(unit, max(self.tolerance, 1e-12))
        obstruction = instanton_obstruction(psi, self.tolerance)
        return {
            'tolerance': self.tolerance,
            'sigma': sigma,
            'point': components.as_dict(),
            'quaternion_route': quaternions.as_dict(),
            'norm': components.norm(),
            'route_gap': float(np.max(np.abs(components.as_array() - quaternions.as_array()))),
            'discrepancy': direct_discrepancy(psi),
            'current_norm': obstruction.current_norm,
            'on_s7': obstruction.on_s7,
            'singular': obstruction.singular,
        }

    def table_row(self, record):
        row = dict(record)
        row.update(record.get('point', {}))
        if 'discrepancy' in record:
            row['swapped'] = record['discrepancy']['swapped']
        return row

    def run(self, input_path, output=None, as_table=False):
        documents = self.load(input_path)
        self.logger.info(f"🌐 projecting {len(documents)} spinors onto S4")
        records = self.per_record(documents, self.point)
        off_sphere = sum(1 for record in records if record.get('on_s7') is False)
        if off_sphere:
            self.logger.info(f"🚫 {off_sphere} spinor(s) have sigma = 0 and cannot be normalized onto S7")
        self.emit(records, output, as_table, footer=f"tolerance {self.tolerance:g}")
        return records
