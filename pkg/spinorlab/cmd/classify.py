# cmd/classify.py
import numpy as np

from ..spinors.bilinears import aggregate, bilinears, fierz_residuals, is_boomerang
from ..spinors.classifier import classify, verify_class_relations
from ..spinors.hopf import component_sigma, hopf_from_components
from ..spinors.mapping import elko_map_conditions, mappability
from .base import SpinorlabBase


class SpinorClassifier(SpinorlabBase):
    table_title = 'Lounesto classification'
    table_columns = ('line', 'label', 'class', 'name', 'sigma', 'omega', 'K_norm', 'S_norm',
                     'fierz', 'boomerang', 'marginal', 'error')

    def report(self, document, with_mapping=False, with_hopf=False):
        psi = document.spinor
        b = bilinears(psi, self.tolerance)
        lounesto = classify(b, self.tolerance, self.settings.marginal_factor)
        scale = b.scale ** 2
        fierz = {name: value / scale for name, value in fierz_residuals(b)._asdict().items()}
        relations = verify_class_relations(b, lounesto)

        record = {
            'tolerance': self.tolerance,
            'class': lounesto.label,
            'name': lounesto.name,
            'regular': lounesto.regular,
            'marginal': list(lounesto.marginal),
            'bilinears': b.as_dict(),
            'K_norm': float(np.linalg.norm(b.K)),
            'S_norm': float(np.linalg.norm(b.S)),
            'fierz': fierz,
            'boomerang': is_boomerang(aggregate(b), self.tolerance, psi.rep),
            'relations': dict(relations.residuals),
            'reported': dict(relations.reported),
        }
        if with_mapping:
            conditions = elko_map_conditions(psi).as_dict()
            if lounesto.regular:
                verdict = mappability(psi, self.tolerance)
                conditions['mappable'] = {'class1': verdict.class1, 'class2': verdict.class2,
                                          'class3': verdict.class3, 'own_class': verdict.mappable}
            record['mapping'] = conditions
        if with_hopf:
            sigma = component_sigma(psi)
            record['hopf'] = hopf_from_components(psi.scaled(1.0 / np.sqrt(sigma))).as_dict()
        self.logger.debug(f"(classify.report) line {document.line}: class {lounesto.label}")
        return record

    def table_row(self, record):
        row = dict(record)
        if 'fierz' in record:
            row['fierz'] = max(record['fierz'].values())
            row['sigma'] = record['bilinears']['sigma']
            row['omega'] = record['bilinears']['omega']
            row['marginal'] = ','.join(record['marginal']) or None
        return row

    def run(self, input_path, output=None, as_table=False, with_mapping=False, with_hopf=False):
        documents = self.load(input_path)
        self.logger.info(f"🔎 classifying {len(documents)} spinors (tolerance {self.tolerance:g})")
        records = self.per_record(documents, lambda document: self.report(document, with_mapping, with_hopf))

        counts = {}
        for record in records:
            if record.get('class') is not None:
                counts[record['class']] = counts.get(record['class'], 0) + 1
        summary = ', '.join(f"class {label}: {counts[label]}" for label in sorted(counts)) or 'no spinors'
        self.logger.info(f"📊 {summary}")
        self.emit(records, output, as_table, footer=f"tolerance {self.tolerance:g}; {summary}")
        return records
