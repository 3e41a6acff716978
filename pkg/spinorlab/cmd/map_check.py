# cmd/map_check.py
from ..spinors.bilinears import bilinears
from ..spinors.classifier import classify
from ..spinors.mapping import elko_map_conditions, mappability
from .base import SpinorlabBase


class MappingChecker(SpinorlabBase):
    table_title = 'Dirac to ELKO mapping conditions'
    table_columns = ('line', 'label', 'class', 'common', 'class2', 'class3', 'component_gap', 'mappable', 'error')

    def conditions(self, document):
        psi = document.spinor
        label = classify(bilinears(psi, self.tolerance), self.tolerance).label
        report = elko_map_conditions(psi)
        record = {'tolerance': self.tolerance, 'class': label}
        record.update(report.as_dict())
        record['component_gap'] = report.component_gap()
        if label <= 3:
            verdict = mappability(psi, self.tolerance)
            record['mappable'] = verdict.mappable
            record['mappable_as'] = {'class1': verdict.class1, 'class2': verdict.class2, 'class3': verdict.class3}
        else:
            record['mappable'] = None
            record['mappable_as'] = None
        return record

    def table_row(self, record):
        row = dict(record)
        if 'common' in record:
            row['common'] = max(abs(value) for value in record['common'])
        return row

    def run(self, input_path, output=None, as_table=False):
        documents = self.load(input_path)
        self.logger.info(f"🧭 checking mapping conditions for {len(documents)} spinors")
        records = self.per_record(documents, self.conditions)
        mappable = sum(1 for record in records if record.get('mappable'))
        self.emit(records, output, as_table, footer=f"{mappable}/{len(records)} mappable in their own class")
        return records
