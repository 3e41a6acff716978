# cmd/base.py
import numpy as np

from ..lib.documents import read_documents, write_lines
from ..lib.errors import EXIT_INCONSISTENT, EXIT_OK, NullSpinorError, SpinorlabError
from ..lib.templating import render_table
from ..lib.utils import to_json_line


class SpinorlabBase:
    """Shared plumbing for the batch commands: settings, input documents and report output."""

    table_title = 'report'
    table_columns = ()

    def __init__(self, settings, logger):
        self.settings = settings
        self.logger = logger
        self.exit_code = EXIT_OK

    @property
    def tolerance(self):
        return self.settings.tolerance

    def rng(self, seed=None):
        return np.random.default_rng(self.settings.seed if seed is None else seed)

    def load(self, input_path):
        return read_documents(input_path, self.settings.rep, self.logger)

    def flag(self, record, error):
        """Mark a record as failed; every error but a null spinor raises the exit code."""
        record['error'] = f"{type(error).__name__}: {error}"
        if not isinstance(error, NullSpinorError):
            self.exit_code = max(self.exit_code, getattr(error, 'exit_code', EXIT_INCONSISTENT))
        self.logger.warning(f"⚠️ line {record.get('line', '?')}: {error}")
        return record

    def table_row(self, record):
        return record

    def emit(self, records, output=None, as_table=False, footer=None):
        if as_table:
            rows = [self.table_row(record) for record in records]
            lines = [render_table(self.table_title, list(self.table_columns), rows, self.logger, footer)]
        else:
            lines = [to_json_line(record) for record in records]
        write_lines(lines, output, self.logger)

    def per_record(self, documents, build):
        """Run build(document) for every document, flagging library errors on the record."""
        records = []
        for document in documents:
            record = {'line': document.line, 'label': document.label, 'rep': document.rep}
            try:
                record.update(build(document))
                record['error'] = None
            except SpinorlabError as e:
                self.flag(record, e)
            records.append(record)
        return records
