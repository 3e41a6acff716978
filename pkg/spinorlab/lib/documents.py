# lib/documents.py
"""
Reading and writing spinor documents.

A JSON document holds one spinor per line:

    {"rep": "chiral", "components": [[1, 0], [0, 0], [1, 0], [0, 0]], "label": "...",
     "momentum": [0, 0, 1], "mass": 1.0}

Only "components" is required. A CSV document holds eight numeric columns
per row (re/im interleaved) and takes its representation from the caller.
"""
import csv
import json
from dataclasses import dataclass
import click
import numpy as np

from ..algebra.gamma import REPRESENTATIONS
from ..spinors.spinor import SpinorC4
from .errors import DocumentError
from .utils import to_builtin

CSV_SUFFIXES = ('.csv',)


@dataclass(frozen=True, eq=False)
class SpinorDocument:
    spinor: SpinorC4
    label: str = None
    momentum: np.ndarray = None
    mass: float = None
    line: int = 0

    @property
    def rep(self):
        return self.spinor.rep

    def as_record(self):
        record = {
            'rep': self.spinor.rep,
            'components': [[z.real, z.imag] for z in self.spinor.components],
        }
        if self.label is not None:
            record['label'] = self.label
        if self.momentum is not None:
            record['momentum'] = self.momentum
        if self.mass is not None:
            record['mass'] = self.mass
        return to_builtin(record)

    def to_json(self):
        return json.dumps(self.as_record())


def _components(pairs, line):
    if not isinstance(pairs, list) or len(pairs) != 4:
        raise DocumentError(f"(documents.parse_json_line) line {line}: 'components' needs exactly 4 [re, im] pairs")
    values = []
    for pair in pairs:
        if isinstance(pair, (int, float)):
            pair = [pair, 0.0]
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"(documents.parse_json_line) line {line}: each component must be [re, im]")
        try:
            values.append(complex(float(pair[0]), float(pair[1])))
        except (TypeError, ValueError):
            raise DocumentError(f"(documents.parse_json_line) line {line}: non-numeric component {pair!r}")
    values = np.array(values)
    if not np.all(np.isfinite(values)):
        raise DocumentError(f"(documents.parse_json_line) line {line}: components must be finite")
    return values


def parse_json_line(text, default_rep, line=0):
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"(documents.parse_json_line) line {line}: invalid JSON ({e.msg})")
    if not isinstance(record, dict) or 'components' not in record:
        raise DocumentError(f"(documents.parse_json_line) line {line}: expected an object with 'components'")

    rep = record.get('rep', default_rep)
    if rep not in REPRESENTATIONS:
        raise DocumentError(f"(documents.parse_json_line) line {line}: unknown representation '{rep}'")
    label = record.get('label')
    momentum = record.get('momentum')
    mass = record.get('mass')
    try:
        if momentum is not None:
            momentum = np.array(momentum, dtype=float).reshape(3)
        if mass is not None:
            mass = float(mass)
    except (TypeError, ValueError):
        raise DocumentError(f"(documents.parse_json_line) line {line}: momentum needs 3 numbers and mass a number")

    components = _components(record['components'], line)
    return SpinorDocument(SpinorC4(components, rep, label), label, momentum, mass, line)


def parse_csv_row(row, rep, line=0):
    if len(row) != 8:
        raise DocumentError(f"(documents.parse_csv_row) line {line}: expected 8 columns, got {len(row)}")
    try:
        values = np.array([float(cell) for cell in row])
    except ValueError:
        raise DocumentError(f"(documents.parse_csv_row) line {line}: non-numeric column")
    if not np.all(np.isfinite(values)):
        raise DocumentError(f"(documents.parse_csv_row) line {line}: components must be finite")
    return SpinorDocument(SpinorC4(values[0::2] + 1j * values[1::2], rep), line=line)


def _is_csv(path):
    return str(path).lower().endswith(CSV_SUFFIXES)


def read_documents(path, default_rep, logger):
    """Documents from a JSON lines or CSV file; '-' reads JSON lines from stdin."""
    try:
        with click.open_file(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise DocumentError(f"(documents.read_documents) cannot read {path}: {e}")

    documents = []
    if _is_csv(path):
        for line, row in enumerate(csv.reader(text.splitlines()), start=1):
            if not row or row[0].lstrip().startswith('#'):
                continue
            documents.append(parse_csv_row(row, default_rep, line))
    else:
        for line, raw in enumerate(text.splitlines(), start=1):
            if not raw.strip():
                continue
            documents.append(parse_json_line(raw, default_rep, line))
    logger.debug(f"(documents.read_documents) read {len(documents)} documents from {path}")
    return documents


def write_lines(lines, output, logger):
    """Write lines to a file or, when output is None or '-', to stdout."""
    target = output or '-'
    try:
        with click.open_file(target, 'w') as f:
            for line in lines:
                f.write(line + '\n')
    except OSError as e:
        raise DocumentError(f"(documents.write_lines) cannot write {target}: {e}")
    if output and output != '-':
        logger.info(f"📝 wrote {len(lines)} lines to {output}")
