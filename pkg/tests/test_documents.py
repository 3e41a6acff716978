# tests/test_documents.py
import json

import numpy as np
from numpy.testing import assert_allclose
from pytest import mark, raises

from spinorlab.algebra.gamma import CHIRAL, STANDARD
from spinorlab.lib.bootstrap import logger
from spinorlab.lib.documents import SpinorDocument, parse_csv_row, parse_json_line, read_documents, write_lines
from spinorlab.lib.errors import DocumentError
from spinorlab.spinors.spinor import SpinorC4


def test_json_line():
    text = json.dumps({
        'rep': 'standard',
        'components': [[1, 0], [0, 2], 3, [0, 0]],
        'label': 'sample',
        'momentum': [0, 0, 1],
        'mass': 2,
    })
    document = parse_json_line(text, CHIRAL, 4)
    assert document.rep == STANDARD
    assert document.label == 'sample'
    assert document.line == 4
    assert document.mass == 2.0
    assert_allclose(document.momentum, [0, 0, 1])
    assert_allclose(document.spinor.components, [1, 2j, 3, 0])


def test_json_line_takes_default_rep():
    assert parse_json_line('{"components": [1, 0, 0, 0]}', STANDARD).rep == STANDARD


@mark.parametrize('text', [
    'not json',
    '[1, 2, 3, 4]',
    '{"label": "no components"}',
    '{"components": [[1, 0], [0, 0], [1, 0]]}',
    '{"components": [[1, 0, 0], [0, 0], [1, 0], [0, 0]]}',
    '{"components": [["a", 0], [0, 0], [1, 0], [0, 0]]}',
    '{"components": [1, 0, 0, 0], "rep": "weyl"}',
    '{"components": [1, 0, 0, 0], "momentum": [1, 2]}',
])
def test_malformed_json_lines(text):
    with raises(DocumentError):
        parse_json_line(text, CHIRAL, 1)


def test_csv_row():
    document = parse_csv_row(['1', '0', '0', '-1', '0.5', '0', '0', '0'], STANDARD, 2)
    assert document.rep == STANDARD
    assert_allclose(document.spinor.components, [1, -1j, 0.5, 0])
    with raises(DocumentError):
        parse_csv_row(['1', '0'], CHIRAL)
    with raises(DocumentError):
        parse_csv_row(['1', '0', 'x', '0', '0', '0', '0', '0'], CHIRAL)
    with raises(DocumentError):
        parse_csv_row(['nan', '0', '0', '0', '0', '0', '0', '0'], CHIRAL)


def test_read_documents(tmp_path):
    path = tmp_path / 'spinors.jsonl'
    path.write_text('{"components": [1, 0, 1, 0], "label": "a"}\n\n{"components": [0, 1, 0, 1]}\n')
    documents = read_documents(str(path), CHIRAL, logger)
    assert [d.label for d in documents] == ['a', None]
    assert [d.line for d in documents] == [1, 3]

    path = tmp_path / 'spinors.csv'
    path.write_text('# re1,im1,re2,im2,re3,im3,re4,im4\n1,0,0,0,1,0,0,0\n')
    documents = read_documents(str(path), STANDARD, logger)
    assert len(documents) == 1
    assert documents[0].rep == STANDARD

    with raises(DocumentError):
        read_documents(str(tmp_path / 'missing.jsonl'), CHIRAL, logger)


def test_records_round_through_files(tmp_path):
    document = SpinorDocument(SpinorC4([1, 1j, 0, 0.5], STANDARD), 'x', np.array([0.0, 0.0, 1.0]), 1.0)
    path = tmp_path / 'out.jsonl'
    write_lines([document.to_json()], str(path), logger)
    record = json.loads(path.read_text())
    assert record == {
        'rep': 'standard',
        'components': [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.5, 0.0]],
        'label': 'x',
        'momentum': [0.0, 0.0, 1.0],
        'mass': 1.0,
    }
    (parsed,) = read_documents(str(path), CHIRAL, logger)
    assert parsed.spinor.isclose(document.spinor)
