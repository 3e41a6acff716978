# tests/test_cli.py
import json

from click.testing import CliRunner
from pytest import fixture, mark

from spinorlab import __version__
from spinorlab.cli import cli


@fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


@fixture
def runner():
    return CliRunner()


def read_records(path):
    return [json.loads(line) for line in path.read_text().splitlines() if line.strip()]


def invoke(runner, *args):
    return runner.invoke(cli, [str(arg) for arg in args])


@mark.parametrize('family,options,label', [
    ('elko', [], 5),
    ('elko', ['--helicity', '+', '--p', '0,0,2', '--conjugacy', 'anti'], 5),
    ('majorana', ['--alpha', '1', '--beta', '0.5j'], 5),
    ('weyl', ['--handedness', 'right'], 6),
    ('dirac', ['--p', '0.3,0,0.4', '--epsilon=-1'], 2),
    ('flagdipole', ['--u', '0.7071,0,0.7071'], 4),
    ('flagdipole', ['--u', '1,0,0'], 5),
])
def test_make_then_classify(family, options, label, runner, workdir):
    made = invoke(runner, 'make', family, *options, '--output', workdir / 'made.jsonl')
    assert made.exit_code == 0, made.output
    documents = read_records(workdir / 'made.jsonl')
    assert documents and all(len(d['components']) == 4 for d in documents)

    classified = invoke(runner, 'classify', workdir / 'made.jsonl', '--output', workdir / 'classes.jsonl')
    assert classified.exit_code == 0, classified.output
    records = read_records(workdir / 'classes.jsonl')
    assert [record['class'] for record in records] == [label] * len(documents)
    assert all(record['error'] is None for record in records)


def test_make_in_standard_representation(runner, workdir):
    result = invoke(runner, 'make', 'dirac', '--rep', 'standard', '--output', workdir / 'made.jsonl')
    assert result.exit_code == 0
    (document,) = read_records(workdir / 'made.jsonl')
    assert document['rep'] == 'standard'


def test_make_random(runner, workdir):
    result = invoke(runner, 'make', 'flagdipole', '--random', 5, '--seed', 3, '--output', workdir / 'made.jsonl')
    assert result.exit_code == 0
    assert len(read_records(workdir / 'made.jsonl')) == 5


def test_boosted_elko_needs_helicity(runner, workdir):
    result = invoke(runner, 'make', 'elko', '--p', '0,0,1', '--output', workdir / 'made.jsonl')
    assert result.exit_code == 2


def test_bad_vector_option(runner, workdir):
    result = invoke(runner, 'make', 'dirac', '--p', '1,2')
    assert result.exit_code != 0
    assert 'momentum' in result.output


def test_classify_with_extras(runner, workdir):
    (workdir / 'in.jsonl').write_text(
        '{"components": [[1, 0], [0, 0], [0, 0], [0, 0]], "rep": "standard", "label": "rest"}\n'
    )
    result = invoke(runner, 'classify', workdir / 'in.jsonl', '--with-mapping', '--with-hopf',
                    '--output', workdir / 'out.jsonl')
    assert result.exit_code == 0
    (record,) = read_records(workdir / 'out.jsonl')
    assert record['label'] == 'rest'
    assert record['class'] == 2
    assert record['mapping']['mappable']['own_class'] is True
    assert set(record['hopf']) == {'J0', 'J1', 'J2', 'J3', 'omega'}


def test_classify_csv_and_table(runner, workdir):
    (workdir / 'in.csv').write_text('1,0,0,0,1,0,0,0\n0,0,1,0,0,0,0,0\n')
    result = invoke(runner, 'classify', workdir / 'in.csv', '--table', '--output', workdir / 'out.txt')
    assert result.exit_code == 0
    table = (workdir / 'out.txt').read_text()
    assert 'Lounesto classification' in table
    assert 'class 2: 1' in table
    assert 'class 6: 1' in table


def test_empty_input(runner, workdir):
    (workdir / 'empty.jsonl').write_text('')
    result = invoke(runner, 'classify', workdir / 'empty.jsonl', '--output', workdir / 'out.jsonl')
    assert result.exit_code == 0
    assert read_records(workdir / 'out.jsonl') == []


def test_malformed_input(runner, workdir):
    (workdir / 'bad.jsonl').write_text('{"components": [1, 2]}\n')
    assert invoke(runner, 'classify', workdir / 'bad.jsonl').exit_code == 1
    assert invoke(runner, 'classify', workdir / 'missing.jsonl').exit_code == 1


def test_null_spinor_is_flagged(runner, workdir):
    (workdir / 'in.jsonl').write_text('{"components": [0, 0, 0, 0]}\n{"components": [1, 0, 1, 0]}\n')
    result = invoke(runner, 'hopf', workdir / 'in.jsonl', '--output', workdir / 'out.jsonl')
    assert result.exit_code == 0
    null, regular = read_records(workdir / 'out.jsonl')
    assert null['error'].startswith('NullSpinorError')
    assert regular['error'] is None
    assert abs(regular['norm'] - 1.0) < 1e-12
    assert regular['discrepancy']['swapped'] is True


def test_map_check(runner, workdir):
    (workdir / 'in.jsonl').write_text(
        '{"components": [1, 0, [0, 1], 0], "rep": "standard"}\n'
        '{"components": [0, [0, 1], 1, 0]}\n'
    )
    result = invoke(runner, 'map-check', workdir / 'in.jsonl', '--output', workdir / 'out.jsonl')
    assert result.exit_code == 0
    dirac, elko = read_records(workdir / 'out.jsonl')
    assert dirac['class'] == 3
    assert dirac['mappable'] is True
    assert dirac['component_gap'] < 1e-12
    assert elko['class'] == 5
    assert elko['mappable'] is None


@mark.parametrize('suite', ['fierz', 'hopf', 'projectors', 'mapping'])
def test_verify_suites(suite, runner, workdir):
    result = invoke(runner, 'verify', suite, '--samples', 8, '--output', workdir / 'checks.jsonl')
    assert result.exit_code == 0, result.output
    records = read_records(workdir / 'checks.jsonl')
    assert records
    assert all(record['suite'] == suite and record['passed'] for record in records)


def test_verify_is_seeded(runner, workdir):
    for name in ('a', 'b'):
        invoke(runner, 'verify', 'hopf', '--samples', 5, '--seed', 11, '--output', workdir / f'{name}.jsonl')
    assert read_records(workdir / 'a.jsonl') == read_records(workdir / 'b.jsonl')


def test_settings_from_env(runner, workdir):
    (workdir / 'in.jsonl').write_text('{"components": [1, 0, 1, 0]}\n')
    result = invoke(runner, 'classify', workdir / 'in.jsonl', '-e', 'SPINORLAB_TOLERANCE=1e-6',
                    '--output', workdir / 'out.jsonl')
    assert result.exit_code == 0
    (record,) = read_records(workdir / 'out.jsonl')
    assert record['tolerance'] == 1e-6


def test_bad_env_and_log_level(runner, workdir):
    (workdir / 'in.jsonl').write_text('{"components": [1, 0, 1, 0]}\n')
    assert invoke(runner, 'classify', workdir / 'in.jsonl', '-e', 'NOVALUE').exit_code != 0
    assert invoke(runner, 'classify', workdir / 'in.jsonl', '--log-level', 'LOUD').exit_code != 0
    assert invoke(runner, 'classify', workdir / 'in.jsonl', '-e', 'SPINORLAB_REP=weyl').exit_code == 1


def test_info(runner, workdir):
    (workdir / 'spinorlab.yml').write_text('seed: 42\n')
    result = invoke(runner, 'info')
    assert result.exit_code == 0
    assert __version__ in result.output
    assert 'Seed: 42' in result.output


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output
